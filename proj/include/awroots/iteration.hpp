#pragma once

#include <vector>

#include "awroots/bounds.hpp"
#include "awroots/parameters.hpp"

namespace awroots {

/// Ordered root angles, or iterates thereof.
using RootVector = std::vector<double>;

/// Record of a fixed-point run: every iterate, the step-norm sequence, the
/// contraction constant, and (when certified) the geometric a-priori bounds.
struct IterationTrace {
  std::vector<RootVector> iterates;    // iterates[0] is the Chebyshev initialization
  std::vector<double> step_deltas;     // Euclidean norms of consecutive differences
  double rho = 0.0;
  bool certified = false;              // rho < 1: geometric convergence guaranteed
  bool converged = false;              // step norm fell below step_tol
  double bracket_gap = 0.0;            // ||theta^+ - theta^-||
  std::vector<double> apriori_bounds;  // rho^l * bracket_gap per iterate (certified only)

  const RootVector& last() const { return iterates.back(); }
  int steps() const { return static_cast<int>(iterates.size()) - 1; }
};

/// Chebyshev angles pi j/(n+1), j = 1..n: the initialization, and the exact
/// roots of the all-zero-parameter degeneration.
RootVector chebyshev_init(int n);

/// One application of the fixed-point map
///   U_j(theta) = pi j/(n+1) - (1/(2(n+1))) [ sum_r nu_{a_r}(theta_j)
///            + sum_{k != j} ( nu_q(theta_j+theta_k) + nu_q(theta_j-theta_k) ) ].
/// The true root vector is its unique fixed point. The map is globally
/// defined on R^n; iterates are never clamped to (0, pi).
RootVector fixed_point_map(const ParameterSet& params, const RootVector& theta);

/// Contraction constant
///   rho_n = ((n-1)/(n+1)) 2|q|/(1-|q|) + (1/(n+1)) sum_r |a_r|/(1-|a_r|),
/// a uniform bound on the spectral norm of the fixed-point Jacobian.
double rho(const ParameterSet& params);

/// Runs the recurrence from chebyshev_init until the step norm drops below
/// step_tol or max_iters applications have been made. When rho >= 1 the
/// iteration still runs but the trace carries no certificate.
IterationTrace iterate(const ParameterSet& params, int max_iters = 200, double step_tol = 1e-13);

/// Closed-form first approximation: the map applied once to the Chebyshev
/// angles.
RootVector first_order_approx(const ParameterSet& params);

/// A-priori bound rho^l * ||theta^+ - theta^-|| on the distance from iterate
/// l to the true roots. Requires rho < 1.
double error_certificate(const IterationTrace& trace, const BoundsResult& bounds, int l);

}  // namespace awroots

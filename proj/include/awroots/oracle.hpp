#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "awroots/bounds.hpp"
#include "awroots/iteration.hpp"
#include "awroots/parameters.hpp"

namespace awroots {

using SquareMatrix = std::vector<std::vector<double>>;

/// Raised when the damped Newton solver exhausts its step budget; carries the
/// best iterate seen and its residual max-norm.
struct solver_error : std::runtime_error {
  solver_error(const std::string& what, RootVector best_iterate, double best_residual)
      : std::runtime_error(what), best(std::move(best_iterate)), residual(best_residual) {}
  RootVector best;
  double residual = 0.0;
};

/// Residuals of the transcendental system,
///   G_j(theta) = sum_r v_{a_r}(theta_j)
///              + sum_{k != j} ( v_q(theta_j+theta_k) + v_q(theta_j-theta_k) )
///              - 2 pi j,
/// zero exactly at the root angles.
std::vector<double> system_residual(const ParameterSet& params, const RootVector& theta);

/// Exact Jacobian DG of the residual map, assembled entrywise from u-kernel
/// values. Symmetric, and related to the fixed-point Jacobian by
/// DG = 2(n+1)(I - DU).
SquareMatrix jacobian(const ParameterSet& params, const RootVector& theta);

/// Solves G(theta) = 0 by damped Newton steps (Armijo backtracking on the
/// merit 1/2 ||G||^2) from the Chebyshev initialization. G is the gradient of
/// a strictly convex potential, so the solution is unique and reachable from
/// any start. Stops when max_j |G_j| < tol.
RootVector newton_solve(const ParameterSet& params, double tol = 1e-12, int max_steps = 100);

/// |P_j - 1| for the algebraic product form of the system, evaluated in
/// complex arithmetic with numerator/denominator factors paired so every
/// partial product stays near the unit circle. Independent of the kernel
/// evaluation path.
std::vector<double> product_residual(const ParameterSet& params, const RootVector& theta);

/// Value of the convex potential whose gradient is system_residual. tol is
/// the certified truncation tolerance passed through to v_integral.
double morse_value(const ParameterSet& params, const RootVector& theta, double tol = 1e-12);

/// Extreme eigenvalues and spectral norm of the fixed-point Jacobian DU at
/// theta, checked against the uniform bound rho_n.
struct SpectralCheck {
  double spectral_norm = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double rho_n = 0.0;
  bool rho_bound_ok = false;  // spectral_norm <= rho_n + 1e-10
};
SpectralCheck spectral_norm_check(const ParameterSet& params, const RootVector& theta);

/// Combined independent verification of a candidate root vector.
struct VerificationReport {
  double system_residual = 0.0;           // max-norm of the transcendental residuals
  double product_residual = 0.0;          // max |P_j - 1|
  std::vector<bool> in_bounds;            // bracket membership per index
  double jacobian_symmetry_defect = 0.0;  // max |DG_jk - DG_kj|
  double spectral_norm = 0.0;
  bool rho_bound_ok = false;
};
VerificationReport verify(const ParameterSet& params, const RootVector& theta,
                          const BoundsResult& bounds);

}  // namespace awroots

#include "awroots/iteration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "awroots/kernel.hpp"

namespace awroots {

namespace {

constexpr double pi = std::numbers::pi;

double l2_distance(const RootVector& x, const RootVector& y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

RootVector chebyshev_init(int n) {
  if (n < 1) throw std::invalid_argument("degree n must be at least 1");
  RootVector v(n);
  for (int j = 1; j <= n; ++j) v[j - 1] = pi * j / (n + 1.0);
  return v;
}

RootVector fixed_point_map(const ParameterSet& params, const RootVector& theta) {
  const int n = params.n;
  if (static_cast<int>(theta.size()) != n)
    throw std::invalid_argument("root vector size does not match the parameter degree");
  RootVector out(n);
  const double scale = 1.0 / (2.0 * (n + 1.0));
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (const auto& a : params.a) sum += 0.5 * nu_pair(a, theta[j]);
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      sum += nu_kernel(params.q, theta[j] + theta[k]) + nu_kernel(params.q, theta[j] - theta[k]);
    }
    out[j] = pi * (j + 1) / (n + 1.0) - scale * sum;
  }
  return out;
}

double rho(const ParameterSet& params) {
  const double qm = std::abs(params.q);
  const double q_term = ((params.n - 1.0) / (params.n + 1.0)) * (2.0 * qm / (1.0 - qm));
  double a_sum = 0.0;
  for (const auto& a : params.a) a_sum += a.modulus / (1.0 - a.modulus);
  return q_term + a_sum / (params.n + 1.0);
}

IterationTrace iterate(const ParameterSet& params, int max_iters, double step_tol) {
  if (max_iters < 0) throw std::invalid_argument("max_iters must be nonnegative");
  if (step_tol < 0.0) throw std::invalid_argument("step_tol must be nonnegative");

  IterationTrace trace;
  trace.rho = rho(params);
  trace.certified = trace.rho < 1.0;
  trace.bracket_gap = bracket_gap(root_bounds(params));
  trace.iterates.push_back(chebyshev_init(params.n));

  for (int l = 0; l < max_iters; ++l) {
    RootVector next = fixed_point_map(params, trace.iterates.back());
    const double delta = l2_distance(next, trace.iterates.back());
    trace.iterates.push_back(std::move(next));
    trace.step_deltas.push_back(delta);
    if (delta < step_tol) {
      trace.converged = true;
      break;
    }
  }

  if (trace.certified) {
    double factor = 1.0;
    for (std::size_t l = 0; l < trace.iterates.size(); ++l) {
      trace.apriori_bounds.push_back(factor * trace.bracket_gap);
      factor *= trace.rho;
    }
  }
  return trace;
}

RootVector first_order_approx(const ParameterSet& params) {
  return fixed_point_map(params, chebyshev_init(params.n));
}

double error_certificate(const IterationTrace& trace, const BoundsResult& bounds, int l) {
  if (l < 0) throw std::invalid_argument("iterate index must be nonnegative");
  if (!(trace.rho < 1.0)) throw std::domain_error("no contraction certificate: rho >= 1");
  return std::pow(trace.rho, l) * bracket_gap(bounds);
}

}  // namespace awroots

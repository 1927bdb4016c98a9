#include "awroots/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "awroots/kernel.hpp"

namespace awroots {

namespace {

constexpr double pi = std::numbers::pi;

void check_size(const ParameterSet& params, const RootVector& theta) {
  if (static_cast<int>(theta.size()) != params.n)
    throw std::invalid_argument("root vector size does not match the parameter degree");
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double merit(const std::vector<double>& g) {
  double s = 0.0;
  for (double x : g) s += x * x;
  return 0.5 * s;
}

}  // namespace

std::vector<double> system_residual(const ParameterSet& params, const RootVector& theta) {
  check_size(params, theta);
  const int n = params.n;
  std::vector<double> g(n);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (const auto& a : params.a) sum += 0.5 * v_pair(a, theta[j]);
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      sum += v_kernel(params.q, theta[j] + theta[k]) + v_kernel(params.q, theta[j] - theta[k]);
    }
    g[j] = sum - 2.0 * pi * (j + 1);
  }
  return g;
}

SquareMatrix jacobian(const ParameterSet& params, const RootVector& theta) {
  check_size(params, theta);
  const int n = params.n;
  SquareMatrix dg(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    double diag = 0.0;
    for (const auto& a : params.a) diag += 0.5 * u_pair(a, theta[j]);
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      const double plus = u_kernel(params.q, theta[j] + theta[k]);
      const double minus = u_kernel(params.q, theta[j] - theta[k]);
      diag += plus + minus;
      dg[j][k] = plus - minus;
    }
    dg[j][j] = diag;
  }
  return dg;
}

RootVector newton_solve(const ParameterSet& params, double tol, int max_steps) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_steps < 0) throw std::invalid_argument("max_steps must be nonnegative");
  const int n = params.n;

  RootVector theta = chebyshev_init(n);
  std::vector<double> g = system_residual(params, theta);
  RootVector best = theta;
  double best_residual = max_abs(g);

  for (int step = 0; step < max_steps; ++step) {
    if (max_abs(g) < tol) return theta;

    const SquareMatrix dg = jacobian(params, theta);
    Eigen::MatrixXd mat(n, n);
    Eigen::VectorXd rhs(n);
    for (int j = 0; j < n; ++j) {
      rhs(j) = -g[j];
      for (int k = 0; k < n; ++k) mat(j, k) = dg[j][k];
    }
    const Eigen::VectorXd dir = mat.ldlt().solve(rhs);  // DG is symmetric positive definite

    const double f0 = merit(g);
    const double g_norm2 = 2.0 * f0;
    double t = 1.0;
    RootVector candidate(n);
    std::vector<double> g_candidate;
    for (int halvings = 0;; ++halvings) {
      for (int j = 0; j < n; ++j) candidate[j] = theta[j] + t * dir(j);
      g_candidate = system_residual(params, candidate);
      if (merit(g_candidate) <= f0 - 1e-4 * t * g_norm2) break;
      if (halvings >= 60) break;  // step is below rounding resolution
      t *= 0.5;
    }
    theta = candidate;
    g = std::move(g_candidate);

    const double residual = max_abs(g);
    if (residual < best_residual) {
      best_residual = residual;
      best = theta;
    }
  }
  if (max_abs(g) < tol) return theta;
  throw solver_error("newton solver did not reach the requested residual tolerance", best,
                     best_residual);
}

std::vector<double> product_residual(const ParameterSet& params, const RootVector& theta) {
  check_size(params, theta);
  const int n = params.n;
  using cd = std::complex<double>;
  std::vector<double> res(n);
  for (int j = 0; j < n; ++j) {
    const cd ej = std::polar(1.0, theta[j]);
    cd prod(1.0, 0.0);
    for (const auto& a : params.a) {
      const cd ar = a.to_complex();
      prod *= (1.0 - ar * ej) / (ej - ar);
    }
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      const cd e_plus = std::polar(1.0, theta[j] + theta[k]);
      const cd e_minus = std::polar(1.0, theta[j] - theta[k]);
      prod *= (1.0 - params.q * e_plus) / (e_plus - params.q);
      prod *= (1.0 - params.q * e_minus) / (e_minus - params.q);
    }
    res[j] = std::abs(prod - 1.0);
  }
  return res;
}

double morse_value(const ParameterSet& params, const RootVector& theta, double tol) {
  check_size(params, theta);
  if (!(tol > 0.0)) throw std::invalid_argument("truncation tolerance must be positive");
  const int n = params.n;
  double value = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      value += v_integral(params.q, theta[j] + theta[k], tol) +
               v_integral(params.q, theta[j] - theta[k], tol);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (const auto& a : params.a) sum += 0.5 * v_integral_pair(a, theta[j], tol);
    value += sum - 2.0 * pi * (j + 1) * theta[j];
  }
  return value;
}

SpectralCheck spectral_norm_check(const ParameterSet& params, const RootVector& theta) {
  check_size(params, theta);
  const int n = params.n;
  const SquareMatrix dg = jacobian(params, theta);
  const double scale = 1.0 / (2.0 * (n + 1.0));
  Eigen::MatrixXd du(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) du(j, k) = (j == k ? 1.0 : 0.0) - scale * dg[j][k];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(du, Eigen::EigenvaluesOnly);
  SpectralCheck out;
  out.lambda_min = solver.eigenvalues().minCoeff();
  out.lambda_max = solver.eigenvalues().maxCoeff();
  out.spectral_norm = std::max(std::abs(out.lambda_min), std::abs(out.lambda_max));
  out.rho_n = rho(params);
  out.rho_bound_ok = out.spectral_norm <= out.rho_n + 1e-10;
  return out;
}

VerificationReport verify(const ParameterSet& params, const RootVector& theta,
                          const BoundsResult& bounds) {
  VerificationReport report;
  report.system_residual = max_abs(system_residual(params, theta));
  for (double x : product_residual(params, theta))
    report.product_residual = std::max(report.product_residual, x);

  // Slack of 1e-12 absorbs rounding at zero-width (Chebyshev) brackets.
  report.in_bounds.resize(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j)
    report.in_bounds[j] =
        bounds.lower[j] - 1e-12 <= theta[j] && theta[j] <= bounds.upper[j] + 1e-12;

  const SquareMatrix dg = jacobian(params, theta);
  for (std::size_t j = 0; j < dg.size(); ++j)
    for (std::size_t k = 0; k < dg.size(); ++k)
      report.jacobian_symmetry_defect =
          std::max(report.jacobian_symmetry_defect, std::abs(dg[j][k] - dg[k][j]));

  const SpectralCheck spectral = spectral_norm_check(params, theta);
  report.spectral_norm = spectral.spectral_norm;
  report.rho_bound_ok = spectral.rho_bound_ok;
  return report;
}

}  // namespace awroots

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "awroots/parameters.hpp"

namespace testsupport {

// Adaptive Simpson quadrature; the independent check for series-based integrals.
template <typename F>
double simpson_step(F&& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Central-difference gradient of a scalar function.
std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x, double h);

// Central-difference Jacobian of a vector function; entry (j, k) is dG_j/dx_k.
std::vector<std::vector<double>> fd_jacobian(
    const std::function<std::vector<double>(const std::vector<double>&)>& g,
    std::vector<double> x, double h);

// Twice the real part of the truncated series sum_k (2 a^k / k) sin(k theta);
// the brute-force oracle for conjugate-pair kernel contributions.
double nu_pair_series(std::complex<double> a, double theta, int terms);

// Random admissible parameter set: zero to two conjugate pairs, the rest real
// with random signs, all moduli below max_modulus, degree uniform in
// [n_min, n_max]. max_modulus <= 0.32 guarantees rho < 1 for every degree.
awroots::ParameterSet random_params(std::mt19937& rng, int n_min, int n_max, double max_modulus);

// Random point in (margin, pi - margin)^n.
std::vector<double> random_angles(std::mt19937& rng, int n, double margin = 0.05);

double linf_diff(const std::vector<double>& a, const std::vector<double>& b);
double l2_diff(const std::vector<double>& a, const std::vector<double>& b);
double max_abs(const std::vector<double>& v);

}  // namespace testsupport

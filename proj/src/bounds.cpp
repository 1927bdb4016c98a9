#include "awroots/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace awroots {

namespace {
constexpr double pi = std::numbers::pi;
}

std::pair<double, double> k_bounds(const ParameterSet& params) {
  const double qm = std::abs(params.q);
  double k_plus = (params.n - 1) * ((1.0 + qm) / (1.0 - qm));
  double k_minus = (params.n - 1) * ((1.0 - qm) / (1.0 + qm));
  for (const auto& a : params.a) {
    k_plus += 0.5 * ((1.0 + a.modulus) / (1.0 - a.modulus));
    k_minus += 0.5 * ((1.0 - a.modulus) / (1.0 + a.modulus));
  }
  return {k_minus, k_plus};
}

std::pair<double, double> crossover_from_k(double k_minus, double k_plus, int n) {
  if (!(k_plus > k_minus)) throw chebyshev_degenerate();
  const double spread = k_plus - k_minus;
  const double j_plus = (k_plus - n - 1.0) * k_minus / spread;
  const double j_minus = k_plus * (n + 1.0 - k_minus) / spread;
  return {j_minus, j_plus};
}

std::pair<double, double> crossover_indices(const ParameterSet& params) {
  const auto [k_minus, k_plus] = k_bounds(params);
  return crossover_from_k(k_minus, k_plus, params.n);
}

BoundsResult root_bounds(const ParameterSet& params) {
  const int n = params.n;
  BoundsResult out;
  out.lower.resize(n);
  out.upper.resize(n);
  out.lower_boxed.assign(n, false);
  out.upper_boxed.assign(n, false);

  const auto [k_minus, k_plus] = k_bounds(params);
  out.k_minus = k_minus;
  out.k_plus = k_plus;

  if (params.all_zero()) {
    out.j_minus = out.j_plus = std::numeric_limits<double>::quiet_NaN();
    out.chebyshev_exact = true;
    for (int j = 1; j <= n; ++j) out.lower[j - 1] = out.upper[j - 1] = pi * j / (n + 1.0);
    return out;
  }

  if (k_plus > k_minus) {
    const auto [j_minus, j_plus] = crossover_from_k(k_minus, k_plus, n);
    out.j_minus = j_minus;
    out.j_plus = j_plus;
  } else {
    // n = 1 with vanishing a-moduli: both families coincide, brackets are tight.
    out.j_minus = out.j_plus = std::numeric_limits<double>::quiet_NaN();
  }

  for (int j = 1; j <= n; ++j) {
    const double direct_lower = pi * j / k_plus;
    const double direct_upper = pi * j / k_minus;
    const double reflected_lower = pi * (1.0 - (n + 1.0 - j) / k_minus);
    const double reflected_upper = pi * (1.0 - (n + 1.0 - j) / k_plus);
    if (reflected_lower > direct_lower) {
      out.lower[j - 1] = reflected_lower;
      out.lower_boxed[j - 1] = true;
    } else {
      out.lower[j - 1] = direct_lower;
    }
    if (reflected_upper < direct_upper) {
      out.upper[j - 1] = reflected_upper;
      out.upper_boxed[j - 1] = true;
    } else {
      out.upper[j - 1] = direct_upper;
    }
  }
  return out;
}

double bracket_gap(const BoundsResult& bounds) {
  double sum = 0.0;
  for (std::size_t i = 0; i < bounds.lower.size(); ++i) {
    const double d = bounds.upper[i] - bounds.lower[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace awroots

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "awroots/parameters.hpp"

namespace awroots {

/// Signals that k_+ = k_-, in which case the roots degenerate to the exact
/// Chebyshev angles pi j/(n+1) and the crossover indices are undefined.
struct chebyshev_degenerate : std::domain_error {
  chebyshev_degenerate()
      : std::domain_error(
            "k_+ = k_-: roots degenerate to the exact Chebyshev angles pi j/(n+1)") {}
};

/// Per-root brackets together with the constants they are built from.
///
/// Each bracket is the intersection of two inequality families: the direct
/// one, pi j/k_+ <= theta_j <= pi j/k_-, counting from 0, and the reflected
/// one, pi(1 - (n+1-j)/k_-) <= theta_j <= pi(1 - (n+1-j)/k_+), counting from
/// pi. The boxed flags mark indices where the reflected family is strictly
/// sharper (the boxed entries of the printed tables).
struct BoundsResult {
  double k_minus = 0.0;
  double k_plus = 0.0;
  double j_minus = 0.0;
  double j_plus = 0.0;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<bool> lower_boxed;
  std::vector<bool> upper_boxed;
  bool chebyshev_exact = false;  // all-zero parameters: zero-width brackets
};

/// k_{+-,n} = (n-1)((1+|q|)/(1-|q|))^{+-1} + (1/2) sum_r ((1+|a_r|)/(1-|a_r|))^{+-1}.
/// Returns (k_minus, k_plus); only the moduli enter.
std::pair<double, double> k_bounds(const ParameterSet& params);

/// Crossover indices governing which inequality family is sharper:
///   j^+ = (k_+ - n - 1) k_- / (k_+ - k_-),
///   j^- = k_+ (n + 1 - k_-) / (k_+ - k_-).
/// Returns (j_minus, j_plus); throws chebyshev_degenerate when k_+ = k_-.
std::pair<double, double> crossover_indices(const ParameterSet& params);
std::pair<double, double> crossover_from_k(double k_minus, double k_plus, int n);

/// Brackets theta^-_j <= theta_j <= theta^+_j for every root angle, taking
/// the sharper family at each index. All-zero parameters yield the exact
/// Chebyshev angles with zero-width brackets and chebyshev_exact set.
BoundsResult root_bounds(const ParameterSet& params);

/// Euclidean norm of upper - lower.
double bracket_gap(const BoundsResult& bounds);

}  // namespace awroots

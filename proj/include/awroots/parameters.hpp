#pragma once

#include <array>
#include <complex>

#include "awroots/kernel.hpp"

namespace awroots {

/// Validated parameter set: four parameters in the open unit disk that are
/// closed under complex conjugation, a real deformation parameter q in
/// (-1, 1), and the polynomial degree n.
struct ParameterSet {
  std::array<KernelParam, 4> a;
  double q = 0.0;
  int n = 1;

  double max_modulus() const;
  /// True when every |a_r| and |q| vanish (the Chebyshev degeneration).
  bool all_zero() const;
};

/// Checks the admissibility hypotheses and returns the validated set.
/// Throws std::domain_error naming the violated hypothesis, or
/// std::invalid_argument for n < 1.
ParameterSet validate(const std::array<std::complex<double>, 4>& a, double q, int n);

}  // namespace awroots

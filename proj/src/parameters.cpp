#include "awroots/parameters.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace awroots {

double ParameterSet::max_modulus() const {
  double m = std::abs(q);
  for (const auto& p : a) m = std::max(m, p.modulus);
  return m;
}

bool ParameterSet::all_zero() const { return max_modulus() == 0.0; }

ParameterSet validate(const std::array<std::complex<double>, 4>& a, double q, int n) {
  if (n < 1) throw std::invalid_argument("polynomial degree n must be at least 1");
  if (!std::isfinite(q) || !(std::abs(q) < 1.0))
    throw std::domain_error("q must lie in the open interval (-1, 1)");
  for (std::size_t r = 0; r < 4; ++r) {
    if (!std::isfinite(a[r].real()) || !std::isfinite(a[r].imag()))
      throw std::domain_error("parameter a" + std::to_string(r + 1) + " must be finite");
    if (!(std::abs(a[r]) < 1.0))
      throw std::domain_error("parameter a" + std::to_string(r + 1) +
                              " must lie inside the open unit disk");
  }

  // Non-real parameters must occur together with their exact conjugates.
  std::array<bool, 4> matched{};
  for (std::size_t r = 0; r < 4; ++r) {
    if (matched[r] || a[r].imag() == 0.0) continue;
    bool found = false;
    for (std::size_t s = r + 1; s < 4 && !found; ++s) {
      if (!matched[s] && a[s].real() == a[r].real() && a[s].imag() == -a[r].imag()) {
        matched[r] = matched[s] = true;
        found = true;
      }
    }
    if (!found)
      throw std::domain_error("non-real parameter a" + std::to_string(r + 1) +
                              " lacks its complex-conjugate partner");
  }

  ParameterSet params;
  for (std::size_t r = 0; r < 4; ++r) params.a[r] = KernelParam::from_complex(a[r]);
  params.q = q;
  params.n = n;
  return params;
}

}  // namespace awroots

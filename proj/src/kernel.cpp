#include "awroots/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace awroots {

namespace {

constexpr double pi = std::numbers::pi;

void require_unit_disk(double eps) {
  if (!(std::abs(eps) < 1.0))
    throw std::domain_error("kernel parameter must lie strictly inside the unit disk");
}

}  // namespace

bool KernelParam::is_real() const { return argument == 0.0 || argument == pi; }

double KernelParam::real_value() const {
  if (!is_real()) throw std::logic_error("parameter is not real");
  return argument == 0.0 ? modulus : -modulus;
}

KernelParam KernelParam::from_complex(std::complex<double> z) {
  KernelParam p;
  p.modulus = std::abs(z);
  if (z.imag() == 0.0)
    p.argument = z.real() < 0.0 ? pi : 0.0;  // Arg(0) := 0
  else
    p.argument = std::arg(z);
  return p;
}

std::complex<double> KernelParam::to_complex() const {
  if (is_real()) return {real_value(), 0.0};
  return std::polar(modulus, argument);
}

double reduce_angle(double theta) {
  if (!std::isfinite(theta)) throw std::domain_error("angle must be finite");
  double r = std::remainder(theta, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

double u_kernel(double eps, double theta) {
  require_unit_disk(eps);
  const double c = std::cos(theta);
  return (1.0 - eps * eps) / (1.0 - 2.0 * eps * c + eps * eps);
}

double nu_kernel(double eps, double theta) {
  require_unit_disk(eps);
  if (eps == 0.0) return 0.0;
  const double t = reduce_angle(theta);
  if (t == pi) return 0.0;  // continuous extension, v_eps(pi) = pi
  return 2.0 * std::atan(((1.0 + eps) / (1.0 - eps)) * std::tan(0.5 * t)) - t;
}

double nu_fourier(double eps, double theta, int terms) {
  require_unit_disk(eps);
  if (terms < 1) throw std::invalid_argument("at least one Fourier term is required");
  double sum = 0.0;
  double power = 1.0;
  for (int k = 1; k <= terms; ++k) {
    power *= eps;
    sum += (2.0 * power / k) * std::sin(k * theta);
  }
  return sum;
}

double v_kernel(double eps, double theta) { return theta + nu_kernel(eps, theta); }

double nu_pair(const KernelParam& a, double theta) {
  return nu_kernel(a.modulus, theta + a.argument) + nu_kernel(a.modulus, theta - a.argument);
}

double u_pair(const KernelParam& a, double theta) {
  return u_kernel(a.modulus, theta + a.argument) + u_kernel(a.modulus, theta - a.argument);
}

double v_pair(const KernelParam& a, double theta) { return 2.0 * theta + nu_pair(a, theta); }

double v_integral(double eps, double theta, double tol) {
  require_unit_disk(eps);
  if (!(tol > 0.0)) throw std::invalid_argument("truncation tolerance must be positive");
  const double base = 0.5 * theta * theta;
  if (eps == 0.0) return base;

  const double mod = std::abs(eps);
  double sum = 0.0;
  double power = 1.0;  // eps^k, signed
  for (long k = 1;; ++k) {
    power *= eps;
    const double half = std::sin(0.5 * k * theta);
    sum += (4.0 * power / (double(k) * double(k))) * half * half;
    const double kp1 = double(k + 1);
    const double tail = 2.0 * std::abs(power) * mod / (kp1 * kp1 * (1.0 - mod));
    if (tail < tol) break;
    if (k > (1L << 26))
      throw std::runtime_error("v_integral: truncation tolerance unreachable for this modulus");
  }
  return base + sum;
}

double v_integral_pair(const KernelParam& a, double theta, double tol) {
  return v_integral(a.modulus, theta + a.argument, tol) +
         v_integral(a.modulus, theta - a.argument, tol) -
         2.0 * v_integral(a.modulus, a.argument, tol);
}

}  // namespace awroots

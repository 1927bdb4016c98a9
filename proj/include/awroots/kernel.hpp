#pragma once

#include <complex>

namespace awroots {

/// Parameter of the transcendental kernels in modulus/argument form.
/// The argument is the principal value in (-pi, pi] with Arg(0) := 0, so a
/// real parameter carries argument 0 when nonnegative and pi when negative.
struct KernelParam {
  double modulus = 0.0;
  double argument = 0.0;

  bool is_real() const;
  /// Signed value of a real parameter; throws std::logic_error otherwise.
  double real_value() const;

  static KernelParam from_complex(std::complex<double> z);
  std::complex<double> to_complex() const;
};

/// Reduces an angle to the fundamental interval (-pi, pi].
double reduce_angle(double theta);

/// Poisson-type density u_eps(t) = (1 - eps^2) / (1 - 2 eps cos(t) + eps^2).
/// For |eps| < 1 the values lie between (1-|eps|)/(1+|eps|) and
/// (1+|eps|)/(1-|eps|).
double u_kernel(double eps, double theta);

/// Periodic residual nu_eps(t) = v_eps(t) - t, odd and 2pi-periodic.
/// Closed form 2 atan(((1+eps)/(1-eps)) tan(t/2)) - t on the reduced
/// interval; the removable singularity at reduced t = pi takes the exact
/// limit value 0.
double nu_kernel(double eps, double theta);

/// Truncated Fourier series sum_{k=1..terms} (2 eps^k / k) sin(k t).
/// Truncation error is at most 2|eps|^{terms+1} / ((terms+1)(1-|eps|)).
double nu_fourier(double eps, double theta, int terms);

/// Antiderivative v_eps(t) = integral of u_eps over [0, t] = t + nu_eps(t).
double v_kernel(double eps, double theta);

/// Real contribution of the conjugate pair {a, conj(a)}:
///   nu_a(t) + nu_conj(a)(t) = nu_|a|(t + Arg a) + nu_|a|(t - Arg a).
/// For real a this is 2 nu_kernel(a, t), so summing over a conjugate-closed
/// list of four parameters equals (1/2) sum_r nu_pair(a_r, t).
double nu_pair(const KernelParam& a, double theta);

/// Pair version of u: u_a + u_conj(a) = 2 Re u_a via the same shifted-argument
/// identity.
double u_pair(const KernelParam& a, double theta);

/// Pair version of v; equals 2t + nu_pair(a, t).
double v_pair(const KernelParam& a, double theta);

/// Integral of v_eps over [0, t], summed as
///   t^2/2 + sum_k (2 eps^k / k^2)(1 - cos(k t))
/// and truncated once the geometric tail bound
/// 2|eps|^{K+1}/((K+1)^2 (1-|eps|)) drops below tol.
double v_integral(double eps, double theta, double tol);

/// Integral over [0, t] of the pair density v_a + v_conj(a).
double v_integral_pair(const KernelParam& a, double theta, double tol);

}  // namespace awroots

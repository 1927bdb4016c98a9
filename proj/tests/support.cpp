#include "support.hpp"

#include <algorithm>
#include <numbers>

namespace testsupport {

std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x, double h) {
  std::vector<double> grad(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double saved = x[k];
    x[k] = saved + h;
    const double fp = f(x);
    x[k] = saved - h;
    const double fm = f(x);
    x[k] = saved;
    grad[k] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

std::vector<std::vector<double>> fd_jacobian(
    const std::function<std::vector<double>(const std::vector<double>&)>& g,
    std::vector<double> x, double h) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> jac(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double saved = x[k];
    x[k] = saved + h;
    const std::vector<double> gp = g(x);
    x[k] = saved - h;
    const std::vector<double> gm = g(x);
    x[k] = saved;
    for (std::size_t j = 0; j < n; ++j) jac[j][k] = (gp[j] - gm[j]) / (2.0 * h);
  }
  return jac;
}

double nu_pair_series(std::complex<double> a, double theta, int terms) {
  std::complex<double> power(1.0, 0.0);
  double sum = 0.0;
  for (int k = 1; k <= terms; ++k) {
    power *= a;
    sum += (4.0 * power.real() / k) * std::sin(k * theta);
  }
  return sum;
}

awroots::ParameterSet random_params(std::mt19937& rng, int n_min, int n_max,
                                    double max_modulus) {
  std::uniform_int_distribution<int> degree(n_min, n_max);
  std::uniform_int_distribution<int> pair_count(0, 2);
  std::uniform_real_distribution<double> modulus(0.0, max_modulus);
  std::uniform_real_distribution<double> angle(0.15, std::numbers::pi - 0.15);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::array<std::complex<double>, 4> a{};
  int index = 0;
  const int pairs = pair_count(rng);
  for (int p = 0; p < pairs; ++p) {
    const std::complex<double> z = std::polar(modulus(rng), angle(rng));
    a[index++] = z;
    a[index++] = std::conj(z);
  }
  while (index < 4) a[index++] = {(coin(rng) < 0.5 ? -1.0 : 1.0) * modulus(rng), 0.0};
  std::shuffle(a.begin(), a.end(), rng);

  const double q = (coin(rng) < 0.5 ? -1.0 : 1.0) * modulus(rng);
  return awroots::validate(a, q, degree(rng));
}

std::vector<double> random_angles(std::mt19937& rng, int n, double margin) {
  std::uniform_real_distribution<double> dist(margin, std::numbers::pi - margin);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

double linf_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double l2_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace testsupport

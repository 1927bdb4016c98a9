#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "awroots/kernel.hpp"
#include "support.hpp"

using namespace awroots;
namespace ts = testsupport;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("reduce_angle maps into (-pi, pi]") {
  CHECK(reduce_angle(0.0) == 0.0);
  CHECK(reduce_angle(pi) == pi);
  CHECK(reduce_angle(-pi) == pi);
  CHECK(reduce_angle(2.0 * pi) == 0.0);
  CHECK(reduce_angle(3.0 * pi / 2.0) == doctest::Approx(-pi / 2.0).epsilon(1e-15));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> theta(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = theta(rng);
    const double r = reduce_angle(t);
    CHECK(r > -pi);
    CHECK(r <= pi);
    const double periods = (t - r) / (2.0 * pi);
    CHECK(std::abs(periods - std::round(periods)) < 1e-9);
  }

  CHECK_THROWS_AS(reduce_angle(std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS(reduce_angle(std::nan("")), std::domain_error);
}

TEST_CASE("u_kernel values and bounds") {
  CHECK(u_kernel(0.0, 1.234) == 1.0);
  CHECK(u_kernel(0.5, 0.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(u_kernel(0.5, pi) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(u_kernel(1.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(u_kernel(-1.2, 0.3), std::domain_error);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> eps(-0.95, 0.95);
  std::uniform_real_distribution<double> theta(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double e = eps(rng);
    const double m = std::abs(e);
    const double u = u_kernel(e, theta(rng));
    CHECK(u >= (1.0 - m) / (1.0 + m) - 1e-14);
    CHECK(u <= (1.0 + m) / (1.0 - m) + 1e-14);
  }
}

TEST_CASE("nu_kernel closed form agrees with the Fourier series") {
  CHECK(nu_kernel(0.7, 0.5) ==
        doctest::Approx(nu_fourier(0.7, 0.5, 200)).epsilon(1e-13));

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> eps(-0.9, 0.9);
  for (int i = 0; i < 50; ++i) CHECK(nu_kernel(eps(rng), 0.0) == 0.0);
  CHECK(nu_kernel(0.3, pi) == 0.0);
  CHECK(nu_kernel(0.3, -pi) == 0.0);
  CHECK_THROWS_AS(nu_kernel(1.0, 0.5), std::domain_error);
}

TEST_CASE("nu_kernel is odd and 2pi-periodic") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> eps(-0.9, 0.9);
  std::uniform_real_distribution<double> theta(-8.0, 8.0);
  for (int i = 0; i < 1000; ++i) {
    const double e = eps(rng);
    const double t = theta(rng);
    CHECK(std::abs(nu_kernel(e, -t) + nu_kernel(e, t)) < 1e-12);
    CHECK(std::abs(nu_kernel(e, t + 2.0 * pi) - nu_kernel(e, t)) < 1e-12);
  }
}

TEST_CASE("nu_fourier partial sums") {
  CHECK(nu_fourier(0.0, 2.1, 25) == 0.0);
  CHECK(nu_fourier(0.5, pi / 2.0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(nu_fourier(0.5, 1.0, 0), std::invalid_argument);

  // closed form within the certified truncation bound
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> eps(-0.9, 0.9);
  std::uniform_real_distribution<double> theta(-8.0, 8.0);
  for (int terms : {5, 50, 500}) {
    for (int i = 0; i < 200; ++i) {
      const double e = eps(rng);
      const double t = theta(rng);
      const double m = std::abs(e);
      const double bound = 2.0 * std::pow(m, terms + 1) / ((terms + 1) * (1.0 - m));
      CHECK(std::abs(nu_kernel(e, t) - nu_fourier(e, t, terms)) <= bound + 1e-13);
    }
  }
}

TEST_CASE("v_kernel identities") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> eps(-0.9, 0.9);
  std::uniform_real_distribution<double> theta(-5.0, 5.0);

  CHECK(v_kernel(0.4, 0.0) == 0.0);
  CHECK(v_kernel(0.4, pi) == pi);
  for (int i = 0; i < 50; ++i) {
    const double t = theta(rng);
    CHECK(v_kernel(0.0, t) == t);
  }
  for (int i = 0; i < 1000; ++i) {
    const double e = eps(rng);
    const double t = theta(rng);
    CHECK(std::abs(v_kernel(e, pi + t) + v_kernel(e, pi - t) - 2.0 * pi) < 1e-12);
    CHECK(std::abs(v_kernel(e, t + 2.0 * pi) - v_kernel(e, t) - 2.0 * pi) < 1e-12);
    CHECK(std::abs(v_kernel(e, -t) + v_kernel(e, t)) < 1e-12);
  }
}

TEST_CASE("v_kernel derivative matches u_kernel") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> eps(-0.7, 0.7);
  std::uniform_real_distribution<double> theta(-3.0, 3.0);
  const double h = 1e-5;
  for (int i = 0; i < 300; ++i) {
    const double e = eps(rng);
    double t = theta(rng);
    // keep the stencil away from the removable singularity at reduced pi
    if (std::abs(std::abs(reduce_angle(t)) - pi) < 10.0 * h) t *= 0.5;
    const double fd = (v_kernel(e, t + h) - v_kernel(e, t - h)) / (2.0 * h);
    CHECK(fd == doctest::Approx(u_kernel(e, t)).epsilon(1e-7));
  }
}

TEST_CASE("nu_pair reduces conjugate pairs to real arithmetic") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> theta(-5.0, 5.0);

  for (int i = 0; i < 100; ++i) {
    const double t = theta(rng);
    const KernelParam positive = KernelParam::from_complex({0.3, 0.0});
    CHECK(nu_pair(positive, t) == 2.0 * nu_kernel(0.3, t));
    const KernelParam negative = KernelParam::from_complex({-0.3, 0.0});
    CHECK(nu_pair(negative, t) == doctest::Approx(2.0 * nu_kernel(-0.3, t)).epsilon(1e-13));
  }

  std::uniform_real_distribution<double> modulus(0.0, 0.8);
  std::uniform_real_distribution<double> arg(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const std::complex<double> a = std::polar(modulus(rng), arg(rng));
    const double t = theta(rng);
    const double series = ts::nu_pair_series(a, t, 600);
    CHECK(nu_pair(KernelParam::from_complex(a), t) == doctest::Approx(series).epsilon(1e-11));
  }

  KernelParam big;
  big.modulus = 1.0;
  CHECK_THROWS_AS(nu_pair(big, 0.5), std::domain_error);
}

TEST_CASE("v_integral against adaptive quadrature") {
  CHECK(v_integral(0.0, 1.7, 1e-12) == 0.5 * 1.7 * 1.7);
  CHECK(v_integral(0.6, 0.0, 1e-12) == 0.0);
  CHECK_THROWS_AS(v_integral(0.5, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(v_integral(0.5, 1.0, -1.0), std::invalid_argument);

  const double quad = ts::adaptive_simpson([](double x) { return v_kernel(0.5, x); }, 0.0, 1.0,
                                            1e-13);
  CHECK(v_integral(0.5, 1.0, 1e-12) == doctest::Approx(quad).epsilon(1e-10));

  std::mt19937 rng(37);
  std::uniform_real_distribution<double> eps(-0.85, 0.85);
  std::uniform_real_distribution<double> theta(-4.0, 4.0);
  for (int i = 0; i < 60; ++i) {
    const double e = eps(rng);
    const double t = theta(rng);
    const double expected =
        ts::adaptive_simpson([e](double x) { return v_kernel(e, x); }, 0.0, t, 1e-12);
    CHECK(v_integral(e, t, 1e-12) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("v_integral_pair integrates the pair density") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> theta(-3.0, 3.0);
  std::uniform_real_distribution<double> modulus(0.0, 0.7);
  std::uniform_real_distribution<double> arg(0.1, 3.0);

  for (int i = 0; i < 50; ++i) {
    const KernelParam a = KernelParam::from_complex(std::polar(modulus(rng), arg(rng)));
    CHECK(v_integral_pair(a, 0.0, 1e-12) == 0.0);
    const double t = theta(rng);
    const double h = 1e-5;
    const double fd =
        (v_integral_pair(a, t + h, 1e-14) - v_integral_pair(a, t - h, 1e-14)) / (2.0 * h);
    CHECK(fd == doctest::Approx(v_pair(a, t)).epsilon(1e-6));
  }

  // negative real parameter: the pair integral is twice the signed integral
  for (int i = 0; i < 50; ++i) {
    const double t = theta(rng);
    const double m = modulus(rng);
    const KernelParam negative = KernelParam::from_complex({-m, 0.0});
    CHECK(v_integral_pair(negative, t, 1e-13) ==
          doctest::Approx(2.0 * v_integral(-m, t, 1e-13)).epsilon(1e-11));
  }
}

TEST_CASE("KernelParam principal-value conventions") {
  CHECK(KernelParam::from_complex({0.0, 0.0}).argument == 0.0);
  CHECK(KernelParam::from_complex({0.4, 0.0}).argument == 0.0);
  CHECK(KernelParam::from_complex({-0.4, 0.0}).argument == pi);
  CHECK(KernelParam::from_complex({-0.4, 0.0}).real_value() == -0.4);
  const KernelParam c = KernelParam::from_complex({0.3, 0.4});
  CHECK(c.modulus == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_FALSE(c.is_real());
  CHECK_THROWS_AS(c.real_value(), std::logic_error);
  CHECK(c.to_complex().real() == doctest::Approx(0.3).epsilon(1e-15));
}

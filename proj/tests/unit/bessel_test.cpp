#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stoc/bessel.hpp"
#include "stoc/errors.hpp"

using namespace stoc;

TEST_CASE("values at the origin") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(2, 0.0) == 0.0);
}

TEST_CASE("first zero of J0") {
  // Bisection on the integral-representation oracle.
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (oracle::bessel_integral(0, mid) > 0.0 ? lo : hi) = mid;
  }
  CHECK(lo == doctest::Approx(2.404825557695773).epsilon(1e-12));
  CHECK(std::abs(bessel_j(0, 2.404826)) < 1e-6);
  CHECK(std::abs(bessel_j(0, lo)) < 1e-14);
}

TEST_CASE("J1 against its complex integral representation at x = 3.7") {
  // (1/2pi) int e^{-i x sin t + i t} dt, trapezoid on the full period.
  const double x = 3.7;
  std::complex<double> acc = 0.0;
  const int m = 256;
  for (int j = 0; j < m; ++j) {
    const double t = 2.0 * 3.14159265358979323846 * j / m;
    acc += std::exp(std::complex<double>(0.0, -x * std::sin(t) + t));
  }
  acc /= m;
  CHECK(std::abs(bessel_j(1, x) - acc.real()) < 1e-10);
  CHECK(std::abs(acc.imag()) < 1e-12);
}

TEST_CASE("absolute accuracy 1e-12 against the integral oracle on |x| <= 1e4") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> logx(-3.0, 4.0);
  double worst = 0.0;
  auto probe = [&](double x) {
    const auto j = bessel_j012(x);
    for (int n = 0; n <= 2; ++n) {
      const double ref = oracle::bessel_integral(n, x);
      worst = std::max(worst, std::abs(bessel_j(n, x) - ref));
      worst = std::max(worst, std::abs(j[n] - ref));
    }
  };
  for (int i = 0; i < 400; ++i) probe(std::pow(10.0, logx(rng)));
  // Both sides of each algorithm switch.
  for (double x : {7.999999, 8.0, 8.000001, 11.9, 12.0, 24.99999, 25.0, 25.00001, 1e4}) probe(x);
  for (double x = 0.05; x < 60.0; x += 0.0731) probe(x);
  CHECK(worst < 1e-12);
}

TEST_CASE("parity for negative arguments") {
  for (double x : {0.3, 5.0, 14.0, 40.0}) {
    CHECK(bessel_j(0, -x) == bessel_j(0, x));
    CHECK(bessel_j(1, -x) == -bessel_j(1, x));
    CHECK(bessel_j(2, -x) == bessel_j(2, x));
  }
}

TEST_CASE("recurrence J0 + J2 = (2/x) J1 on [0.1, 100]") {
  double worst = 0.0;
  for (double x = 0.1; x <= 100.0; x += 0.01) {
    const auto [j0, j1, j2] = bessel_j012(x);
    worst = std::max(worst, std::abs(j0 + j2 - 2.0 * j1 / x));
    worst = std::max(worst, std::abs(bessel_j(0, x) + bessel_j(2, x) - 2.0 * bessel_j(1, x) / x));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_j(0, NAN), DomainError);
  CHECK_THROWS_AS(bessel_j(0, INFINITY), DomainError);
  CHECK_THROWS_AS(bessel_j(3, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(-1, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j012(NAN), DomainError);
}

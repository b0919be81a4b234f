#include "stoc/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stoc/errors.hpp"

namespace stoc {

namespace {

constexpr double kSeriesLimit = 8.0;
constexpr double kAsymptoticLimit = 25.0;

double series(int n, double x) {
  const double h = 0.5 * x;
  const double h2 = h * h;
  double term = 1.0;
  for (int j = 1; j <= n; ++j) term *= h / j;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -h2 / (static_cast<double>(k) * (k + n));
    sum += term;
    if (std::abs(term) < 1e-18 && k > h) break;
  }
  return sum;
}

std::array<double, 3> miller(double x) {
  int start = static_cast<int>(x + 15.0 * std::cbrt(x) + 20.0);
  start += start % 2;
  double next = 0.0;   // J_{n+1}
  double cur = 1e-30;  // J_n
  double norm = 0.0;
  std::array<double, 3> low{};
  for (int n = start; n > 0; --n) {
    const double prev = 2.0 * n / x * cur - next;  // J_{n-1}
    next = cur;
    cur = prev;
    if ((n - 1) % 2 == 0 && n - 1 > 0) norm += 2.0 * cur;
    if (n - 1 <= 2) low[n - 1] = cur;
    if (std::abs(cur) > 1e250) {
      next *= 1e-250;
      cur *= 1e-250;
      norm *= 1e-250;
      for (double& v : low) v *= 1e-250;
    }
  }
  norm += cur;  // J0 term
  return {low[0] / norm, low[1] / norm, low[2] / norm};
}

// Hankel's expansion J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi).
double hankel(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int m = 1; m < 60; ++m) {
    const double odd = 2.0 * m - 1.0;
    term *= (mu - odd * odd) / (8.0 * m * x);
    const double mag = std::abs(term);
    if (mag > last) break;  // past the smallest term
    last = mag;
    switch (m % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (mag < 1e-17) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

void check_finite(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("bessel_j argument must be finite, got " + std::to_string(x));
  }
}

std::array<double, 3> j012_nonneg(double x) {
  if (x < kSeriesLimit) return {series(0, x), series(1, x), series(2, x)};
  if (x < kAsymptoticLimit) return miller(x);
  const double j0 = hankel(0, x);
  const double j1 = hankel(1, x);
  return {j0, j1, 2.0 * j1 / x - j0};
}

}  // namespace

std::array<double, 3> bessel_j012(double x) {
  check_finite(x);
  auto j = j012_nonneg(std::abs(x));
  if (x < 0.0) j[1] = -j[1];
  return j;
}

double bessel_j(int order, double x) {
  if (order < 0 || order > 2) {
    throw DomainError("bessel_j supports orders 0..2, got " + std::to_string(order));
  }
  check_finite(x);
  const double ax = std::abs(x);
  double v;
  if (ax < kSeriesLimit) {
    v = series(order, ax);
  } else if (ax < kAsymptoticLimit) {
    v = miller(ax)[order];
  } else {
    v = order < 2 ? hankel(order, ax) : j012_nonneg(ax)[2];
  }
  return (x < 0.0 && order == 1) ? -v : v;
}

}  // namespace stoc

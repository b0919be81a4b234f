#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stoc::oracle {

namespace {
constexpr double pi = std::numbers::pi;
}

double bessel_integral(int n, double x) {
  // Periodic in t over [0, 2pi]; integrate the full period and halve.
  auto sum_nodes = [&](int m) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) {
      const double t = 2.0 * pi * j / m;
      s += std::cos(n * t - x * std::sin(t));
    }
    return s / m;
  };
  int m = 64;
  double prev = sum_nodes(m);
  for (;;) {
    m *= 2;
    const double cur = sum_nodes(m);
    if (std::abs(cur - prev) < 1e-15 || m > (1 << 24)) return cur;
    prev = cur;
  }
}

double wavenumber_si(double voltage) {
  constexpr double m_e = 9.1093837015e-31;
  constexpr double e = 1.602176634e-19;
  constexpr double hbar = 1.054571817e-34;
  constexpr double c = 299792458.0;
  const double energy = e * voltage;
  const double p = std::sqrt(2.0 * m_e * energy * (1.0 + energy / (2.0 * m_e * c * c)));
  return p / hbar * 1e-9;
}

Spinor fourier_transfer(const Spinor& w, double qr, const RotationSpec& spec, double phi,
                        double tol) {
  const std::complex<double> i(0.0, 1.0);
  auto integrand = [&](double t) {
    const double c = std::cos(0.5 * spec.alpha);
    const double s = std::sin(0.5 * spec.alpha);
    const double ct = std::cos(spec.theta);
    const double st = std::sin(spec.theta);
    const std::complex<double> ramp = std::exp(i * (t + spec.phi0));
    // R_n(alpha) = cos(a/2) 1 - i sin(a/2) n.sigma
    const std::complex<double> r00 = c - i * s * ct;
    const std::complex<double> r01 = -i * s * st * std::conj(ramp);
    const std::complex<double> r10 = -i * s * st * ramp;
    const std::complex<double> r11 = c + i * s * ct;
    const std::complex<double> f = std::exp(i * (qr * std::cos(t - phi))) * std::exp(i * t);
    return Spinor{f * (r00 * w.up + r01 * w.down), f * (r10 * w.up + r11 * w.down)};
  };
  auto mean = [&](int m) {
    Spinor acc{};
    for (int j = 0; j < m; ++j) acc = acc + integrand(2.0 * pi * j / m);
    return (1.0 / m) * acc;
  };
  int m = 32;
  Spinor prev = mean(m);
  double achieved = 0.0;
  while (m < (1 << 22)) {
    m *= 2;
    const Spinor cur = mean(m);
    achieved = std::max(std::abs(cur.up - prev.up), std::abs(cur.down - prev.down));
    if (achieved < tol) {
      return (-i) * cur;  // strip the global factor i
    }
    prev = cur;
  }
  throw std::runtime_error("fourier_transfer did not converge; achieved " +
                           std::to_string(achieved));
}

double x_jn_squared_integral(int n, double X) {
  auto j = [&](int k) {
    if (k < 0) return (k % 2 == 0 ? 1.0 : -1.0) * bessel_integral(-k, X);
    return bessel_integral(k, X);
  };
  const double jn = j(n);
  return 0.5 * X * X * (jn * jn - j(n - 1) * j(n + 1));
}

}  // namespace stoc::oracle

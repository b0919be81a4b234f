#include "stoc/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stoc/errors.hpp"

namespace stoc {

Matrix2c Matrix2c::adjoint() const {
  return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

double Matrix2c::max_abs_diff(const Matrix2c& other) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(m_[i] - other.m_[i]));
  return d;
}

Matrix2c operator*(const Matrix2c& a, const Matrix2c& b) {
  return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
          a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
}

Matrix2c operator*(cplx s, const Matrix2c& a) {
  return {s * a.m_[0], s * a.m_[1], s * a.m_[2], s * a.m_[3]};
}

Matrix2c operator+(const Matrix2c& a, const Matrix2c& b) {
  return {a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2], a.m_[3] + b.m_[3]};
}

Spinor operator*(const Matrix2c& a, const Spinor& w) {
  return {a.m_[0] * w.up + a.m_[1] * w.down, a.m_[2] * w.up + a.m_[3] * w.down};
}

SpinDensityMatrix SpinDensityMatrix::from_matrix(const Matrix2c& m) {
  constexpr double tol = 1e-12;
  if (m.max_abs_diff(m.adjoint()) > tol) {
    throw DomainError("density matrix is not Hermitian");
  }
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  const double min_eig = 0.5 * (a + d) - half_gap;
  if (min_eig < -tol) {
    throw DomainError("density matrix has negative eigenvalue " + std::to_string(min_eig));
  }
  return SpinDensityMatrix(m);
}

SpinDensityMatrix SpinDensityMatrix::pure(const Spinor& w) {
  return SpinDensityMatrix(Matrix2c(std::norm(w.up), w.up * std::conj(w.down),
                                    w.down * std::conj(w.up), std::norm(w.down)));
}

double SpinDensityMatrix::longitudinal_polarisation() const {
  const double tr = trace();
  if (tr <= 0.0) return 0.0;
  return (rho_up() - rho_down()) / tr;
}

void RotationSpec::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(phi0) || !(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("rotation spec needs finite alpha, phi0 and theta in [0, pi]");
  }
}

Matrix2c rotation_operator(const RotationSpec& spec, double phi) {
  const double c = std::cos(0.5 * spec.alpha);
  const double s = std::sin(0.5 * spec.alpha);
  const double ct = std::cos(spec.theta);
  const double st = std::sin(spec.theta);
  const cplx i(0.0, 1.0);
  const cplx ramp = std::polar(1.0, phi + spec.phi0);
  return {c - i * s * ct, -i * s * st * std::conj(ramp),
          -i * s * st * ramp, c + i * s * ct};
}

SpinDensityMatrix unpolarized_density() {
  return SpinDensityMatrix::from_matrix(0.5 * Matrix2c::identity());
}

SpinDensityMatrix conjugate_by(const Matrix2c& t, const SpinDensityMatrix& rho) {
  Matrix2c out = t * rho.matrix() * t.adjoint();
  // Symmetrize away rounding so the result is exactly Hermitian.
  const cplx off = 0.5 * (out(0, 1) + std::conj(out(1, 0)));
  out(0, 1) = off;
  out(1, 0) = std::conj(off);
  out(0, 0) = out(0, 0).real();
  out(1, 1) = out(1, 1).real();
  return SpinDensityMatrix(out);
}

}  // namespace stoc

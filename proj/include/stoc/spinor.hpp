#pragma once

#include <array>
#include <complex>
#include <numbers>

namespace stoc {

using cplx = std::complex<double>;

// Pauli spinor in the sigma_z eigenbasis.
struct Spinor {
  cplx up{};
  cplx down{};

  static Spinor spin_up() { return {1.0, 0.0}; }
  static Spinor spin_down() { return {0.0, 1.0}; }

  double norm_squared() const { return std::norm(up) + std::norm(down); }

  friend Spinor operator+(const Spinor& a, const Spinor& b) {
    return {a.up + b.up, a.down + b.down};
  }
  friend Spinor operator*(cplx s, const Spinor& a) { return {s * a.up, s * a.down}; }
};

// Row-major 2x2 complex matrix.
class Matrix2c {
 public:
  constexpr Matrix2c() = default;
  constexpr Matrix2c(cplx m00, cplx m01, cplx m10, cplx m11) : m_{m00, m01, m10, m11} {}

  static constexpr Matrix2c identity() { return {1.0, 0.0, 0.0, 1.0}; }

  cplx operator()(int row, int col) const { return m_[2 * row + col]; }
  cplx& operator()(int row, int col) { return m_[2 * row + col]; }

  Matrix2c adjoint() const;
  cplx trace() const { return m_[0] + m_[3]; }
  cplx determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  // Largest entrywise modulus of (*this - other).
  double max_abs_diff(const Matrix2c& other) const;

  friend Matrix2c operator*(const Matrix2c& a, const Matrix2c& b);
  friend Matrix2c operator*(cplx s, const Matrix2c& a);
  friend Matrix2c operator+(const Matrix2c& a, const Matrix2c& b);
  friend Spinor operator*(const Matrix2c& a, const Spinor& w);

 private:
  std::array<cplx, 4> m_{};
};

// Hermitian positive-semidefinite 2x2 matrix. The trace is the local
// intensity and is not normalized pointwise.
class SpinDensityMatrix {
 public:
  // Validates Hermiticity (1e-12 entrywise) and eigenvalues >= -1e-12.
  // Throws DomainError otherwise.
  static SpinDensityMatrix from_matrix(const Matrix2c& m);

  static SpinDensityMatrix pure(const Spinor& w);

  const Matrix2c& matrix() const noexcept { return m_; }
  double rho_up() const { return m_(0, 0).real(); }
  double rho_down() const { return m_(1, 1).real(); }
  double trace() const { return rho_up() + rho_down(); }

  // (rho_up - rho_down) / trace; 0 for a vanishing trace.
  double longitudinal_polarisation() const;

 private:
  explicit SpinDensityMatrix(const Matrix2c& m) : m_(m) {}
  friend SpinDensityMatrix conjugate_by(const Matrix2c& t, const SpinDensityMatrix& rho);

  Matrix2c m_;
};

// Rotation on the Bloch sphere by `alpha` about the axis with polar angle
// `theta` and azimuth phi + `phi0`, where phi is the azimuth of the point
// source on the ring aperture.
struct RotationSpec {
  double alpha = 0.0;
  double theta = 0.5 * std::numbers::pi;
  double phi0 = 0.0;

  // Throws DomainError unless 0 <= theta <= pi and all fields are finite.
  void validate() const;
};

// exp(-i alpha/2 n.sigma) with n = (sin theta cos phi', sin theta sin phi',
// cos theta) and phi' = phi + phi0. Always in SU(2).
Matrix2c rotation_operator(const RotationSpec& spec, double phi);

// Maximally mixed state 1/2 * identity.
SpinDensityMatrix unpolarized_density();

// T rho T^dagger.
SpinDensityMatrix conjugate_by(const Matrix2c& t, const SpinDensityMatrix& rho);

}  // namespace stoc

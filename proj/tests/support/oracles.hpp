#pragma once

// Independent reference computations used only by the tests. None of these
// touch the library's Bessel series, recurrence or Gauss-Kronrod code.

#include <complex>

#include "stoc/spinor.hpp"

namespace stoc::oracle {

// J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt by the trapezoid rule on
// the periodic integrand, doubling the node count until successive estimates
// agree to 1e-15.
double bessel_integral(int n, double x);

// Relativistic wavenumber in nm^-1 from SI constants (m_e, e, hbar, c).
double wavenumber_si(double voltage);

// Brute-force evaluation of the ring-aperture superposition
//   (1/2pi) int_0^2pi e^{i qr cos(phi' - phi)} e^{i phi'} R_n(alpha; phi') w dphi'
// with the same global phase convention as transfer_matrix (the factor i is
// removed). Adaptive trapezoid doubling on the periodic integrand; throws
// std::runtime_error carrying the achieved tolerance if `tol` is not met.
Spinor fourier_transfer(const Spinor& w, double qr, const RotationSpec& spec, double phi,
                        double tol = 1e-13);

// Closed form of int_0^X x J_n(x)^2 dx = X^2/2 (J_n^2 - J_{n-1} J_{n+1}) with
// the Bessel values taken from bessel_integral.
double x_jn_squared_integral(int n, double X);

}  // namespace stoc::oracle

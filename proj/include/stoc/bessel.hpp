#pragma once

#include <array>

namespace stoc {

// Bessel functions of the first kind for the integer orders 0, 1, 2 that the
// ring-aperture transfer matrix needs. Absolute accuracy is better than 1e-12
// for |x| <= 1e4.
//
// Power series for |x| < 8, Miller's downward recurrence (normalized with
// J0 + 2 sum J_2k = 1) for 8 <= |x| < 25, Hankel asymptotic expansion above.
//
// Throws DomainError for non-finite x or an order outside 0..2.
double bessel_j(int order, double x);

// {J0(x), J1(x), J2(x)} in one call.
std::array<double, 3> bessel_j012(double x);

}  // namespace stoc

#include <doctest.h>

#include <cmath>

#include "stoc/errors.hpp"
#include "stoc/quadrature.hpp"

using namespace stoc;

TEST_CASE("smooth and oscillatory integrals") {
  const auto r = quad::integrate<2>(
      [](double x) { return quad::Vec<2>{std::exp(x), std::cos(40.0 * x)}; }, 0.0, 1.0);
  CHECK(r.value[0] == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(r.value[1] == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-10));
}

TEST_CASE("integrable endpoint singularity") {
  quad::Options opt;
  opt.rel_tol = 1e-8;
  const auto r = quad::integrate<1>([](double x) { return quad::Vec<1>{1.0 / std::sqrt(x)}; },
                                    0.0, 1.0, opt);
  CHECK(r.value[0] == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("non-convergence reports the achieved error") {
  quad::Options opt;
  opt.max_panels = 4;
  opt.rel_tol = 1e-14;
  try {
    quad::integrate<1>([](double x) { return quad::Vec<1>{std::sin(1.0 / (x + 1e-3))}; }, 0.0, 1.0,
                       opt);
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.achieved_error() > 0.0);
  }
}

TEST_CASE("golden section finds the maximum") {
  const auto [x, f] = quad::golden_section_max([](double t) { return -(t - 0.3) * (t - 0.3); },
                                               0.0, 1.0, 1e-9);
  CHECK(x == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(f <= 0.0);
}

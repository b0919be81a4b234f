#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stoc/beamline.hpp"
#include "stoc/errors.hpp"

using namespace stoc;

TEST_CASE("wavenumber matches SI-constant oracle and electron wavelength tables") {
  // Frozen from the SI oracle (CODATA 2018): 200 kV -> lambda = 2.5079 pm,
  // 200 V -> lambda = 0.086713 nm.
  CHECK(wavenumber_from_voltage(200000.0) == doctest::Approx(2505.32318549024).epsilon(1e-9));
  CHECK(2.0 * kPi / wavenumber_from_voltage(200.0) ==
        doctest::Approx(0.0867129274371181).epsilon(1e-9));
  for (double u : {1.0, 200.0, 2000.0, 20000.0, 200000.0, 1e6}) {
    CHECK(wavenumber_from_voltage(u) == doctest::Approx(oracle::wavenumber_si(u)).epsilon(1e-8));
  }
}

TEST_CASE("wavenumber is strictly increasing in voltage") {
  CHECK(wavenumber_from_voltage(20000.0) < wavenumber_from_voltage(200000.0));
  double prev = 0.0;
  for (double u = 0.5; u < 5e5; u *= 1.37) {
    const double k = wavenumber_from_voltage(u);
    CHECK(k > prev);
    prev = k;
  }
}

TEST_CASE("nonrelativistic limit below 10 V") {
  for (double u : {0.01, 1.0, 10.0}) {
    const double nonrel = std::sqrt(2.0 * kElectronRestEnergyEv * u) / kHbarCEvNm;
    CHECK(std::abs(wavenumber_from_voltage(u) / nonrel - 1.0) < 1e-5);
  }
}

TEST_CASE("BeamParams derived quantities") {
  const auto b = BeamParams::from_voltage(20000.0);
  CHECK(b.wavelength() == doctest::Approx(2.0 * kPi / b.wavenumber()).epsilon(1e-14));
  CHECK(b.lorentz_gamma() == doctest::Approx(1.0 + 20000.0 / 510998.95).epsilon(1e-14));
  CHECK_THROWS_AS(BeamParams::from_voltage(0.0), DomainError);
  CHECK_THROWS_AS(BeamParams::from_voltage(-5.0), DomainError);
  CHECK_THROWS_AS(wavenumber_from_voltage(NAN), DomainError);
}

TEST_CASE("lateral wavenumber") {
  const auto b = BeamParams::from_voltage(200000.0);
  CHECK(lateral_wavenumber(b, 0.0) == 0.0);
  CHECK(lateral_wavenumber(b, 0.05) == doctest::Approx(125.2).epsilon(1e-3));
  CHECK(std::abs(lateral_wavenumber(b, 1e-3) / b.wavenumber() / 1e-3 - 1.0) < 1e-6);
  for (double a = 0.0; a < 1.57; a += 0.01) CHECK(lateral_wavenumber(b, a) <= b.wavenumber());
  CHECK_THROWS_AS(lateral_wavenumber(b, -0.1), DomainError);
  CHECK_THROWS_AS(lateral_wavenumber(b, 0.5 * kPi), DomainError);
}

TEST_CASE("aperture and detector validation") {
  CHECK_NOTHROW(AnnularAperture(8e-3, 12e-3));
  CHECK_THROWS_AS(AnnularAperture(0.01, 0.01), DomainError);
  CHECK_THROWS_AS(AnnularAperture(0.02, 0.01), DomainError);
  CHECK_THROWS_AS(AnnularAperture(0.01, 0.02, 1), DomainError);
  CHECK_THROWS_AS(ConvergenceSpec(1.6), DomainError);
  CHECK_THROWS_AS(DetectorDisk(0.0), DomainError);
  CHECK_THROWS_AS(DetectorDisk(0.1, 8), DomainError);
  CHECK(DetectorDisk(0.25).radius() == 0.25);
}

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "stoc/stoc.h"

using std::numbers::pi;

TEST_CASE("version and scalar functions") {
  CHECK(std::string(stoc_version()) == "1.0.0");
  double k = 0.0;
  REQUIRE(stoc_wavenumber_from_voltage(200000, &k) == STOC_OK);
  CHECK(k == doctest::Approx(2505.32318549024).epsilon(1e-9));
  CHECK(stoc_wavenumber_from_voltage(-1, &k) == STOC_ERR_DOMAIN);
  CHECK(std::strlen(stoc_last_error()) > 0);
  CHECK(stoc_wavenumber_from_voltage(1, nullptr) == STOC_ERR_NULL);

  double up = 0, down = 0, p = 0;
  REQUIRE(stoc_spin_densities(1.7, 1.1, &up, &down) == STOC_OK);
  CHECK(up == doctest::Approx(0.142943691697169).epsilon(1e-13));
  CHECK(down == doctest::Approx(0.132150150138040).epsilon(1e-13));
  REQUIRE(stoc_differential_polarisation(0.0, 0.4, &p) == STOC_OK);
  CHECK(p == 1.0);
  CHECK(stoc_differential_polarisation(-1.0, 0.4, &p) == STOC_ERR_DOMAIN);
}

TEST_CASE("transfer matrix layout") {
  double t[8];
  REQUIRE(stoc_transfer_matrix(0.0, 0.6, pi / 2, 0.0, 0.0, t) == STOC_OK);
  // On axis only J0 survives: T12 = -sin(alpha/2).
  for (int i : {0, 1, 3, 4, 5, 6, 7}) CHECK(t[i] == doctest::Approx(0.0));
  CHECK(t[2] == doctest::Approx(-std::sin(0.3)).epsilon(1e-15));
  CHECK(stoc_transfer_matrix(1.0, 0.6, pi / 2, 0.0, 0.0, nullptr) == STOC_ERR_NULL);
}

TEST_CASE("angular momenta") {
  double lz, sz, jz;
  for (int up : {0, 1}) {
    REQUIRE(stoc_angular_momenta(up, 0.8, &lz, &sz, &jz) == STOC_OK);
    CHECK(lz + sz == doctest::Approx(jz).epsilon(1e-15));
    CHECK(jz == (up ? 1.5 : 0.5));
  }
}

TEST_CASE("beam handles") {
  stoc_beam* pure = nullptr;
  stoc_beam* ring = nullptr;
  REQUIRE(stoc_beam_create_pure(20000, 0.01, &pure) == STOC_OK);
  REQUIRE(stoc_beam_create_annular(20000, 8e-3, 12e-3, &ring) == STOC_OK);
  CHECK(stoc_beam_is_annular(pure) == 0);
  CHECK(stoc_beam_is_annular(ring) == 1);
  double k;
  REQUIRE(stoc_beam_wavenumber(ring, &k) == STOC_OK);
  CHECK(k == doctest::Approx(731.580211442455).epsilon(1e-9));

  const double radii[] = {0.0, 0.2, 0.25};
  double p[3];
  REQUIRE(stoc_beam_polarisation_sweep(pure, radii, 3, p) == STOC_OK);
  CHECK(p[1] == doctest::Approx(3.82092400647216e-5).epsilon(1e-7));

  stoc_polarimetry res[3];
  CHECK(stoc_beam_fom_sweep(pure, radii, 3, res) == STOC_ERR_MODE);
  CHECK(std::string(stoc_last_error()).find("pure") != std::string::npos);
  REQUIRE(stoc_beam_fom_sweep(ring, radii, 3, res) == STOC_OK);
  CHECK(res[2].figure_of_merit == doctest::Approx(3.2815479114e-06).epsilon(1e-7));
  CHECK(res[2].detection_efficiency == doctest::Approx(0.157473597987).epsilon(1e-8));

  double r, f;
  CHECK(stoc_beam_fom_peak(pure, 0.01, 5, &r, &f) == STOC_ERR_MODE);
  REQUIRE(stoc_beam_fom_peak(ring, 0.01, 5, &r, &f) == STOC_OK);
  CHECK(r == doctest::Approx(0.2454277854).epsilon(1e-4));

  const double descending[] = {0.2, 0.1};
  CHECK(stoc_beam_polarisation_sweep(pure, descending, 2, p) == STOC_ERR_DOMAIN);
  CHECK(stoc_beam_polarisation_sweep(nullptr, radii, 3, p) == STOC_ERR_NULL);
  CHECK(stoc_beam_polarisation_sweep(pure, nullptr, 1, p) == STOC_ERR_NULL);

  stoc_beam* bad = nullptr;
  CHECK(stoc_beam_create_annular(20000, 12e-3, 8e-3, &bad) == STOC_ERR_DOMAIN);
  CHECK(bad == nullptr);
  CHECK(stoc_beam_create_pure(20000, 2.0, &bad) == STOC_ERR_DOMAIN);
  CHECK(stoc_beam_create_pure(20000, 0.1, nullptr) == STOC_ERR_NULL);

  stoc_beam_destroy(pure);
  stoc_beam_destroy(ring);
  stoc_beam_destroy(nullptr);
}

#include "stoc/stoc.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <variant>

#include "stoc/errors.hpp"
#include "stoc/polarimetry.hpp"

struct stoc_beam {
  stoc::BeamModel model;
};

namespace {

thread_local std::string g_last_error;

stoc_status fail(stoc_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <class Fn>
stoc_status guarded(Fn&& fn) {
  try {
    fn();
    return STOC_OK;
  } catch (const stoc::DomainError& e) {
    return fail(STOC_ERR_DOMAIN, e.what());
  } catch (const stoc::ModeError& e) {
    return fail(STOC_ERR_MODE, e.what());
  } catch (const stoc::NumericalError& e) {
    return fail(STOC_ERR_NUMERICAL, e.what());
  } catch (const stoc::ConfigError& e) {
    return fail(STOC_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(STOC_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(STOC_ERR_UNKNOWN, "unknown error");
  }
}

#define STOC_REQUIRE(ptr)                                      \
  do {                                                         \
    if ((ptr) == nullptr) return fail(STOC_ERR_NULL, #ptr " is NULL"); \
  } while (0)

}  // namespace

extern "C" {

const char* stoc_version(void) { return "1.0.0"; }

const char* stoc_last_error(void) { return g_last_error.c_str(); }

stoc_status stoc_wavenumber_from_voltage(double voltage, double* wavenumber) {
  STOC_REQUIRE(wavenumber);
  return guarded([&] { *wavenumber = stoc::wavenumber_from_voltage(voltage); });
}

stoc_status stoc_spin_densities(double qr, double alpha, double* rho_up, double* rho_down) {
  STOC_REQUIRE(rho_up);
  STOC_REQUIRE(rho_down);
  return guarded([&] {
    const auto d = stoc::spin_densities(qr, alpha);
    *rho_up = d.rho_up;
    *rho_down = d.rho_down;
  });
}

stoc_status stoc_differential_polarisation(double qr, double alpha, double* p) {
  STOC_REQUIRE(p);
  return guarded([&] { *p = stoc::differential_polarisation(qr, alpha); });
}

stoc_status stoc_transfer_matrix(double qr, double alpha, double theta, double phi0, double phi,
                                 double out[8]) {
  STOC_REQUIRE(out);
  return guarded([&] {
    const stoc::RotationSpec spec{alpha, theta, phi0};
    spec.validate();
    const auto t = stoc::transfer_matrix(qr, spec, phi);
    for (int i = 0; i < 4; ++i) {
      out[2 * i] = t(i / 2, i % 2).real();
      out[2 * i + 1] = t(i / 2, i % 2).imag();
    }
  });
}

stoc_status stoc_angular_momenta(int spin_up, double alpha, double* lz, double* sz, double* jz) {
  STOC_REQUIRE(lz);
  STOC_REQUIRE(sz);
  STOC_REQUIRE(jz);
  return guarded([&] {
    const auto m = stoc::expectation_angular_momenta(
        spin_up ? stoc::SpinInput::up : stoc::SpinInput::down, alpha);
    *lz = m.lz;
    *sz = m.sz;
    *jz = m.jz;
  });
}

stoc_status stoc_beam_create_pure(double voltage, double alpha, stoc_beam** out) {
  STOC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new stoc_beam{stoc::PureBesselBeam(stoc::BeamParams::from_voltage(voltage),
                                              stoc::ConvergenceSpec(alpha))};
  });
}

stoc_status stoc_beam_create_annular(double voltage, double alpha_min, double alpha_max,
                                     stoc_beam** out) {
  STOC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new stoc_beam{stoc::AnnularBeam(stoc::BeamParams::from_voltage(voltage),
                                           stoc::AnnularAperture(alpha_min, alpha_max))};
  });
}

void stoc_beam_destroy(stoc_beam* beam) { delete beam; }

stoc_status stoc_beam_wavenumber(const stoc_beam* beam, double* wavenumber) {
  STOC_REQUIRE(beam);
  STOC_REQUIRE(wavenumber);
  *wavenumber = std::visit([](const auto& m) { return m.beam().wavenumber(); }, beam->model);
  return STOC_OK;
}

int stoc_beam_is_annular(const stoc_beam* beam) {
  return beam != nullptr && std::holds_alternative<stoc::AnnularBeam>(beam->model);
}

stoc_status stoc_beam_polarisation_sweep(const stoc_beam* beam, const double* radii, size_t n,
                                         double* p) {
  STOC_REQUIRE(beam);
  if (n == 0) return STOC_OK;
  STOC_REQUIRE(radii);
  STOC_REQUIRE(p);
  return guarded([&] {
    const auto v = stoc::integrated_polarisation_sweep(beam->model, {radii, n});
    std::copy(v.begin(), v.end(), p);
  });
}

stoc_status stoc_beam_fom_sweep(const stoc_beam* beam, const double* radii, size_t n,
                                stoc_polarimetry* out) {
  STOC_REQUIRE(beam);
  if (!std::holds_alternative<stoc::AnnularBeam>(beam->model)) {
    return fail(STOC_ERR_MODE,
                "figure of merit is undefined for a pure Bessel beam (unnormalizable)");
  }
  if (n == 0) return STOC_OK;
  STOC_REQUIRE(radii);
  STOC_REQUIRE(out);
  return guarded([&] {
    const auto v = stoc::fom_sweep(std::get<stoc::AnnularBeam>(beam->model), {radii, n});
    for (size_t i = 0; i < n; ++i) {
      out[i] = {v[i].polarisation, v[i].detection_efficiency, v[i].figure_of_merit};
    }
  });
}

stoc_status stoc_beam_fom_peak(const stoc_beam* beam, double lo, double hi, double* radius,
                               double* fom) {
  STOC_REQUIRE(beam);
  STOC_REQUIRE(radius);
  STOC_REQUIRE(fom);
  if (!std::holds_alternative<stoc::AnnularBeam>(beam->model)) {
    return fail(STOC_ERR_MODE,
                "figure of merit is undefined for a pure Bessel beam (unnormalizable)");
  }
  return guarded([&] {
    const auto peak = stoc::find_fom_peak(std::get<stoc::AnnularBeam>(beam->model), lo, hi);
    *radius = peak.radius;
    *fom = peak.figure_of_merit;
  });
}

}  // extern "C"

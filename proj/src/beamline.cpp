#include "stoc/beamline.hpp"

#include <cmath>
#include <string>

#include "stoc/errors.hpp"

namespace stoc {

namespace {

void require_angle(double alpha, const char* what) {
  if (!(alpha >= 0.0 && alpha < 0.5 * kPi)) {
    throw DomainError(std::string(what) + " must lie in [0, pi/2), got " +
                      std::to_string(alpha));
  }
}

}  // namespace

double wavenumber_from_voltage(double voltage) {
  if (!(voltage > 0.0) || !std::isfinite(voltage)) {
    throw DomainError("voltage must be positive and finite, got " +
                      std::to_string(voltage));
  }
  const double kinetic = voltage;  // eV
  const double pc = std::sqrt(kinetic * (kinetic + 2.0 * kElectronRestEnergyEv));
  return pc / kHbarCEvNm;
}

BeamParams::BeamParams(double voltage, double wavenumber, double gamma)
    : voltage_(voltage),
      wavenumber_(wavenumber),
      wavelength_(2.0 * kPi / wavenumber),
      lorentz_gamma_(gamma) {}

BeamParams BeamParams::from_voltage(double voltage) {
  const double k = wavenumber_from_voltage(voltage);
  return BeamParams(voltage, k, 1.0 + voltage / kElectronRestEnergyEv);
}

ConvergenceSpec::ConvergenceSpec(double alpha) : alpha_(alpha) {
  require_angle(alpha, "alpha");
}

double lateral_wavenumber(const BeamParams& beam, double alpha) {
  require_angle(alpha, "alpha");
  return beam.wavenumber() * std::sin(alpha);
}

AnnularAperture::AnnularAperture(double alpha_min, double alpha_max, int n_samples)
    : alpha_min_(alpha_min), alpha_max_(alpha_max), n_samples_(n_samples) {
  require_angle(alpha_min, "alpha_min");
  require_angle(alpha_max, "alpha_max");
  if (!(alpha_min < alpha_max)) {
    throw DomainError(
        "annular aperture needs alpha_min < alpha_max; for an infinitely thin "
        "ring use the single-Q transfer_matrix instead");
  }
  if (n_samples < 2) {
    throw DomainError("annular aperture needs n_samples >= 2");
  }
}

DetectorDisk::DetectorDisk(double radius, int n_radial)
    : radius_(radius), n_radial_(n_radial) {
  if (!(radius > 0.0)) {
    throw DomainError("detector radius must be positive, got " +
                      std::to_string(radius));
  }
  if (n_radial < 16) {
    throw DomainError("detector n_radial must be >= 16");
  }
}

}  // namespace stoc

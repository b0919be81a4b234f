#pragma once

#include <numbers>

// Laboratory-side description of the electron beam, apertures and detectors.
// Units throughout: nm for lengths, nm^-1 for wavenumbers, radians, volts.

namespace stoc {

// CODATA 2018.
inline constexpr double kElectronRestEnergyEv = 510998.95000;
inline constexpr double kHbarCEvNm = 197.3269804;

inline constexpr double kPi = std::numbers::pi;

// Relativistic electron wavenumber k = p/hbar for accelerating voltage U,
// with pc = sqrt(eU (eU + 2 m0 c^2)). Throws DomainError for U <= 0.
double wavenumber_from_voltage(double voltage);

class BeamParams {
 public:
  static BeamParams from_voltage(double voltage);

  double voltage() const noexcept { return voltage_; }
  double wavenumber() const noexcept { return wavenumber_; }
  double wavelength() const noexcept { return wavelength_; }
  double lorentz_gamma() const noexcept { return lorentz_gamma_; }

 private:
  BeamParams(double voltage, double wavenumber, double gamma);

  double voltage_;
  double wavenumber_;
  double wavelength_;
  double lorentz_gamma_;
};

// Convergence half-angle at the observation plane. The same angle is the
// net spinor rotation (Larmor and cyclotron precession are locked for g = 2).
class ConvergenceSpec {
 public:
  explicit ConvergenceSpec(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

// Lateral wavenumber Q = k sin(alpha) of the partial plane waves.
double lateral_wavenumber(const BeamParams& beam, double alpha);

// Ring aperture passing convergence angles [alpha_min, alpha_max].
// `n_samples` is the initial panel count of the adaptive band quadrature.
class AnnularAperture {
 public:
  AnnularAperture(double alpha_min, double alpha_max, int n_samples = 8);

  double alpha_min() const noexcept { return alpha_min_; }
  double alpha_max() const noexcept { return alpha_max_; }
  double alpha_center() const noexcept { return 0.5 * (alpha_min_ + alpha_max_); }
  int n_samples() const noexcept { return n_samples_; }

 private:
  double alpha_min_;
  double alpha_max_;
  int n_samples_;
};

// On-axis detector disc of radius `radius` nm. `n_radial` is the minimum
// number of radial quadrature panels.
class DetectorDisk {
 public:
  explicit DetectorDisk(double radius, int n_radial = 16);

  double radius() const noexcept { return radius_; }
  int n_radial() const noexcept { return n_radial_; }

 private:
  double radius_;
  int n_radial_;
};

}  // namespace stoc

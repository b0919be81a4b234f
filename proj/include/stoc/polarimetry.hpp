#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stoc/beamline.hpp"
#include "stoc/transfer.hpp"

namespace stoc {

// Diagonal elements of T rho T^dagger for an unpolarized input, pure Bessel
// beam, rotation axis perpendicular to z:
//   rho_up   = 1/2 (cos^2(a/2) J1^2 + sin^2(a/2) J0^2)
//   rho_down = 1/2 (cos^2(a/2) J1^2 + sin^2(a/2) J2^2)
struct SpinDensities {
  double rho_up;
  double rho_down;
};

// Requires qr >= 0 and 0 <= alpha < pi.
SpinDensities spin_densities(double qr, double alpha);

// (rho_up - rho_down) / (rho_up + rho_down). Defined as 0 for alpha = 0,
// where numerator and (at zeros of J1) denominator both vanish.
double differential_polarisation(double qr, double alpha);

// Infinitely thin ring aperture: an unnormalizable pure Bessel beam.
class PureBesselBeam {
 public:
  PureBesselBeam(const BeamParams& beam, const ConvergenceSpec& convergence);

  const BeamParams& beam() const noexcept { return beam_; }
  double alpha() const noexcept { return alpha_; }
  double lateral_wavenumber() const noexcept { return q_; }

 private:
  BeamParams beam_;
  double alpha_;
  double q_;
};

using BeamModel = std::variant<PureBesselBeam, AnnularBeam>;

struct PolarimetryResult {
  double polarisation = 0.0;
  double detection_efficiency = 0.0;
  double figure_of_merit = 0.0;
};

// Tr[rho sigma_z] / Tr[rho] integrated over the detector disc. Tends to 1 as
// the radius shrinks to 0 (alpha > 0). A pure Bessel beam needs a finite
// detector radius.
double integrated_polarisation(const DetectorDisk& detector, const BeamModel& model);

// Fraction of the (unit) beam power inside the disc. Annular beams only;
// throws ModeError for a pure Bessel beam.
double detection_efficiency(const DetectorDisk& detector, const BeamModel& model);

// p * DE. Annular beams only.
double figure_of_merit(const DetectorDisk& detector, const BeamModel& model);

// All three at once for an annular beam.
PolarimetryResult evaluate(const DetectorDisk& detector, const AnnularBeam& beam);

// Integrated polarisation over an ascending grid of detector radii (>= 0).
// Integrals are accumulated segment by segment, so the enclosed power is
// exactly nondecreasing along the grid.
std::vector<double> integrated_polarisation_sweep(const BeamModel& model,
                                                  std::span<const double> radii);

// p, DE and FoM over an ascending grid of detector radii (>= 0).
std::vector<PolarimetryResult> fom_sweep(const AnnularBeam& beam, std::span<const double> radii);

// Maximum of FoM over detector radius: coarse linear scan of `n_scan` radii
// on [lo, hi], then golden-section refinement around the best scan point.
struct FomPeak {
  double radius = 0.0;
  double figure_of_merit = 0.0;
  std::vector<double> scan_radii;
  std::vector<double> scan_fom;
};
FomPeak find_fom_peak(const AnnularBeam& beam, double lo = 0.01, double hi = 5.0,
                      int n_scan = 200);

// Sampled curve over strictly ascending radii.
class RadialProfile {
 public:
  RadialProfile(std::vector<double> radii, std::vector<double> values);
  const std::vector<double>& radii() const noexcept { return radii_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return radii_.size(); }

 private:
  std::vector<double> radii_;
  std::vector<double> values_;
};

struct DensityProfiles {
  RadialProfile rho_up;
  RadialProfile rho_down;
};
// Local spin densities versus physical radius r (nm) for either beam model.
DensityProfiles density_profiles(const BeamModel& model, std::vector<double> radii);

// Multi-parameter sweeps feeding the CLI tables.
enum class SweepAxis { qr, detector_radius, alpha, voltage };

struct SweepRequest {
  SweepAxis axis = SweepAxis::detector_radius;
  std::vector<double> grid;
  double voltage = 20000.0;
  double alpha = 0.05;
  std::optional<std::pair<double, double>> alpha_band;
  double qr = 0.0;               // abscissa for the alpha axis densities
  double detector_radius = 0.1;  // nm, for the alpha and voltage axes
};

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Columns:
//   qr              -> q_r, rho_up, rho_down, p_diff
//   detector_radius -> delta_r_nm, p               (pure Bessel)
//                      delta_r_nm, p, de, fom      (alpha_band set)
//   alpha           -> alpha, rho_up, rho_down, p_diff, p
//   voltage         -> voltage, p  |  voltage, p, de, fom
// Rows of the qr, alpha and voltage axes are evaluated concurrently and
// assembled in grid order. Throws ConfigError naming the offending field.
SweepTable sweep(const SweepRequest& request);

}  // namespace stoc

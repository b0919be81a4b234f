#include "stoc/polarimetry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "stoc/bessel.hpp"
#include "stoc/errors.hpp"
#include "stoc/quadrature.hpp"

namespace stoc {

namespace {

constexpr double kRadialRelTol = 1e-10;

// Cumulative disc integrals of three nonnegative radial densities.
// Pure Bessel beam, in x = Q r:   {x J0^2, x J1^2, x J2^2}.
// Annular beam, in r (nm):        2 pi r {u, v0, v2} where
//   rho_up = (u + v0) / 2, rho_down = (u + v2) / 2.
using Triple = quad::Vec<3>;

struct Accumulated {
  double sum;   // int Tr rho
  double diff;  // int Tr rho sigma_z
};

Triple pure_integrand(double x) {
  const auto [j0, j1, j2] = bessel_j012(x);
  return {x * j0 * j0, x * j1 * j1, x * j2 * j2};
}

Triple annular_integrand(const AnnularBeam& beam, double r) {
  const auto a = beam.radial_amplitudes(r);
  const double ct = std::cos(beam.theta());
  const double st2 = 1.0 - ct * ct;
  const double w = 2.0 * kPi * r;
  return {w * (a.j1_cos * a.j1_cos + ct * ct * a.j1_sin * a.j1_sin),
          w * st2 * a.j0_sin * a.j0_sin, w * st2 * a.j2_sin * a.j2_sin};
}

Accumulated combine_pure(const Triple& t, double alpha) {
  const double s2 = std::pow(std::sin(0.5 * alpha), 2);
  const double c2 = std::pow(std::cos(0.5 * alpha), 2);
  // Common factor 1/2 of both densities dropped; only ratios are used.
  return {s2 * (t[0] + t[2]) + 2.0 * c2 * t[1], s2 * (t[0] - t[2])};
}

Accumulated combine_annular(const Triple& t) {
  return {t[0] + 0.5 * (t[1] + t[2]), 0.5 * (t[1] - t[2])};
}

// Integrates the model's radial densities over [0, radii[i]] for every i.
// `panel_width` is a half period of the fastest Bessel oscillation.
template <class Integrand>
std::vector<Triple> accumulate(Integrand&& f, std::span<const double> upper, double panel_width,
                               int min_panels) {
  std::vector<Triple> out;
  out.reserve(upper.size());
  Triple running{};
  double previous = 0.0;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const double hi = upper[i];
    if (hi > previous) {
      quad::Options opt;
      opt.rel_tol = kRadialRelTol;
      opt.abs_tol = std::numeric_limits<double>::min();
      const int by_width = static_cast<int>(std::ceil((hi - previous) / panel_width));
      opt.initial_panels = std::max(i == 0 ? min_panels : 1, by_width);
      opt.max_panels = std::max(4000, 8 * opt.initial_panels);
      const auto seg = quad::integrate<3>(f, previous, hi, opt);
      for (std::size_t c = 0; c < 3; ++c) running[c] += seg.value[c];
      previous = hi;
    }
    out.push_back(running);
  }
  return out;
}

void check_grid(std::span<const double> radii) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0)) {
      throw DomainError("detector radii must be >= 0, got " + std::to_string(radii[i]));
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw DomainError("detector radii must be strictly ascending");
    }
  }
}

double ratio_or_limit(const Accumulated& a, double limit) {
  if (a.sum > 0.0) return a.diff / a.sum;
  return limit;
}

// Differential polarisation on the axis, the limit of the disc average.
double annular_axis_polarisation(const AnnularBeam& beam) {
  const auto d = beam.unpolarized_densities(0.0);
  const double tr = d.up + d.down;
  return tr > 0.0 ? (d.up - d.down) / tr : 0.0;
}

struct AnnularSignal {
  std::vector<Accumulated> disc;
  double axis_polarisation;
};

AnnularSignal annular_signal(const AnnularBeam& beam, std::span<const double> radii,
                             int min_panels) {
  // Infinite radii are handled by the caller; integrate the finite prefix.
  std::size_t finite = 0;
  while (finite < radii.size() && std::isfinite(radii[finite])) ++finite;
  const auto t = accumulate(
      [&](double r) { return annular_integrand(beam, r); }, radii.first(finite),
      0.5 * kPi / beam.q_max(), min_panels);
  AnnularSignal s{{}, annular_axis_polarisation(beam)};
  for (const auto& v : t) s.disc.push_back(combine_annular(v));
  // Whole plane: unit power by construction, and the sigma_z weighted power
  // vanishes because each spinor rotation is unitary.
  for (std::size_t i = finite; i < radii.size(); ++i) s.disc.push_back({1.0, 0.0});
  return s;
}

PolarimetryResult annular_result(const Accumulated& a, double axis_polarisation) {
  PolarimetryResult r;
  r.polarisation = ratio_or_limit(a, axis_polarisation);
  r.detection_efficiency = a.sum;
  r.figure_of_merit = r.polarisation * r.detection_efficiency;
  return r;
}

std::vector<double> pure_sweep(const PureBesselBeam& beam, std::span<const double> radii,
                               int min_panels) {
  const double q = beam.lateral_wavenumber();
  std::vector<double> x(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!std::isfinite(radii[i])) {
      throw DomainError("a pure Bessel beam is unconfined; detector radius must be finite");
    }
    x[i] = q * radii[i];
  }
  const auto t = accumulate(pure_integrand, x, 0.5 * kPi, min_panels);
  const double limit = differential_polarisation(0.0, beam.alpha());
  std::vector<double> p;
  p.reserve(t.size());
  for (const auto& v : t) p.push_back(ratio_or_limit(combine_pure(v, beam.alpha()), limit));
  return p;
}

const AnnularBeam& require_annular(const BeamModel& model, const char* what) {
  if (const auto* a = std::get_if<AnnularBeam>(&model)) return *a;
  throw ModeError(std::string(what) +
                  " is undefined for a pure Bessel beam (unnormalizable); use an annular "
                  "aperture");
}

}  // namespace

SpinDensities spin_densities(double qr, double alpha) {
  if (!(qr >= 0.0)) throw DomainError("spin_densities needs Qr >= 0");
  if (!(alpha >= 0.0 && alpha < kPi)) throw DomainError("spin_densities needs 0 <= alpha < pi");
  const auto [j0, j1, j2] = bessel_j012(qr);
  const double c2 = std::pow(std::cos(0.5 * alpha), 2);
  const double s2 = std::pow(std::sin(0.5 * alpha), 2);
  return {0.5 * (c2 * j1 * j1 + s2 * j0 * j0), 0.5 * (c2 * j1 * j1 + s2 * j2 * j2)};
}

double differential_polarisation(double qr, double alpha) {
  if (alpha == 0.0) {
    if (!(qr >= 0.0)) throw DomainError("differential_polarisation needs Qr >= 0");
    return 0.0;
  }
  const auto d = spin_densities(qr, alpha);
  const double tr = d.rho_up + d.rho_down;
  return tr > 0.0 ? (d.rho_up - d.rho_down) / tr : 0.0;
}

PureBesselBeam::PureBesselBeam(const BeamParams& beam, const ConvergenceSpec& convergence)
    : beam_(beam),
      alpha_(convergence.alpha()),
      q_(stoc::lateral_wavenumber(beam, convergence.alpha())) {}

double integrated_polarisation(const DetectorDisk& detector, const BeamModel& model) {
  const double r[] = {detector.radius()};
  if (const auto* pure = std::get_if<PureBesselBeam>(&model)) {
    return pure_sweep(*pure, r, detector.n_radial()).front();
  }
  const auto& beam = std::get<AnnularBeam>(model);
  const auto s = annular_signal(beam, r, detector.n_radial());
  return ratio_or_limit(s.disc.front(), s.axis_polarisation);
}

double detection_efficiency(const DetectorDisk& detector, const BeamModel& model) {
  return evaluate(detector, require_annular(model, "detection efficiency")).detection_efficiency;
}

double figure_of_merit(const DetectorDisk& detector, const BeamModel& model) {
  return evaluate(detector, require_annular(model, "figure of merit")).figure_of_merit;
}

PolarimetryResult evaluate(const DetectorDisk& detector, const AnnularBeam& beam) {
  const double r[] = {detector.radius()};
  const auto s = annular_signal(beam, r, detector.n_radial());
  return annular_result(s.disc.front(), s.axis_polarisation);
}

std::vector<double> integrated_polarisation_sweep(const BeamModel& model,
                                                  std::span<const double> radii) {
  check_grid(radii);
  if (const auto* pure = std::get_if<PureBesselBeam>(&model)) return pure_sweep(*pure, radii, 16);
  std::vector<double> p;
  for (const auto& r : fom_sweep(std::get<AnnularBeam>(model), radii)) p.push_back(r.polarisation);
  return p;
}

std::vector<PolarimetryResult> fom_sweep(const AnnularBeam& beam, std::span<const double> radii) {
  check_grid(radii);
  const auto s = annular_signal(beam, radii, 16);
  std::vector<PolarimetryResult> out;
  out.reserve(radii.size());
  for (const auto& a : s.disc) out.push_back(annular_result(a, s.axis_polarisation));
  return out;
}

FomPeak find_fom_peak(const AnnularBeam& beam, double lo, double hi, int n_scan) {
  if (!(lo >= 0.0 && hi > lo) || n_scan < 3) {
    throw DomainError("find_fom_peak needs 0 <= lo < hi and n_scan >= 3");
  }
  FomPeak peak;
  peak.scan_radii.resize(static_cast<std::size_t>(n_scan));
  for (int i = 0; i < n_scan; ++i) {
    peak.scan_radii[i] = lo + (hi - lo) * i / (n_scan - 1);
  }
  const auto results = fom_sweep(beam, peak.scan_radii);
  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    peak.scan_fom.push_back(results[i].figure_of_merit);
    if (results[i].figure_of_merit > results[best].figure_of_merit) best = i;
  }
  const double a = peak.scan_radii[best == 0 ? 0 : best - 1];
  const double b = peak.scan_radii[std::min(best + 1, results.size() - 1)];
  const auto fom_at = [&](double r) {
    return r > 0.0 ? evaluate(DetectorDisk(r), beam).figure_of_merit : 0.0;
  };
  const auto [r, f] = quad::golden_section_max(fom_at, a, b, 1e-6 * (hi - lo));
  peak.radius = r;
  peak.figure_of_merit = f;
  if (results[best].figure_of_merit > f) {
    peak.radius = peak.scan_radii[best];
    peak.figure_of_merit = results[best].figure_of_merit;
  }
  return peak;
}

RadialProfile::RadialProfile(std::vector<double> radii, std::vector<double> values)
    : radii_(std::move(radii)), values_(std::move(values)) {
  if (radii_.size() != values_.size()) {
    throw DomainError("radial profile needs equally many radii and values");
  }
  for (std::size_t i = 1; i < radii_.size(); ++i) {
    if (!(radii_[i] > radii_[i - 1])) {
      throw DomainError("radial profile radii must be strictly ascending");
    }
  }
}

DensityProfiles density_profiles(const BeamModel& model, std::vector<double> radii) {
  std::vector<double> up(radii.size());
  std::vector<double> down(radii.size());
  detail::parallel_for(radii.size(), [&](std::size_t i) {
    if (const auto* pure = std::get_if<PureBesselBeam>(&model)) {
      const auto d = spin_densities(pure->lateral_wavenumber() * radii[i], pure->alpha());
      up[i] = d.rho_up;
      down[i] = d.rho_down;
    } else {
      const auto d = std::get<AnnularBeam>(model).unpolarized_densities(radii[i]);
      up[i] = d.up;
      down[i] = d.down;
    }
  });
  return {RadialProfile(radii, std::move(up)), RadialProfile(radii, std::move(down))};
}

namespace {

BeamModel make_model(double voltage, double alpha,
                     const std::optional<std::pair<double, double>>& band) {
  BeamParams beam = [&] {
    try {
      return BeamParams::from_voltage(voltage);
    } catch (const DomainError& e) {
      throw ConfigError("voltage", e.what());
    }
  }();
  if (band) {
    try {
      return AnnularBeam(beam, AnnularAperture(band->first, band->second));
    } catch (const DomainError& e) {
      throw ConfigError("alpha_band", e.what());
    }
  }
  try {
    return PureBesselBeam(beam, ConvergenceSpec(alpha));
  } catch (const DomainError& e) {
    throw ConfigError("alpha", e.what());
  }
}

void check_sweep_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw ConfigError("grid", "sweep grid must not be empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ConfigError("grid", "sweep grid must be strictly ascending");
    }
  }
}

}  // namespace

SweepTable sweep(const SweepRequest& req) {
  check_sweep_grid(req.grid);
  SweepTable table;
  const std::size_t n = req.grid.size();
  table.rows.resize(n);

  switch (req.axis) {
    case SweepAxis::qr: {
      if (!(req.alpha >= 0.0 && req.alpha < kPi)) {
        throw ConfigError("alpha", "alpha must lie in [0, pi)");
      }
      if (req.grid.front() < 0.0) throw ConfigError("grid", "Qr grid must be >= 0");
      table.columns = {"q_r", "rho_up", "rho_down", "p_diff"};
      detail::parallel_for(n, [&](std::size_t i) {
        const double x = req.grid[i];
        const auto d = spin_densities(x, req.alpha);
        table.rows[i] = {x, d.rho_up, d.rho_down, differential_polarisation(x, req.alpha)};
      });
      break;
    }
    case SweepAxis::detector_radius: {
      if (req.grid.front() < 0.0) throw ConfigError("grid", "detector radii must be >= 0");
      const BeamModel model = make_model(req.voltage, req.alpha, req.alpha_band);
      if (const auto* annular = std::get_if<AnnularBeam>(&model)) {
        table.columns = {"delta_r_nm", "p", "de", "fom"};
        const auto res = fom_sweep(*annular, req.grid);
        for (std::size_t i = 0; i < n; ++i) {
          table.rows[i] = {req.grid[i], res[i].polarisation, res[i].detection_efficiency,
                           res[i].figure_of_merit};
        }
      } else {
        table.columns = {"delta_r_nm", "p"};
        const auto p = integrated_polarisation_sweep(model, req.grid);
        for (std::size_t i = 0; i < n; ++i) table.rows[i] = {req.grid[i], p[i]};
      }
      break;
    }
    case SweepAxis::alpha: {
      if (req.alpha_band) {
        throw ConfigError("alpha_band", "the alpha axis sweeps single-Q beams only");
      }
      if (!(req.detector_radius > 0.0)) {
        throw ConfigError("detector_radius", "detector radius must be positive");
      }
      if (!(req.qr >= 0.0)) throw ConfigError("qr", "Qr must be >= 0");
      table.columns = {"alpha", "rho_up", "rho_down", "p_diff", "p"};
      for (double a : req.grid) make_model(req.voltage, a, std::nullopt);
      detail::parallel_for(n, [&](std::size_t i) {
        const double a = req.grid[i];
        const auto d = spin_densities(req.qr, a);
        const double p =
            integrated_polarisation(DetectorDisk(req.detector_radius), make_model(req.voltage, a, std::nullopt));
        table.rows[i] = {a, d.rho_up, d.rho_down, differential_polarisation(req.qr, a), p};
      });
      break;
    }
    case SweepAxis::voltage: {
      if (!(req.detector_radius > 0.0)) {
        throw ConfigError("detector_radius", "detector radius must be positive");
      }
      for (double u : req.grid) make_model(u, req.alpha, req.alpha_band);
      table.columns = req.alpha_band ? std::vector<std::string>{"voltage", "p", "de", "fom"}
                                     : std::vector<std::string>{"voltage", "p"};
      const DetectorDisk disk(req.detector_radius);
      detail::parallel_for(n, [&](std::size_t i) {
        const double u = req.grid[i];
        const BeamModel model = make_model(u, req.alpha, req.alpha_band);
        if (const auto* annular = std::get_if<AnnularBeam>(&model)) {
          const auto r = evaluate(disk, *annular);
          table.rows[i] = {u, r.polarisation, r.detection_efficiency, r.figure_of_merit};
        } else {
          table.rows[i] = {u, integrated_polarisation(disk, model)};
        }
      });
      break;
    }
  }
  return table;
}

}  // namespace stoc

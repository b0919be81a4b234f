#include "stoc/transfer.hpp"

#include <cmath>
#include <string>

#include "stoc/bessel.hpp"
#include "stoc/errors.hpp"
#include "stoc/quadrature.hpp"

namespace stoc {

namespace {
const cplx kI(0.0, 1.0);
}

Matrix2c transfer_matrix(double qr, const RotationSpec& spec, double phi) {
  if (!(qr >= 0.0)) {
    throw DomainError("transfer_matrix needs Qr >= 0, got " + std::to_string(qr));
  }
  const auto [j0, j1, j2] = bessel_j012(qr);
  const double c = std::cos(0.5 * spec.alpha);
  const double s = std::sin(0.5 * spec.alpha);
  const double ct = std::cos(spec.theta);
  const double st = std::sin(spec.theta);
  const cplx e1 = std::polar(1.0, phi);
  const cplx e2 = std::polar(1.0, 2.0 * phi);
  const cplx p0 = std::polar(1.0, spec.phi0);
  return {j1 * e1 * (c - kI * s * ct), -j0 * s * st * std::conj(p0),
          j2 * e2 * s * st * p0, j1 * e1 * (c + kI * s * ct)};
}

Spinor evolve_pure(const Spinor& input, double qr, const RotationSpec& spec, double phi) {
  return transfer_matrix(qr, spec, phi) * input;
}

AnnularBeam::AnnularBeam(const BeamParams& beam, const AnnularAperture& aperture,
                         double theta, double phi0)
    : beam_(beam), aperture_(aperture), theta_(theta), phi0_(phi0) {
  RotationSpec{aperture.alpha_center(), theta, phi0}.validate();
  const double k = beam.wavenumber();
  q_min_ = k * std::sin(aperture.alpha_min());
  q_max_ = k * std::sin(aperture.alpha_max());
  // 2 pi int_{q_min}^{q_max} q dq, written to avoid cancellation for thin bands.
  const double q_dq = 0.5 * (q_max_ - q_min_) * (q_max_ + q_min_);
  norm_ = std::sqrt(2.0 * kPi * q_dq);
  band_weight_ = q_dq / norm_;
}

AnnularBeam::RadialAmplitudes AnnularBeam::radial_amplitudes(double r) const {
  if (!(r >= 0.0)) {
    throw DomainError("annular field needs r >= 0, got " + std::to_string(r));
  }
  const double k = beam_.wavenumber();
  const double k2 = k * k / norm_;
  auto integrand = [&](double a) {
    const double sa = std::sin(a);
    const double q = k * sa;
    const double w = k2 * sa * std::cos(a);
    const auto [j0, j1, j2] = bessel_j012(q * r);
    const double c = std::cos(0.5 * a) * w;
    const double s = std::sin(0.5 * a) * w;
    return quad::Vec<4>{j1 * c, j1 * s, j0 * s, j2 * s};
  };
  quad::Options opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-14 * band_weight_;
  // One panel per half oscillation of the Bessel factors across the band.
  const double oscillations = (q_max_ - q_min_) * r / kPi;
  opt.initial_panels = std::max(aperture_.n_samples(), static_cast<int>(2.0 * oscillations) + 1);
  opt.max_panels = std::max(4000, 8 * opt.initial_panels);
  const auto res = quad::integrate<4>(integrand, aperture_.alpha_min(), aperture_.alpha_max(), opt);
  return {res.value[0], res.value[1], res.value[2], res.value[3]};
}

Matrix2c AnnularBeam::amplitude(const FieldPoint& p) const {
  const RadialAmplitudes a = radial_amplitudes(p.r);
  const double ct = std::cos(theta_);
  const double st = std::sin(theta_);
  const cplx e1 = std::polar(1.0, p.phi);
  const cplx e2 = std::polar(1.0, 2.0 * p.phi);
  const cplx p0 = std::polar(1.0, phi0_);
  return {e1 * (a.j1_cos - kI * ct * a.j1_sin), -st * a.j0_sin * std::conj(p0),
          e2 * st * a.j2_sin * p0, e1 * (a.j1_cos + kI * ct * a.j1_sin)};
}

AnnularBeam::Densities AnnularBeam::unpolarized_densities(double r) const {
  const RadialAmplitudes a = radial_amplitudes(r);
  const double ct = std::cos(theta_);
  const double st2 = 1.0 - ct * ct;
  const double diag = a.j1_cos * a.j1_cos + ct * ct * a.j1_sin * a.j1_sin;
  return {0.5 * (diag + st2 * a.j0_sin * a.j0_sin), 0.5 * (diag + st2 * a.j2_sin * a.j2_sin)};
}

Spinor annular_field(const Spinor& input, const FieldPoint& p, const AnnularBeam& beam) {
  return beam.amplitude(p) * input;
}

AngularMomenta expectation_angular_momenta(SpinInput which, double alpha) {
  const double c2 = std::pow(std::cos(0.5 * alpha), 2);
  const double s2 = std::pow(std::sin(0.5 * alpha), 2);
  if (which == SpinInput::up) {
    // Spin-flipped part carries OAM 2 and S_z = -1/2.
    return {c2 + 2.0 * s2, 0.5 * (c2 - s2), 1.5};
  }
  // Spin-flipped part carries OAM 0 and S_z = +1/2; the unflipped part keeps
  // OAM 1 and S_z = -1/2.
  return {c2, 0.5 * (s2 - c2), 0.5};
}

}  // namespace stoc

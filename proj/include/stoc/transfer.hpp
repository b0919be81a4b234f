#pragma once

#include "stoc/beamline.hpp"
#include "stoc/spinor.hpp"

namespace stoc {

// Cylindrical position in the observation plane.
struct FieldPoint {
  double r = 0.0;    // nm
  double phi = 0.0;  // rad
};

// Transfer matrix of an infinitely thin ring aperture carrying topological
// charge +1, evaluated at dimensionless radius qr = Q r and azimuth phi:
//
//   [ J1 e^{i phi}(c - i s cos th)     -J0 s sin th e^{-i phi0}      ]
//   [ J2 e^{2i phi} s sin th e^{i phi0}  J1 e^{i phi}(c + i s cos th) ]
//
// with c = cos(alpha/2), s = sin(alpha/2). The common factor i e^{ikz} is a
// global phase and is omitted; no observable depends on it.
Matrix2c transfer_matrix(double qr, const RotationSpec& spec, double phi);

// T w for a (normalized) input spinor.
Spinor evolve_pure(const Spinor& input, double qr, const RotationSpec& spec, double phi);

// Radially resolved amplitudes of a finite-width ring aperture. The aperture
// is illuminated uniformly (weight q dq = k^2 sin a cos a da) and the output
// is the coherent sum of transfer matrices across the band, with both Q and
// the spin-rotation angle varying with alpha. Normalized so that the total
// beam power 2 pi int sum_s |A w|^2 r dr equals 1 for any unit spinor w.
class AnnularBeam {
 public:
  // Band integrals of the four Bessel/rotation combinations at radius r,
  // already divided by the normalization constant:
  //   j1_cos = int J1(qr) cos(a/2) dmu,  j1_sin = int J1(qr) sin(a/2) dmu,
  //   j0_sin = int J0(qr) sin(a/2) dmu,  j2_sin = int J2(qr) sin(a/2) dmu.
  struct RadialAmplitudes {
    double j1_cos = 0.0;
    double j1_sin = 0.0;
    double j0_sin = 0.0;
    double j2_sin = 0.0;
  };

  // Throws DomainError for an invalid axis (theta outside [0, pi]).
  AnnularBeam(const BeamParams& beam, const AnnularAperture& aperture,
              double theta = 0.5 * kPi, double phi0 = 0.0);

  const BeamParams& beam() const noexcept { return beam_; }
  const AnnularAperture& aperture() const noexcept { return aperture_; }
  double theta() const noexcept { return theta_; }
  double phi0() const noexcept { return phi0_; }

  double q_min() const noexcept { return q_min_; }
  double q_max() const noexcept { return q_max_; }
  // sqrt(2 pi int q dq): power normalization from Parseval's theorem.
  double normalization() const noexcept { return norm_; }
  // int q dq / normalization. Dividing A by this gives the band-averaged T.
  double band_weight() const noexcept { return band_weight_; }

  RadialAmplitudes radial_amplitudes(double r) const;

  // A(r, phi): coherent band integral of transfer_matrix.
  Matrix2c amplitude(const FieldPoint& p) const;

  // Local diagonal densities of A rho A^dagger for rho = 1/2 identity,
  // azimuth independent.
  struct Densities {
    double up;
    double down;
  };
  Densities unpolarized_densities(double r) const;

 private:
  BeamParams beam_;
  AnnularAperture aperture_;
  double theta_;
  double phi0_;
  double q_min_;
  double q_max_;
  double norm_;
  double band_weight_;
};

// A(r, phi) w for an annular beam. Throws DomainError when r < 0.
Spinor annular_field(const Spinor& input, const FieldPoint& p, const AnnularBeam& beam);

enum class SpinInput { up, down };

// Closed-form expectation values (in units of hbar) of orbital, spin and
// total angular momentum along z for a pure spin-up or spin-down input,
// rotation axis perpendicular to z. J_z is 3/2 (up) or 1/2 (down) for every
// alpha.
struct AngularMomenta {
  double lz;
  double sz;
  double jz;
};
AngularMomenta expectation_angular_momenta(SpinInput which, double alpha);

}  // namespace stoc

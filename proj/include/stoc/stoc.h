/*
 * stoc: spin-to-orbital conversion of electron Bessel beams in a magnetic
 * round lens. C interface to the simulation core.
 *
 * Every function returns a stoc_status. On failure a one-line description is
 * available from stoc_last_error() until the next failing call on the same
 * thread. Units: volts, radians, nm, nm^-1.
 */
#ifndef STOC_STOC_H
#define STOC_STOC_H

#include <stddef.h>

#if defined(_WIN32)
#  define STOC_API __declspec(dllexport)
#else
#  define STOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  STOC_OK = 0,
  STOC_ERR_DOMAIN = 1,    /* argument outside its physical range */
  STOC_ERR_MODE = 2,      /* quantity undefined for this beam mode */
  STOC_ERR_NUMERICAL = 3, /* quadrature did not converge */
  STOC_ERR_NULL = 4,      /* required pointer argument was NULL */
  STOC_ERR_UNKNOWN = 99
} stoc_status;

/* Opaque beam model: either a pure (single-Q) Bessel beam or a beam shaped by
 * a finite-width ring aperture. */
typedef struct stoc_beam stoc_beam;

typedef struct {
  double polarisation;
  double detection_efficiency;
  double figure_of_merit;
} stoc_polarimetry;

STOC_API const char* stoc_version(void);
STOC_API const char* stoc_last_error(void);

STOC_API stoc_status stoc_wavenumber_from_voltage(double voltage, double* wavenumber);

/* Pure Bessel beam observables at dimensionless radius qr = Q r. */
STOC_API stoc_status stoc_spin_densities(double qr, double alpha, double* rho_up,
                                         double* rho_down);
STOC_API stoc_status stoc_differential_polarisation(double qr, double alpha, double* p);

/* Transfer matrix (global phase i e^{ikz} omitted), row-major, interleaved
 * re/im: out[0] = Re T11, out[1] = Im T11, out[2] = Re T12, ... */
STOC_API stoc_status stoc_transfer_matrix(double qr, double alpha, double theta, double phi0,
                                          double phi, double out[8]);

/* Closed-form <L_z>, <S_z>, <J_z> in units of hbar. spin_up != 0 selects the
 * spin-up input. */
STOC_API stoc_status stoc_angular_momenta(int spin_up, double alpha, double* lz, double* sz,
                                          double* jz);

STOC_API stoc_status stoc_beam_create_pure(double voltage, double alpha, stoc_beam** out);
STOC_API stoc_status stoc_beam_create_annular(double voltage, double alpha_min,
                                              double alpha_max, stoc_beam** out);
STOC_API void stoc_beam_destroy(stoc_beam* beam);

STOC_API stoc_status stoc_beam_wavenumber(const stoc_beam* beam, double* wavenumber);
STOC_API int stoc_beam_is_annular(const stoc_beam* beam);

/* Integrated polarisation over an ascending radius grid (radii >= 0). */
STOC_API stoc_status stoc_beam_polarisation_sweep(const stoc_beam* beam, const double* radii,
                                                  size_t n, double* p);

/* p, DE and FoM over an ascending radius grid. Annular beams only. */
STOC_API stoc_status stoc_beam_fom_sweep(const stoc_beam* beam, const double* radii, size_t n,
                                         stoc_polarimetry* out);

/* Peak of FoM over detector radius in [lo, hi]. Annular beams only. */
STOC_API stoc_status stoc_beam_fom_peak(const stoc_beam* beam, double lo, double hi,
                                        double* radius, double* fom);

#ifdef __cplusplus
}
#endif

#endif /* STOC_STOC_H */

/* C interface to the fockfringe library.
 *
 * Every function that can fail returns an ff_status; FF_OK is 0. On failure
 * ff_last_error() describes the most recent error on the calling thread.
 * Output parameters may be NULL to skip them. Handles returned through
 * *_create must be released with the matching *_free (NULL-safe).
 *
 * Conventions: delays in seconds, angles in radians, angular frequencies in
 * rad/s. A `samples` argument of 0 or less selects the default (256).
 */
#ifndef FOCKFRINGE_H
#define FOCKFRINGE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ff_status {
  FF_OK = 0,
  FF_ERR_PARAM = 1,        /* argument outside its documented range */
  FF_ERR_CAPACITY = 2,     /* photon number above the supported cap */
  FF_ERR_PRECONDITION = 3, /* operation applied to a state in the wrong stage */
  FF_ERR_DATA = 4,         /* supplied data unusable (e.g. degenerate fit) */
  FF_ERR_INTERNAL = 5
} ff_status;

const char* ff_status_name(ff_status status);

/* Message for the last failure on this thread; empty string if none. */
const char* ff_last_error(void);

/* Default wavepacket parameters and the photon-number cap. */
double ff_default_omega0(void);
double ff_default_delta_omega(void);
int ff_photon_cap(void);

/* Overlap decomposition of a delayed wavepacket mode: alpha is the component
 * on the undelayed reference mode, beta the orthogonal remainder. */
ff_status ff_decompose(double tau_s, double omega0, double delta_omega, double* alpha_re,
                       double* alpha_im, double* beta_re, double* beta_im);

/* Detection probability for the (|N,M>+|M,N>)/sqrt2 input with the path-B
 * delay, a balanced beam splitter, and (at_c, at_d) coincidence detection.
 * theta overrides the interferometer phase at the given envelope delay. */
ff_status ff_probability(int n, int m, int at_c, int at_d, double tau_s, double theta,
                         double omega0, double delta_omega, double* probability);

/* Phase scan of the detection probability over a uniform [0, 2pi) grid. */
typedef struct ff_scan ff_scan;
ff_status ff_scan_create(int n, int m, int at_c, int at_d, double tau_s, double omega0,
                         double delta_omega, int samples, ff_scan** out);
void ff_scan_free(ff_scan* scan);
int ff_scan_size(const ff_scan* scan);
/* Copies size() entries into each non-NULL array. */
ff_status ff_scan_copy(const ff_scan* scan, double* thetas, double* probabilities);

/* Fringe visibility, signed contrast, and dominant harmonic per delay. */
typedef struct ff_vis_curve ff_vis_curve;
ff_status ff_vis_curve_create(int n, int m, int at_c, int at_d, const double* taus_s,
                              int tau_count, double omega0, double delta_omega, int samples,
                              ff_vis_curve** out);
void ff_vis_curve_free(ff_vis_curve* curve);
int ff_vis_curve_size(const ff_vis_curve* curve);
ff_status ff_vis_curve_point(const ff_vis_curve* curve, int index, double* tau_s,
                             double* visibility, double* signed_contrast,
                             int* dominant_harmonic);

/* Detection probability split by the number of photons left in the undelayed
 * reference mode. Parts are indexed in descending photon count; each is
 * offset + amplitude * cos(harmonic * theta + phase). */
typedef struct ff_budget ff_budget;
ff_status ff_budget_create(int n, int m, int at_c, int at_d, double tau_s, double omega0,
                           double delta_omega, int samples, ff_budget** out);
void ff_budget_free(ff_budget* budget);
int ff_budget_size(const ff_budget* budget);
int ff_budget_harmonic(const ff_budget* budget);
ff_status ff_budget_part(const ff_budget* budget, int index, int* non_tilded_count,
                         double* offset, double* amplitude, double* phase);

/* Weighted least squares of counts ~ offset + amplitude cos(h theta + phase).
 * stddevs may be NULL for unweighted fitting; visibility is amplitude/offset
 * and negative_offset flags a fit whose offset came out negative. */
ff_status ff_fit_sinusoid(const double* thetas, const double* counts, const double* stddevs,
                          int count, int harmonic, double* offset, double* amplitude,
                          double* phase, double* residual, double* visibility,
                          int* negative_offset);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FOCKFRINGE_H */

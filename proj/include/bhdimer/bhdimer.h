/* C interface to the extended Bose-Hubbard dimer simulator.
 *
 * Units: hbar = 1, energies in units of eps1, time in units of hbar/eps1.
 * Every function returns a bhd_status; on failure bhd_last_error() holds a
 * thread-local message describing the most recent error. */
#ifndef BHDIMER_H_
#define BHDIMER_H_

#include <stddef.h>

#if defined(_WIN32)
#define BHD_API __declspec(dllexport)
#else
#define BHD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bhd_status {
  BHD_OK = 0,
  BHD_ERR_INVALID_ARGUMENT = 1,
  BHD_ERR_SYMMETRY_VIOLATION = 2,
  BHD_ERR_SITE_ASYMMETRY = 3,
  BHD_ERR_DEGENERATE_SPECTRUM = 4,
  BHD_ERR_INVALID_DISTRIBUTION = 5,
  BHD_ERR_DOMAIN = 6,
  BHD_ERR_PARSE = 7,
  BHD_ERR_IO = 8,
  BHD_ERR_INTERNAL = 9
} bhd_status;

typedef enum bhd_family {
  BHD_FAMILY_FAST = 0,
  BHD_FAMILY_SLOW = 1,
  BHD_FAMILY_EW = 2
} bhd_family;

typedef enum bhd_regime {
  BHD_REGIME_STRONG_J = 0,
  BHD_REGIME_STRONG_K = 1
} bhd_regime;

typedef enum bhd_region {
  BHD_REGION_INSIDE = 0,
  BHD_REGION_BOUNDARY = 1,
  BHD_REGION_OUTSIDE = 2
} bhd_region;

typedef struct bhd_params {
  double eps0, eps1, eps01, U, J, K;
} bhd_params;

typedef struct bhd_distribution {
  double r[3];
  double theta[3];
} bhd_distribution;

/* eigvecs[3 * k + n] = <n|E_k>. */
typedef struct bhd_spectrum {
  double energies[3];
  double eigvecs[9];
  double p, q, phi;
  double omega21, omega32, omega31;
} bhd_spectrum;

typedef struct bhd_sample {
  double t;
  double R[3];
  double concurrence;
  double mean_n1;
  double var_n1;
  double survival; /* |<psi(0)|psi(t)>| */
} bhd_sample;

typedef struct bhd_simplex_point {
  double r[3];
  bhd_region region;
  double concurrence;
} bhd_simplex_point;

/* Opaque handle: a Hamiltonian together with its spectral decomposition. */
typedef struct bhd_model_s* bhd_model;

typedef void (*bhd_verify_callback)(const char* group, int passed,
                                    const char* detail, void* user);

#define BHD_VERIFY_INJECT_H02_SIGN_ERROR 0x1u

BHD_API const char* bhd_version(void);
BHD_API const char* bhd_status_string(bhd_status status);
BHD_API const char* bhd_last_error(void);

BHD_API void bhd_params_default(bhd_params* out);

/* Reads a flat `key = value` file. has_dist is set to 1 when r1..r3 are
 * present; dist may be NULL if the caller does not need it. */
BHD_API bhd_status bhd_config_load(const char* path, bhd_params* params,
                                   bhd_distribution* dist, int* has_dist);

BHD_API bhd_status bhd_model_create(const bhd_params* params, bhd_model* out);
BHD_API void bhd_model_destroy(bhd_model model);

/* Row-major Fock-basis matrix. */
BHD_API bhd_status bhd_model_matrix(bhd_model model, double out[9]);
BHD_API bhd_status bhd_model_spectrum(bhd_model model, bhd_spectrum* out);

/* Fills out[j] for each absolute time times[j]. */
BHD_API bhd_status bhd_model_evolve(bhd_model model,
                                    const bhd_distribution* dist,
                                    const double* times, size_t count,
                                    bhd_sample* out);

BHD_API bhd_status bhd_model_orthogonality_time(bhd_model model,
                                                const bhd_distribution* dist,
                                                double t_max, double tol,
                                                double* tau, int* found);

/* pi/w31 (fast), pi/w21 (slow) or 4 pi/(3 w31) (ew). */
BHD_API bhd_status bhd_model_characteristic_time(bhd_model model,
                                                 bhd_family family,
                                                 double* tau);

BHD_API bhd_status bhd_family_distribution(bhd_family family,
                                           bhd_distribution* out);

BHD_API bhd_status bhd_limit_concurrence(bhd_family family, bhd_regime regime,
                                         double tau, double t, double* out);

BHD_API bhd_status bhd_regime_deviation(bhd_family family, bhd_regime regime,
                                        double eps1, double amp,
                                        const double* t_over_tau, size_t count,
                                        double* out);

BHD_API bhd_status bhd_classify(const double r[3], bhd_region* out);

/* Number of points for resolution n: (n + 1)(n + 2) / 2. */
BHD_API bhd_status bhd_simplex_count(int n, size_t* out);
BHD_API bhd_status bhd_simplex_sample(int n, bhd_simplex_point* out,
                                      size_t capacity);

/* Runs the built-in oracle suite, reporting each group through callback
 * (may be NULL). all_passed is 1 when every group passed. */
BHD_API bhd_status bhd_verify(unsigned flags, bhd_verify_callback callback,
                              void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* BHDIMER_H_ */

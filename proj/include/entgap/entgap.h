#ifndef ENTGAP_ENTGAP_H
#define ENTGAP_ENTGAP_H

/* C interface to the entanglement-gap toolkit.
 *
 * Every function returns an entgap_status; on failure entgap_last_error()
 * returns a message for the calling thread. Handles are opaque and owned by
 * the caller (free with the matching *_free). Optional numeric results are
 * reported as NaN when undefined. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ENTGAP_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ENTGAP_API __attribute__((visibility("default")))
#else
#define ENTGAP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entgap_status {
  ENTGAP_OK = 0,
  ENTGAP_INVALID_ARGUMENT = 1,
  ENTGAP_DIMENSION = 2,
  ENTGAP_NOT_CONVERGED = 3,
  ENTGAP_IO = 4,
  ENTGAP_NO_SOLUTION = 5,
  ENTGAP_BUFFER_TOO_SMALL = 6,
  ENTGAP_INTERNAL = 99
} entgap_status;

typedef struct entgap_operator entgap_operator;
typedef struct entgap_lattice entgap_lattice;

ENTGAP_API const char* entgap_last_error(void);
ENTGAP_API const char* entgap_version(void);

/* operators */
ENTGAP_API entgap_status entgap_model_create(const char* id, entgap_operator** out);
ENTGAP_API entgap_status entgap_operator_from_json(const char* text, entgap_operator** out);
ENTGAP_API entgap_status entgap_operator_load(const char* path, entgap_operator** out);
ENTGAP_API entgap_status entgap_operator_save(const entgap_operator* op, const char* path);
/* Writes NUL-terminated JSON; *needed receives the required size including NUL. */
ENTGAP_API entgap_status entgap_operator_to_json(const entgap_operator* op, char* buf, size_t cap, size_t* needed);
ENTGAP_API void entgap_operator_free(entgap_operator* op);
ENTGAP_API entgap_status entgap_operator_side(const entgap_operator* op, size_t* side);
ENTGAP_API entgap_status entgap_operator_dims(const entgap_operator* op, size_t* dims, size_t cap, size_t* n);
/* Ascending eigenvalues; *n receives the side. */
ENTGAP_API entgap_status entgap_operator_spectrum(const entgap_operator* op, double* eigenvalues, size_t cap,
                                                  size_t* n, size_t* ground_degeneracy);

/* lattices */
ENTGAP_API entgap_status entgap_lattice_create(const char* id, entgap_lattice** out);
ENTGAP_API void entgap_lattice_free(entgap_lattice* lat);
ENTGAP_API entgap_status entgap_lattice_info(const entgap_lattice* lat, size_t* n_sites, size_t* n_bonds,
                                             int* bipartite);

/* entanglement gap */
typedef struct entgap_gap_options {
  size_t restarts;     /* seesaw restarts, >= 1 */
  uint64_t seed;
  int compute_ppt;     /* 0 disables the PPT lower bound */
  double sdp_tol;      /* duality gap and residual tolerance */
  size_t ppt_max_side; /* PPT skipped above this side */
  size_t dense_cutoff;
} entgap_gap_options;

ENTGAP_API void entgap_gap_options_default(entgap_gap_options* options);

typedef struct entgap_gap_report {
  double e0;
  double e_max;
  double e_sep_lower;
  double e_sep_upper;
  double gap_lower;
  double gap_upper;
  double scaled_gap_lower;
  double scaled_gap_upper;
  double witness_offset;
  int lower_from_ppt;
  int ppt_converged;
} entgap_gap_report;

ENTGAP_API entgap_status entgap_gap(const entgap_operator* op, const entgap_gap_options* options,
                                    entgap_gap_report* report);
/* Per-bond values for the coupling summed over the lattice bonds. */
ENTGAP_API entgap_status entgap_lattice_gap(const entgap_lattice* lat, const entgap_operator* coupling,
                                            const entgap_gap_options* options, entgap_gap_report* report);

/* thermal */
ENTGAP_API entgap_status entgap_thermal_energy(const entgap_operator* op, double temperature, double* energy);
/* ENTGAP_NO_SOLUTION when e_sep is outside (E0, mean eigenvalue). Bisection stops once the temperature
 * bracket is narrower than bisect_tol; 0 runs to machine precision. */
ENTGAP_API entgap_status entgap_gap_temperature(const entgap_operator* op, double e_sep, double bisect_tol,
                                                double* temperature, double* scaled);
ENTGAP_API entgap_status entgap_thermal_curve(const entgap_operator* op, const double* temperatures, size_t n,
                                              double* energies, int* ppt);

typedef struct entgap_window_options {
  double t_min;
  double t_max;
  size_t grid;
  double refine_tol;
} entgap_window_options;

ENTGAP_API void entgap_window_options_default(entgap_window_options* options);
/* *found = 0 and ENTGAP_OK when the window is empty. */
ENTGAP_API entgap_status entgap_window(const entgap_operator* op, double e_sep_ref,
                                       const entgap_window_options* options, double* t_low, double* t_high,
                                       int* found);

/* tables */
typedef struct entgap_table1_row {
  size_t k;
  double e0_per_bond;
  double e0_exact_per_bond;
  double e_max_per_bond;
  double esep_per_bond;
  double gap_per_bond;
  double scaled_gap;
} entgap_table1_row;

ENTGAP_API entgap_status entgap_table1(size_t k_max, const entgap_gap_options* options, entgap_table1_row* rows,
                                       size_t cap, size_t* n);

typedef struct entgap_table2_row {
  char lattice[32];
  size_t coordination;
  double e0_per_bond;
  double e_max_per_bond;
  double esep_per_bond;
  double esep_lower_per_bond;
  double gap_per_bond;
  double scaled_gap;
  char e0_source[64];
} entgap_table2_row;

ENTGAP_API entgap_status entgap_table2(const entgap_gap_options* options, entgap_table2_row* rows, size_t cap,
                                       size_t* n);

typedef struct entgap_xy_point {
  double gamma;
  double lambda;
  double e_sep;
  double e0;
  double e_max;
  double gap;
  double scaled_gap;
} entgap_xy_point;

/* out must hold ng * nl points, row-major over (gamma, lambda). */
ENTGAP_API entgap_status entgap_xy_scan(const double* gammas, size_t ng, const double* lambdas, size_t nl,
                                        entgap_xy_point* out);

typedef struct entgap_search_result {
  double max_t;
  double e1;
  double e2;
  char basis_hash[17];
  size_t argmax_index;
  size_t n_samples;
  size_t n_skipped_zero_gap;
  size_t n_crosschecked;
  double max_crosscheck_discrepancy;
} entgap_search_result;

ENTGAP_API entgap_status entgap_search_2q(size_t samples, uint64_t seed, int singlet_ground,
                                          entgap_search_result* result);

typedef struct entgap_temperature_row {
  size_t d;
  double t_maxent;
  double t_maxent_closed;
  double t_sym;
  double t_sym_closed;
  double ces_esep_lower;
  double ces_esep_upper;
  double t_ces_lower;
  double t_ces_upper;
} entgap_temperature_row;

ENTGAP_API entgap_status entgap_compare_temps(const size_t* dims, size_t n, const entgap_gap_options* options,
                                              size_t product_samples, entgap_temperature_row* rows);

#ifdef __cplusplus
}
#endif

#endif

// Copyright 2026 The latticecd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATTICECD_H_
#define LATTICECD_H_

/* C interface to latticecd: exact counterdiabatic driving on 1D chains.
 *
 * Objects are opaque handles released with their *_free function (free
 * functions accept NULL). Every fallible call returns an lcd_status; on
 * failure lcd_last_error() describes the cause (thread local, valid until
 * the next failing call on the same thread). Matrices are exchanged
 * row-major, eigenvectors column-major. Lattice indices run over sites
 * x0 + 1 .. L - 1. */

#include <stddef.h>

#if defined(LCD_BUILDING_LIBRARY)
#define LCD_API __attribute__((visibility("default")))
#else
#define LCD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LCD_OK = 0,
  LCD_ERR_INVALID_ARGUMENT = 1,
  LCD_ERR_SINGULAR = 2,
  LCD_ERR_DOMAIN = 3,
  LCD_ERR_UNSUPPORTED = 4,
  LCD_ERR_NOT_CONVERGED = 5,
  LCD_ERR_IO = 6,
  LCD_ERR_INTERNAL = 7
} lcd_status;

typedef enum { LCD_CD_NONE = 0, LCD_CD_FULL = 1, LCD_CD_TARGETED = 2 } lcd_cd_mode;

typedef enum {
  LCD_SPECTRUM_BARE = 0,
  LCD_SPECTRUM_FULL_CD = 1,
  LCD_SPECTRUM_TARGETED_CD = 2
} lcd_spectrum_mode;

typedef struct {
  double re;
  double im;
} lcd_complex;

typedef struct lcd_lattice lcd_lattice;
typedef struct lcd_matrix lcd_matrix;
typedef struct lcd_state lcd_state;
typedef struct lcd_basis lcd_basis;
typedef struct lcd_sweep lcd_sweep;
typedef struct lcd_spectrum lcd_spectrum;
typedef struct lcd_report lcd_report;

LCD_API const char* lcd_version(void);
LCD_API const char* lcd_last_error(void);
LCD_API const char* lcd_status_string(lcd_status status);

/* Lattices ------------------------------------------------------------- */

/* SSH chain, hopping 1 - lambda (-1)^x on bond (x, x+1). */
LCD_API lcd_status lcd_lattice_ssh(int L, int x0, double lambda, lcd_lattice** out);
/* hopping[b] multiplies b^dagger_x b_{x+1} for bond b = x - x0 - 1. */
LCD_API lcd_status lcd_lattice_create(int x0, int L, const lcd_complex* hopping, size_t n_hopping,
                                      const double* potential, size_t n_potential, int tau,
                                      lcd_lattice** out);
LCD_API void lcd_lattice_free(lcd_lattice* lattice);
LCD_API int lcd_lattice_sites(const lcd_lattice* lattice);
LCD_API int lcd_lattice_site_of(const lcd_lattice* lattice, int index);

/* Matrices ------------------------------------------------------------- */

LCD_API lcd_status lcd_hamiltonian(const lcd_lattice* lattice, lcd_matrix** out);
/* Symmetrizes (m + m^dagger) / 2; residual receives max |m - m^dagger|. */
LCD_API lcd_status lcd_matrix_hermitize(int dim, const lcd_complex* entries, lcd_matrix** out,
                                        double* residual);
LCD_API void lcd_matrix_free(lcd_matrix* m);
LCD_API int lcd_matrix_dim(const lcd_matrix* m);
LCD_API lcd_status lcd_matrix_entries(const lcd_matrix* m, lcd_complex* out, size_t n);
LCD_API lcd_status lcd_matrix_band_limit(const lcd_matrix* m, int d, lcd_matrix** out);
/* out = a + s b */
LCD_API lcd_status lcd_matrix_axpy(const lcd_matrix* a, double s, const lcd_matrix* b,
                                   lcd_matrix** out);
LCD_API double lcd_matrix_frobenius(const lcd_matrix* m);
LCD_API lcd_status lcd_matrix_diagonal_ratio(const lcd_matrix* m, int d, double* out);

/* values: dim doubles, ascending. vectors: dim*dim, column-major, may be NULL. */
LCD_API lcd_status lcd_eigh(const lcd_matrix* m, double* values, lcd_complex* vectors);
LCD_API lcd_status lcd_gap_to_zero_mode(const double* values, size_t n, double* out);
LCD_API double lcd_ssh_gap_formula(double lambda, int L);

/* States --------------------------------------------------------------- */

typedef struct {
  lcd_complex alpha;
  double energy;
  double norm;
  int band;
  int in_gap;
  double quasimomentum;
  double boundary_residual;
} lcd_state_info;

LCD_API lcd_status lcd_edge_alpha(const lcd_lattice* lattice, double lambda, lcd_complex* out);
LCD_API double lcd_edge_alpha_closed_form(double lambda);
LCD_API lcd_status lcd_in_gap_state(const lcd_lattice* lattice, double lambda, lcd_state** out);
LCD_API lcd_status lcd_full_basis(const lcd_lattice* lattice, double lambda, lcd_basis** out);
LCD_API void lcd_basis_free(lcd_basis* basis);
LCD_API size_t lcd_basis_size(const lcd_basis* basis);
/* Copies state n (sorted by energy, then quasimomentum). */
LCD_API lcd_status lcd_basis_state(const lcd_basis* basis, size_t n, lcd_state** out);
LCD_API void lcd_state_free(lcd_state* state);
LCD_API lcd_status lcd_state_get_info(const lcd_state* state, lcd_state_info* out);
LCD_API lcd_status lcd_state_coeffs(const lcd_state* state, lcd_complex* out, size_t n);
/* path NULL or "-" writes to stdout. manifest may be NULL. */
LCD_API lcd_status lcd_state_write_csv(const lcd_state* state, const lcd_lattice* lattice,
                                       double lambda, const char* manifest, const char* path);
/* Zero mode from the sublattice recursion (odd chains, no potential). */
LCD_API lcd_status lcd_zero_mode(const lcd_lattice* lattice, lcd_complex* out, size_t n);

/* Counterdiabatic generators (lambda-dot free) -------------------------- */

/* Either residual pointer may be NULL. */
LCD_API lcd_status lcd_cd_generator(const lcd_lattice* lattice, double lambda, lcd_cd_mode mode,
                                    lcd_matrix** out, double* antihermitian_residual,
                                    double* diagonal_residual);
LCD_API lcd_status lcd_cd_write_csv(const lcd_lattice* lattice, double lambda, lcd_cd_mode mode,
                                    const char* manifest, const char* path);

/* Dynamics ------------------------------------------------------------- */

typedef struct {
  double lambda0;
  double lambdaf;
  double total_time;
  lcd_cd_mode cd_mode;
  int band_limit; /* < 0: untruncated */
} lcd_protocol;

typedef struct {
  double t;
  double lambda;
  double fidelity_to_instantaneous;
  double norm;
  double energy;
} lcd_trace_point;

typedef void (*lcd_trace_fn)(const lcd_trace_point* point, void* user);

typedef struct {
  double fidelity;
  double norm_drift;
  int steps;
} lcd_evolution;

typedef struct {
  double dt;
  int steps;
  double fidelity;
  double norm_drift;
} lcd_sweep_point;

/* SSH chain (L, x0). trace and final_state (M entries) may be NULL. */
LCD_API lcd_status lcd_propagate(int L, int x0, const lcd_protocol* protocol, double dt,
                                 lcd_trace_fn trace, void* user, lcd_evolution* out,
                                 lcd_complex* final_state);
LCD_API lcd_status lcd_convergence_sweep(int L, int x0, const lcd_protocol* protocol, double dt0,
                                         lcd_sweep** out);
LCD_API void lcd_sweep_free(lcd_sweep* sweep);
LCD_API size_t lcd_sweep_size(const lcd_sweep* sweep);
LCD_API int lcd_sweep_converged(const lcd_sweep* sweep);
LCD_API lcd_status lcd_sweep_point_at(const lcd_sweep* sweep, size_t i, lcd_sweep_point* out);

/* Spectra -------------------------------------------------------------- */

LCD_API lcd_status lcd_spectrum_sweep(int L, int x0, const double* grid, size_t n,
                                      lcd_spectrum_mode mode, double lambda_dot,
                                      lcd_spectrum** out);
LCD_API void lcd_spectrum_free(lcd_spectrum* spectrum);
LCD_API size_t lcd_spectrum_rows(const lcd_spectrum* spectrum);
LCD_API int lcd_spectrum_sites(const lcd_spectrum* spectrum);
/* energies: M doubles, untouched for a skipped row. reason may be NULL. */
LCD_API lcd_status lcd_spectrum_row(const lcd_spectrum* spectrum, size_t row, double* lambda,
                                    int* skipped, double* energies, const char** reason);

/* Self check ----------------------------------------------------------- */

typedef struct {
  const char* name; /* owned by the report */
  int passed;
  double value;
  double bound;
  const char* detail;
} lcd_check;

LCD_API lcd_status lcd_certify(int sites, double lambda0, double lambdaf, double total_time,
                               lcd_report** out);
LCD_API void lcd_report_free(lcd_report* report);
LCD_API size_t lcd_report_size(const lcd_report* report);
LCD_API lcd_status lcd_report_check(const lcd_report* report, size_t i, lcd_check* out);

#ifdef __cplusplus
}
#endif

#endif /* LATTICECD_H_ */

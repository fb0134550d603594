/* Public C interface of the grid stability engine.
 *
 * Conventions:
 *   - Every fallible call returns gs_status; GS_OK is 0.  On failure the
 *     out-parameters are untouched and gs_last_error() returns a
 *     thread-local message describing the most recent failure.
 *   - Objects are opaque handles created by gs_*_new/load/run calls and
 *     released with the matching gs_*_free (safe on NULL).
 *   - char** out-parameters receive a heap string owned by the caller; free
 *     it with gs_string_free.  const char* returns are static or
 *     thread-local and must not be freed.
 */
#ifndef GRIDSTAB_H
#define GRIDSTAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_INVALID_ARGUMENT,
  GS_ERR_DIMENSION_MISMATCH,
  GS_ERR_SINGULAR_MATRIX,
  GS_ERR_NOT_SYMMETRIC,
  GS_ERR_NO_CONVERGENCE,
  GS_ERR_DISCONNECTED,
  GS_ERR_UNREACHABLE,
  GS_ERR_NOT_A_TREE,
  GS_ERR_ALREADY_ADJACENT,
  GS_ERR_INVALID_CODE,
  GS_ERR_SINGULAR_LOAD_BLOCK,
  GS_ERR_SINGULAR_PIVOT,
  GS_ERR_NOT_UNIFORM,
  GS_ERR_NON_SYMMETRIC_RESULT,
  GS_ERR_MULTIPLE_ZERO_MODES,
  GS_ERR_NO_ZERO_MODE,
  GS_ERR_ZERO_ADMITTANCE,
  GS_ERR_ODD_REQUIRED,
  GS_ERR_HOP_OUT_OF_RANGE,
  GS_ERR_RANK_DEFICIENT,
  GS_ERR_N_TOO_LARGE,
  GS_ERR_EMPTY_WINDOW,
  GS_ERR_PARSE,
  GS_ERR_IO,
  GS_ERR_UNKNOWN
} gs_status;

typedef enum gs_verdict {
  GS_VERDICT_STABLE = 0,
  GS_VERDICT_UNSTABLE = 1,
  GS_VERDICT_MARGINAL = 2
} gs_verdict;

typedef enum gs_response {
  GS_RESPONSE_DECAYED = 0,
  GS_RESPONSE_OSCILLATING = 1,
  GS_RESPONSE_DIVERGED = 2
} gs_response;

typedef struct gs_grid gs_grid;
typedef struct gs_analysis gs_analysis;
typedef struct gs_sweep gs_sweep;
typedef struct gs_fit gs_fit;
typedef struct gs_trajectory gs_trajectory;
typedef struct gs_tree_report gs_tree_report;
typedef struct gs_cycle_report gs_cycle_report;
typedef struct gs_join_report gs_join_report;

const char* gs_version(void);
const char* gs_last_error(void);
const char* gs_status_name(gs_status s);
const char* gs_verdict_name(gs_verdict v);
const char* gs_response_name(gs_response r);
void gs_string_free(char* s);

/* ---- grids ---------------------------------------------------------- */

gs_status gs_grid_parse_json(const char* text, gs_grid** out);
gs_status gs_grid_load_file(const char* path, gs_grid** out);

/* kind: "star" | "path" | "ring" | "complete" | "circulant".  k_hops is only
 * read for circulant grids.  Branch admittance = conductance + j*susceptance,
 * per-node shunt = shunt_g + j*shunt_b. */
gs_status gs_grid_generate_named(const char* kind, size_t n, size_t k_hops,
                                 double susceptance, double conductance,
                                 double shunt_b, double shunt_g,
                                 gs_grid** out);

/* Labeled tree on len+2 nodes from its sequence encoding; uniform branch
 * admittance j*susceptance. */
gs_status gs_grid_from_tree_code(const size_t* code, size_t len,
                                 double susceptance, gs_grid** out);

void gs_grid_free(gs_grid* g);

gs_status gs_grid_to_json(const gs_grid* g, char** out);
gs_status gs_grid_node_count(const gs_grid* g, size_t* out);
gs_status gs_grid_generator_count(const gs_grid* g, size_t* out);
gs_status gs_grid_edge_count(const gs_grid* g, size_t* out);

/* Warnings attached while parsing (e.g. node renumbering). */
gs_status gs_grid_warning_count(const gs_grid* g, size_t* out);
gs_status gs_grid_warning(const gs_grid* g, size_t index, char** out);

gs_status gs_grid_is_tree(const gs_grid* g, int* out);
gs_status gs_grid_distance(const gs_grid* g, size_t a, size_t b, size_t* out);
gs_status gs_grid_diameter(const gs_grid* g, size_t* out);
/* Length of the cycle that adding edge (a, b) to a tree would create. */
gs_status gs_grid_cycle_length(const gs_grid* g, size_t a, size_t b,
                               size_t* out);

/* Sign-based screen for all-generator grids whose branches all carry
 * admittance j*c with no shunts; never runs an eigensolve. */
gs_status gs_classify_uniform(const gs_grid* g, double c, gs_verdict* out);

/* ---- stability analysis --------------------------------------------- */

/* Full pipeline: nodal matrix, load elimination, coupling matrix, spectrum.
 * phases may be NULL (all-zero operating point) or point at one angle per
 * generator. */
gs_status gs_analyze(const gs_grid* g, double kappa, const double* phases,
                     gs_analysis** out);
void gs_analysis_free(gs_analysis* a);

gs_status gs_analysis_node_count(const gs_analysis* a, size_t* out);
gs_status gs_analysis_generator_count(const gs_analysis* a, size_t* out);
gs_status gs_analysis_alpha2(const gs_analysis* a, double* out);
gs_status gs_analysis_zero_mode(const gs_analysis* a, double* out);
gs_status gs_analysis_verdict(const gs_analysis* a, gs_verdict* out);
gs_status gs_analysis_eigenvalue(const gs_analysis* a, size_t index,
                                 double* out);
gs_status gs_analysis_y0_entry(const gs_analysis* a, size_t r, size_t c,
                               double* re, double* im);
gs_status gs_analysis_y_entry(const gs_analysis* a, size_t r, size_t c,
                              double* re, double* im);
gs_status gs_analysis_p_entry(const gs_analysis* a, size_t r, size_t c,
                              double* out);
/* Diagnostics of the nodal matrix: symmetry residual, row-sum-vs-shunt
 * residual, diagonal dominance flag. */
gs_status gs_analysis_y0_diagnostics(const gs_analysis* a, double* symmetry,
                                     double* row_sum, int* dominant);
/* format: "text" | "json" | "csv". */
gs_status gs_analysis_render(const gs_analysis* a, const char* format,
                             char** out);

/* ---- circulant closed form ------------------------------------------ */

gs_status gs_circulant_alpha2_closed(size_t n, size_t k_hops, double* out);

gs_status gs_circulant_sweep(size_t n_max, gs_sweep** out);
void gs_sweep_free(gs_sweep* s);
gs_status gs_sweep_count(const gs_sweep* s, size_t* out);
gs_status gs_sweep_row(const gs_sweep* s, size_t index, size_t* n,
                       size_t* k_hops, size_t* degree, double* alpha2_closed,
                       double* alpha2_numeric, double* abs_err);
gs_status gs_sweep_to_csv(const gs_sweep* s, char** out);

/* Quadratic surface alpha2 ~ f(n, degree) fitted to a sweep CSV document. */
gs_status gs_fit_from_sweep_csv(const char* csv_text, gs_fit** out);
void gs_fit_free(gs_fit* f);
/* index: 0 const, 1 n, 2 degree, 3 n^2, 4 n*degree, 5 degree^2. */
gs_status gs_fit_coefficient(const gs_fit* f, size_t index, double* out);
gs_status gs_fit_r2(const gs_fit* f, double* out);
gs_status gs_fit_to_json(const gs_fit* f, char** out);

/* ---- pulse response simulation --------------------------------------- */

/* Analyzes the grid, then integrates the damped linearized dynamics with a
 * rectangular acceleration pulse on one generator. */
gs_status gs_simulate(const gs_grid* g, double gamma, double dt, double t_end,
                      size_t pulse_target, double pulse_magnitude,
                      double t_on, double t_off, gs_trajectory** out);
void gs_trajectory_free(gs_trajectory* t);

gs_status gs_trajectory_generator_count(const gs_trajectory* t, size_t* out);
gs_status gs_trajectory_sample_count(const gs_trajectory* t, size_t* out);
/* delta/omega/accel may be NULL or arrays of generator_count doubles. */
gs_status gs_trajectory_sample(const gs_trajectory* t, size_t index,
                               double* time, double* delta, double* omega,
                               double* accel);
/* *diverged is 0/1; *when is set only when it diverged. */
gs_status gs_trajectory_diverged(const gs_trajectory* t, int* diverged,
                                 double* when);
/* Peak-to-peak acceleration over samples with time >= window_start. */
gs_status gs_trajectory_ripple(const gs_trajectory* t, double window_start,
                               double* out);
gs_status gs_trajectory_response(const gs_trajectory* t, gs_response* out);
gs_status gs_trajectory_to_csv(const gs_trajectory* t, char** out);

/* ---- topology experiments -------------------------------------------- */

gs_status gs_tree_experiment(size_t n, gs_tree_report** out);
void gs_tree_report_free(gs_tree_report* r);
gs_status gs_tree_report_instance_count(const gs_tree_report* r, size_t* out);
gs_status gs_tree_report_violation_count(const gs_tree_report* r, size_t* out);
gs_status gs_tree_report_counterexample(const gs_tree_report* r, int* out);
gs_status gs_tree_report_to_csv(const gs_tree_report* r, char** out);

gs_status gs_cycle_experiment(const gs_grid* tree, gs_cycle_report** out);
void gs_cycle_report_free(gs_cycle_report* r);
gs_status gs_cycle_report_finding_count(const gs_cycle_report* r, size_t* out);
gs_status gs_cycle_report_finding(const gs_cycle_report* r, size_t index,
                                  size_t* a, size_t* b, size_t* cycle_length,
                                  double* alpha2);
gs_status gs_cycle_report_violation_count(const gs_cycle_report* r,
                                          size_t* out);
gs_status gs_cycle_report_counterexample(const gs_cycle_report* r, int* out);
gs_status gs_cycle_report_to_csv(const gs_cycle_report* r, char** out);

gs_status gs_join_experiment(const gs_grid* t1, const gs_grid* t2,
                             gs_join_report** out);
void gs_join_report_free(gs_join_report* r);
gs_status gs_join_report_best(const gs_join_report* r, size_t* a, size_t* b,
                              double* alpha2, size_t* diameter);
gs_status gs_join_report_flags(const gs_join_report* r,
                               int* best_is_center_center,
                               int* argmax_minimizes_diameter);
gs_status gs_join_report_to_csv(const gs_join_report* r, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRIDSTAB_H */

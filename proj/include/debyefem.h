/**
 * @file debyefem.h
 * @brief C interface to the debyefem solver library.
 *
 * All entry points return a df_status; on failure df_last_error() gives a
 * human-readable message for the calling thread. Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * destroy/free function. Out-parameters are untouched on failure.
 */

#ifndef DEBYEFEM_H
#define DEBYEFEM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  DF_OK = 0,
  DF_ERR_NULL_ARGUMENT = 1,  /**< a required pointer was NULL */
  DF_ERR_INVALID = 2,        /**< bad config value, key, or parameter */
  DF_ERR_RUNTIME = 3,        /**< solver failure (divergence, inadmissible dt) */
  DF_ERR_IO = 4              /**< file could not be read or written */
} df_status;

/** Simulation configuration: a flat key = value store with typed defaults. */
typedef struct df_config df_config;

/** Result of a single simulation run, queried by metric name. */
typedef struct df_result df_result;

/** Message for the most recent failure on this thread; never NULL. */
const char* df_last_error(void);

/* ------------------------------------------------------------------ config */

/** New configuration with all keys at their defaults. */
df_status df_config_create(df_config** out);

/** Parse `key = value` text ('#' comments, blank lines allowed). */
df_status df_config_parse(const char* text, df_config** out);

/** Parse a configuration file. */
df_status df_config_load(const char* path, df_config** out);

/** Set (or override) one key. Values are validated when the config is used. */
df_status df_config_set(df_config* config, const char* key, const char* value);

void df_config_destroy(df_config* config);

/* -------------------------------------------------------------------- mesh */

/**
 * Mesh sizes for the named domain ("unit_square" or "l_shape") at n cells
 * per unit side. Any of the count pointers may be NULL.
 */
df_status df_mesh_counts(const char* domain, int n, int* n_cells, int* n_edges,
                         int* n_boundary_edges);

/* --------------------------------------------------------------- simulation */

/**
 * Run one simulation at the config's N and report errors against the exact
 * case. Honors postprocess, strict_paper_mode, and all stepper keys.
 */
df_status df_simulate(const df_config* config, df_result** out);

/**
 * Fetch a scalar metric by name:
 *   "N", "errE", "errP", "errCurlE", "SerrE", "SerrP",
 *   "runtime_seconds", "steps", "total_linear_iters", "max_linear_iters",
 *   "max_newton_iters", "max_abs_P", "law_range_warning".
 * The superconvergence metrics require postprocess = true.
 */
df_status df_result_metric(const df_result* result, const char* name,
                           double* out);

void df_result_destroy(df_result* result);

/**
 * Largest admissible time step for the config's physical parameters and
 * nonlinear law (may be +inf).
 */
df_status df_dt_bound(const df_config* config, double* out);

/* ----------------------------------------------------------------- harness */

/**
 * Run the mesh sweep over N_list and return the convergence table as CSV
 * (header N,errE,orderE,... ; free with df_string_free).
 */
df_status df_converge_csv(const df_config* config, char** out_csv);

/** Run at the config's N and write field snapshot files into out_dir. */
df_status df_write_snapshots(const df_config* config, const char* out_dir);

/**
 * Run the built-in oracle/property check suite. The report (one line per
 * check) is returned through out_report (free with df_string_free) and the
 * number of failed checks through out_failures; either may be NULL.
 * Returns DF_OK even when checks fail; inspect out_failures.
 */
df_status df_run_checks(char** out_report, int* out_failures);

void df_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

/*
 * mimo_urllc - C interface to the single-cell massive MIMO downlink
 * URLLC Monte-Carlo simulator.
 *
 * All functions return mu_status_t error codes; handles are opaque and
 * must be released with the matching *_free call. Strings returned
 * through char** outputs are heap-allocated and released with
 * mu_string_free. On failure, mu_last_error() returns a thread-local
 * description of the most recent error.
 */

#ifndef MIMO_URLLC_H
#define MIMO_URLLC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mu_status_t {
  MU_OK = 0,
  MU_ERROR_INVALID_ARGUMENT = 1, /* bad handle, bad value, violated invariant */
  MU_ERROR_PARSE = 2,            /* malformed config JSON or list syntax */
  MU_ERROR_IO = 3,               /* file could not be read or written */
  MU_ERROR_SOLVER = 4,           /* power allocation solver failure */
  MU_ERROR_INTERNAL = 5
} mu_status_t;

/* Opaque handles. */
typedef struct mu_config_t mu_config_t;
typedef struct mu_results_t mu_results_t;

/* Library version string ("major.minor.patch"). */
const char* mu_version(void);

/* Static name for a status code, e.g. "MU_ERROR_PARSE". */
const char* mu_status_name(mu_status_t status);

/* Thread-local message describing the most recent failure in this thread.
 * Valid until the next failing call on the same thread. */
const char* mu_last_error(void);

/* Releases a string returned through a char** output parameter. */
void mu_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Configuration                                                       */
/* ------------------------------------------------------------------ */

/* Creates a configuration with the default scenario parameters
 * (100 BS antennas, 10 devices, 500 m square macro cell, 20 MHz). */
mu_status_t mu_config_create(mu_config_t** out);

/* Loads a configuration from a JSON file. Accepts either a plain config
 * object or a run manifest produced by mu_results_write; a manifest also
 * carries the sweep axes of the run it describes. */
mu_status_t mu_config_load_file(const char* path, mu_config_t** out);

/* Same as mu_config_load_file but parses an in-memory JSON document. */
mu_status_t mu_config_load_json(const char* json_text, mu_config_t** out);

void mu_config_free(mu_config_t* cfg);

/* Overrides applied after loading. */
mu_status_t mu_config_set_seed(mu_config_t* cfg, uint64_t seed);
mu_status_t mu_config_set_deployments(mu_config_t* cfg, uint32_t n_deployments);

/* Serializes the fully resolved configuration as JSON. */
mu_status_t mu_config_json(const mu_config_t* cfg, char** json_out);

/* ------------------------------------------------------------------ */
/* Simulation runs                                                     */
/* ------------------------------------------------------------------ */

/* Runs the single (K, f) cell described by the configuration for the
 * given precoders and power allocation strategies.
 *
 * precoders:  comma list from {"mr", "mmse"}; NULL means both.
 * strategies: comma list from {"equal", "maxmin", "maxprod"}; NULL means
 *             all three.
 * workers:    number of worker threads; 0 picks the hardware count.
 *             Results are independent of the worker count.
 */
mu_status_t mu_run_simulate(const mu_config_t* cfg,
                            const char* precoders,
                            const char* strategies,
                            int workers,
                            mu_results_t** out);

/* Runs a sweep over the Cartesian product of the given axes.
 *
 * k_values / f_values use range ("2..10") or comma ("2,4,6") syntax.
 * NULL axes fall back to axes embedded in the config (when it came from
 * a manifest), then to the config's own K / f and all precoders and
 * strategies. Deployments are paired across precoders and strategies
 * within each (K, f) cell.
 */
mu_status_t mu_run_sweep(const mu_config_t* cfg,
                         const char* k_values,
                         const char* f_values,
                         const char* precoders,
                         const char* strategies,
                         int workers,
                         mu_results_t** out);

void mu_results_free(mu_results_t* results);

/* Number of completed sweep cells. */
size_t mu_results_size(const mu_results_t* results);

/* Aggregated metrics of one cell as a JSON object. */
mu_status_t mu_results_cell_json(const mu_results_t* results, size_t index,
                                 char** json_out);

/* Number of cells that failed (their errors are reported by
 * mu_results_errors_json as a JSON array of strings). */
size_t mu_results_error_count(const mu_results_t* results);
mu_status_t mu_results_errors_json(const mu_results_t* results, char** json_out);

/* Writes sum_se.csv, outage.csv, sinr_pdf.csv and manifest.json into
 * out_dir (created if missing). Re-running the simulation from the
 * manifest reproduces the CSV files byte for byte. */
mu_status_t mu_results_write(const mu_results_t* results, const char* out_dir);

/* ------------------------------------------------------------------ */
/* Validation                                                          */
/* ------------------------------------------------------------------ */

/* Runs the built-in oracle suite (closed-form estimation/combining
 * moments, threshold arithmetic, brute-force solver baselines) against
 * the simulator. cfg may be NULL for the default scenario. quick != 0
 * shrinks the Monte-Carlo sample counts. The human-readable report is
 * returned in report_out and the number of failed checks in
 * failures_out (either may be NULL). */
mu_status_t mu_run_validation(const mu_config_t* cfg, int quick,
                              char** report_out, int* failures_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MIMO_URLLC_H */

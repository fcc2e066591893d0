#ifndef SPINPROBE_H
#define SPINPROBE_H

/* Generated by cbindgen from the spinprobe-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum SpStatus {
  SP_STATUS_OK = 0,
  /**
   * A null pointer or malformed argument.
   */
  SP_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A scenario document failed to parse or validate.
   */
  SP_STATUS_INVALID_SCENARIO = 2,
  /**
   * The physics model rejected the inputs (guards, domains, brackets).
   */
  SP_STATUS_PHYSICS = 3,
  /**
   * Filesystem failure.
   */
  SP_STATUS_IO = 4,
  /**
   * Index out of range.
   */
  SP_STATUS_OUT_OF_RANGE = 5,
} SpStatus;

/**
 * Opaque scenario handle.
 */
typedef struct SpScenario SpScenario;

/**
 * Opaque result-table handle.
 */
typedef struct SpTable SpTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *sp_version(void);

/**
 * Copy the most recent error message for this thread into `buf`
 * (truncated to `len - 1` bytes, always NUL-terminated). Returns the
 * full message length, or 0 when no error has occurred yet.
 *
 * # Safety
 * `buf` must point to `len` writable bytes, or be null (then only the
 * length is returned).
 */
uintptr_t sp_last_error_message(char *buf, uintptr_t len);

/**
 * Parse a scenario from a JSON document.
 *
 * # Safety
 * `json` must be a NUL-terminated UTF-8 string and `out` a valid pointer.
 */
enum SpStatus sp_scenario_from_json(const char *json, struct SpScenario **out);

/**
 * Load a scenario document from a file path.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SpStatus sp_scenario_load(const char *path, struct SpScenario **out);

/**
 * Release a scenario handle.
 *
 * # Safety
 * `scenario` must be a handle from this library, not yet freed; null is
 * a no-op.
 */
void sp_scenario_free(struct SpScenario *scenario);

/**
 * Run the QWP-angle sweep. See the crate documentation for the columns.
 *
 * # Safety
 * `scenario` must be a live handle; `out` a valid pointer.
 */
enum SpStatus sp_run_qwp_sweep(const struct SpScenario *scenario, struct SpTable **out);

/**
 * Run the power sweep.
 *
 * # Safety
 * As for [`sp_run_qwp_sweep`].
 */
enum SpStatus sp_run_power_sweep(const struct SpScenario *scenario, struct SpTable **out);

/**
 * Run the spatial effective-field map.
 *
 * # Safety
 * As for [`sp_run_qwp_sweep`].
 */
enum SpStatus sp_run_spatial_map(const struct SpScenario *scenario, struct SpTable **out);

/**
 * Evaluate a beam scenario at its single configured point.
 *
 * # Safety
 * As for [`sp_run_qwp_sweep`].
 */
enum SpStatus sp_run_single(const struct SpScenario *scenario, struct SpTable **out);

/**
 * Number of data rows in a table.
 *
 * # Safety
 * `table` must be a live handle.
 */
uintptr_t sp_table_rows(const struct SpTable *table);

/**
 * Number of columns in a table.
 *
 * # Safety
 * `table` must be a live handle.
 */
uintptr_t sp_table_cols(const struct SpTable *table);

/**
 * Fetch one value.
 *
 * # Safety
 * `table` must be a live handle and `out` a valid pointer.
 */
enum SpStatus sp_table_value(const struct SpTable *table,
                             uintptr_t row,
                             uintptr_t col,
                             double *out);

/**
 * Copy a column name into `buf` (truncated, NUL-terminated). Returns the
 * name length, or 0 if the column does not exist.
 *
 * # Safety
 * `table` must be a live handle; `buf` must point to `len` writable
 * bytes or be null.
 */
uintptr_t sp_table_column_name(const struct SpTable *table,
                               uintptr_t col,
                               char *buf,
                               uintptr_t len);

/**
 * Write a table to disk as CSV (byte-identical across runs).
 *
 * # Safety
 * `table` must be a live handle and `path` a NUL-terminated string.
 */
enum SpStatus sp_table_write_csv(const struct SpTable *table, const char *path);

/**
 * Release a table handle.
 *
 * # Safety
 * `table` must be a handle from this library, not yet freed; null is a
 * no-op.
 */
void sp_table_free(struct SpTable *table);

/**
 * Polarization state after the LP + QWP pair: writes the real and
 * imaginary parts of the (x, y, z) components.
 *
 * # Safety
 * `out_re` and `out_im` must each point to 3 writable doubles.
 */
enum SpStatus sp_qwp_jones(double theta_rad, double *out_re, double *out_im);

/**
 * Photonic spin density of a complex field (components in V/m) at
 * angular frequency `omega` (rad/s) in a medium of absolute permittivity
 * `epsilon` (F/m). Writes the (x, y, z) spin components (J s/m^3).
 *
 * # Safety
 * `e_re`, `e_im` must point to 3 readable doubles and `out_s` to 3
 * writable doubles.
 */
enum SpStatus sp_spin_density(const double *e_re,
                              const double *e_im,
                              double omega,
                              double epsilon,
                              double *out_s);

/**
 * Closed-form effective field (T) from a projected spin density
 * (J s/m^3) for the default NV parameters and a drive at
 * `wavelength_m`.
 *
 * # Safety
 * `out_tesla` must be a valid pointer.
 */
enum SpStatus sp_closed_form_beff(double s_proj, double wavelength_m, double *out_tesla);

/**
 * Effective-field extraction from a measured contrast difference.
 *
 * # Safety
 * `out_tesla` must be a valid pointer.
 */
enum SpStatus sp_extract_beff(double contrast,
                              double c_max,
                              uint32_t n_blocks,
                              double tau_prime_s,
                              double gamma,
                              double *out_tesla);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPINPROBE_H */

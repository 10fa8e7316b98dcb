/* sparsedoa: direction-of-arrival estimation on sparse linear arrays for
 * mixtures of circular and noncircular signals.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed through this API; every fallible call returns an sdoa_status
 * and leaves a description retrievable via sdoa_last_error_message() (stored
 * per thread). Strings returned through char** parameters are heap-allocated
 * and must be released with sdoa_string_free().
 */
#ifndef SPARSEDOA_H
#define SPARSEDOA_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(SDOA_BUILD_SHARED)
#define SDOA_API __declspec(dllexport)
#else
#define SDOA_API __declspec(dllimport)
#endif
#else
#define SDOA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdoa_status {
    SDOA_OK = 0,
    SDOA_ERROR_INVALID_ARGUMENT = 1,
    SDOA_ERROR_PARSE = 2,
    SDOA_ERROR_INSUFFICIENT_PEAKS = 3,
    SDOA_ERROR_IO = 4,
    SDOA_ERROR_INTERNAL = 5
} sdoa_status;

typedef enum sdoa_estimator {
    SDOA_ESTIMATOR_IMUSIC = 0,
    SDOA_ESTIMATOR_UL = 1
} sdoa_estimator;

/* Sparse array geometry handle. */
typedef struct sdoa_array sdoa_array;

/* Run configuration handle backing the CLI subcommands. */
typedef struct sdoa_run sdoa_run;

SDOA_API const char* sdoa_version(void);

/* Message for the most recent failing call on this thread ("" when none). */
SDOA_API const char* sdoa_last_error_message(void);

/* positions: strictly increasing nonnegative integers, count >= 2. */
SDOA_API sdoa_status sdoa_array_create(const int32_t* positions, int32_t count,
                                       double unit_spacing_over_wavelength,
                                       sdoa_array** out_array);

/* Two-level nested array: {1..n1} followed by {(n1+1)*m : m = 1..n2}. */
SDOA_API sdoa_status sdoa_array_create_nested(int32_t n1, int32_t n2,
                                              double unit_spacing_over_wavelength,
                                              sdoa_array** out_array);

SDOA_API void sdoa_array_free(sdoa_array* array);

SDOA_API int32_t sdoa_array_sensor_count(const sdoa_array* array);

/* Consecutive-segment parameters of the difference and sum coarrays. Any of
 * the output pointers may be NULL. */
SDOA_API sdoa_status sdoa_array_coarray(const sdoa_array* array, int32_t* out_l1,
                                        int32_t* out_l2, int32_t* out_delta_p);

/* Estimate num_sources arrival angles from raw snapshots.
 *
 * snapshots_interleaved holds num_sensors x num_snapshots complex samples in
 * snapshot-major order with interleaved re/im: the sample for sensor i at
 * snapshot t lives at indices 2*(t*num_sensors + i) and the one after it.
 * out_angles_deg must hold num_sources doubles; on success it receives the
 * estimates sorted ascending. */
SDOA_API sdoa_status sdoa_estimate_doa(const sdoa_array* array,
                                       const double* snapshots_interleaved,
                                       int32_t num_sensors, int32_t num_snapshots,
                                       int32_t num_sources, sdoa_estimator estimator,
                                       double grid_step_deg, double* out_angles_deg);

SDOA_API sdoa_status sdoa_run_create(sdoa_run** out_run);
SDOA_API void sdoa_run_free(sdoa_run* run);

/* key=value settings; the documented schema lives next to the library README.
 * Later writes override earlier ones, so apply presets first, then config
 * files, then individual overrides. */
SDOA_API sdoa_status sdoa_run_set(sdoa_run* run, const char* key, const char* value);
SDOA_API sdoa_status sdoa_run_load_config(sdoa_run* run, const char* path);
SDOA_API sdoa_status sdoa_run_apply_preset(sdoa_run* run, const char* name);

/* Subcommand runners. Each hands back a report through out_text (free with
 * sdoa_string_free); the spectrum/sweep runners also write the CSV file plus
 * a gnuplot script next to it. */
SDOA_API sdoa_status sdoa_run_coarray(sdoa_run* run, char** out_text);
SDOA_API sdoa_status sdoa_run_resolve(sdoa_run* run, char** out_text);
SDOA_API sdoa_status sdoa_run_spectrum(sdoa_run* run, const char* csv_path,
                                       char** out_text);
SDOA_API sdoa_status sdoa_run_sweep(sdoa_run* run, const char* csv_path,
                                    char** out_text);

SDOA_API void sdoa_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif

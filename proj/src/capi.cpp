#include "sparsedoa.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sdoa/harness.hpp"

struct sdoa_array {
    sdoa::SparseArrayGeometry geometry;
};

struct sdoa_run {
    sdoa::RunSettings settings;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
sdoa_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SDOA_OK;
    } catch (const sdoa::InsufficientPeaksError& err) {
        g_last_error = err.what();
        return SDOA_ERROR_INSUFFICIENT_PEAKS;
    } catch (const sdoa::ConfigError& err) {
        g_last_error = err.what();
        return SDOA_ERROR_PARSE;
    } catch (const sdoa::IoError& err) {
        g_last_error = err.what();
        return SDOA_ERROR_IO;
    } catch (const std::invalid_argument& err) {
        g_last_error = err.what();
        return SDOA_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& err) {
        g_last_error = err.what();
        return SDOA_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return SDOA_ERROR_INTERNAL;
    }
}

sdoa_status invalid(const char* message) {
    g_last_error = message;
    return SDOA_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) {
        std::memcpy(out, text.c_str(), text.size() + 1);
    }
    return out;
}

sdoa_status hand_out(const std::string& text, char** out_text) {
    *out_text = dup_string(text);
    if (*out_text == nullptr) {
        g_last_error = "out of memory";
        return SDOA_ERROR_INTERNAL;
    }
    return SDOA_OK;
}

}  // namespace

extern "C" {

const char* sdoa_version(void) { return "0.1.0"; }

const char* sdoa_last_error_message(void) { return g_last_error.c_str(); }

sdoa_status sdoa_array_create(const int32_t* positions, int32_t count,
                              double unit_spacing_over_wavelength,
                              sdoa_array** out_array) {
    if (positions == nullptr || out_array == nullptr) {
        return invalid("positions and out_array must not be NULL");
    }
    *out_array = nullptr;
    return guarded([&] {
        std::vector<int> pos(positions, positions + count);
        auto geometry = sdoa::make_geometry(std::move(pos), unit_spacing_over_wavelength);
        *out_array = new sdoa_array{std::move(geometry)};
    });
}

sdoa_status sdoa_array_create_nested(int32_t n1, int32_t n2,
                                     double unit_spacing_over_wavelength,
                                     sdoa_array** out_array) {
    if (out_array == nullptr) {
        return invalid("out_array must not be NULL");
    }
    *out_array = nullptr;
    return guarded([&] {
        *out_array =
            new sdoa_array{sdoa::nested_array(n1, n2, unit_spacing_over_wavelength)};
    });
}

void sdoa_array_free(sdoa_array* array) { delete array; }

int32_t sdoa_array_sensor_count(const sdoa_array* array) {
    return array == nullptr ? 0 : array->geometry.sensor_count();
}

sdoa_status sdoa_array_coarray(const sdoa_array* array, int32_t* out_l1,
                               int32_t* out_l2, int32_t* out_delta_p) {
    if (array == nullptr) {
        return invalid("array must not be NULL");
    }
    return guarded([&] {
        const sdoa::CoarrayProfile profile = sdoa::coarray_profile(array->geometry);
        if (out_l1 != nullptr) *out_l1 = profile.l1;
        if (out_l2 != nullptr) *out_l2 = profile.l2;
        if (out_delta_p != nullptr) *out_delta_p = profile.delta_p;
    });
}

sdoa_status sdoa_estimate_doa(const sdoa_array* array,
                              const double* snapshots_interleaved,
                              int32_t num_sensors, int32_t num_snapshots,
                              int32_t num_sources, sdoa_estimator estimator,
                              double grid_step_deg, double* out_angles_deg) {
    if (array == nullptr || snapshots_interleaved == nullptr ||
        out_angles_deg == nullptr) {
        return invalid("array, snapshots and out_angles_deg must not be NULL");
    }
    if (num_sensors != array->geometry.sensor_count()) {
        return invalid("num_sensors does not match the array");
    }
    if (num_snapshots < 1 || num_sources < 1) {
        return invalid("num_snapshots and num_sources must be >= 1");
    }
    return guarded([&] {
        sdoa::SnapshotMatrix x(num_sensors, num_snapshots);
        for (int32_t t = 0; t < num_snapshots; ++t) {
            for (int32_t i = 0; i < num_sensors; ++i) {
                const double* sample =
                    snapshots_interleaved + 2 * (static_cast<std::size_t>(t) * num_sensors + i);
                x(i, t) = std::complex<double>(sample[0], sample[1]);
            }
        }
        const sdoa::CoarrayProfile profile = sdoa::coarray_profile(array->geometry);
        const sdoa::ExtendedCovariance ru = sdoa::build_extended(sdoa::make_lag_vectors(
            sdoa::sample_covariance(x), sdoa::sample_pseudo_covariance(x), profile));
        const sdoa::NoiseSubspace un = sdoa::noise_subspace(ru, num_sources);
        const std::vector<double> grid = sdoa::angle_grid(grid_step_deg);
        const sdoa::Spectrum spec = estimator == SDOA_ESTIMATOR_UL
                                        ? sdoa::ul_spectrum(un, profile, grid)
                                        : sdoa::imusic_spectrum(un, profile, grid);
        const std::vector<double> peaks = sdoa::find_peaks(spec, num_sources);
        std::copy(peaks.begin(), peaks.end(), out_angles_deg);
    });
}

sdoa_status sdoa_run_create(sdoa_run** out_run) {
    if (out_run == nullptr) {
        return invalid("out_run must not be NULL");
    }
    return guarded([&] { *out_run = new sdoa_run(); });
}

void sdoa_run_free(sdoa_run* run) { delete run; }

sdoa_status sdoa_run_set(sdoa_run* run, const char* key, const char* value) {
    if (run == nullptr || key == nullptr || value == nullptr) {
        return invalid("run, key and value must not be NULL");
    }
    return guarded([&] { run->settings.set(key, value); });
}

sdoa_status sdoa_run_load_config(sdoa_run* run, const char* path) {
    if (run == nullptr || path == nullptr) {
        return invalid("run and path must not be NULL");
    }
    return guarded([&] { run->settings.load_file(path); });
}

sdoa_status sdoa_run_apply_preset(sdoa_run* run, const char* name) {
    if (run == nullptr || name == nullptr) {
        return invalid("run and name must not be NULL");
    }
    return guarded([&] { run->settings.apply_preset(name); });
}

sdoa_status sdoa_run_coarray(sdoa_run* run, char** out_text) {
    if (run == nullptr || out_text == nullptr) {
        return invalid("run and out_text must not be NULL");
    }
    std::string text;
    const sdoa_status status =
        guarded([&] { text = sdoa::run_coarray_report(run->settings); });
    return status == SDOA_OK ? hand_out(text, out_text) : status;
}

sdoa_status sdoa_run_resolve(sdoa_run* run, char** out_text) {
    if (run == nullptr || out_text == nullptr) {
        return invalid("run and out_text must not be NULL");
    }
    std::string text;
    const sdoa_status status =
        guarded([&] { text = sdoa::run_resolve_report(run->settings); });
    return status == SDOA_OK ? hand_out(text, out_text) : status;
}

sdoa_status sdoa_run_spectrum(sdoa_run* run, const char* csv_path, char** out_text) {
    if (run == nullptr || csv_path == nullptr || out_text == nullptr) {
        return invalid("run, csv_path and out_text must not be NULL");
    }
    std::string text;
    const sdoa_status status =
        guarded([&] { text = sdoa::run_spectrum_csv(run->settings, csv_path); });
    return status == SDOA_OK ? hand_out(text, out_text) : status;
}

sdoa_status sdoa_run_sweep(sdoa_run* run, const char* csv_path, char** out_text) {
    if (run == nullptr || csv_path == nullptr || out_text == nullptr) {
        return invalid("run, csv_path and out_text must not be NULL");
    }
    std::string text;
    const sdoa_status status =
        guarded([&] { text = sdoa::run_sweep_csv(run->settings, csv_path); });
    return status == SDOA_OK ? hand_out(text, out_text) : status;
}

void sdoa_string_free(char* text) { std::free(text); }

}  // extern "C"

// Command line front end; all work happens behind the C API of libsparsedoa.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sparsedoa.h"

namespace {

struct CommonOptions {
    std::optional<std::string> preset;
    std::optional<std::string> config;
    std::optional<std::string> positions;
    std::optional<double> snr_db;
    std::optional<int> snapshots;
    std::optional<std::uint64_t> seed;
    std::optional<double> grid_step;
    std::optional<std::string> estimator;
    std::optional<int> trials;
    bool population = false;
    std::optional<std::string> out;
};

void add_common_options(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--preset", opts.preset,
                   "apply a named preset (fourteen-sources, six-sources, snr-sweep, "
                   "snapshot-sweep)");
    cmd.add_option("--config", opts.config, "key=value config file");
    cmd.add_option("--positions", opts.positions,
                   "comma-separated integer sensor positions, e.g. 1,2,3,4,8,12");
    cmd.add_option("--snr", opts.snr_db, "per-source SNR in dB");
    cmd.add_option("--snapshots", opts.snapshots, "number of snapshots");
    cmd.add_option("--seed", opts.seed, "64-bit RNG seed");
    cmd.add_option("--grid-step", opts.grid_step, "search grid step in degrees");
    cmd.add_option("--estimator", opts.estimator, "imusic or ul");
    cmd.add_option("--trials", opts.trials, "Monte Carlo trials per sweep point");
    cmd.add_flag("--population", opts.population,
                 "use the exact population matrices instead of sampled snapshots");
    cmd.add_option("--out", opts.out, "output path (CSV for spectrum/sweep)");
}

int fail(sdoa_status status) {
    std::cerr << "error: " << sdoa_last_error_message() << "\n";
    return static_cast<int>(status);
}

int apply_options(sdoa_run* run, const CommonOptions& opts) {
    if (opts.preset) {
        if (auto s = sdoa_run_apply_preset(run, opts.preset->c_str())) return fail(s);
    }
    if (opts.config) {
        if (auto s = sdoa_run_load_config(run, opts.config->c_str())) return fail(s);
    }
    const auto set = [&](const char* key, const std::string& value) {
        return sdoa_run_set(run, key, value.c_str());
    };
    if (opts.positions) {
        if (auto s = set("positions", *opts.positions)) return fail(s);
    }
    if (opts.snr_db) {
        if (auto s = set("snr_db", std::to_string(*opts.snr_db))) return fail(s);
    }
    if (opts.snapshots) {
        if (auto s = set("snapshots", std::to_string(*opts.snapshots))) return fail(s);
    }
    if (opts.seed) {
        if (auto s = set("seed", std::to_string(*opts.seed))) return fail(s);
    }
    if (opts.grid_step) {
        if (auto s = set("grid_step", std::to_string(*opts.grid_step))) return fail(s);
    }
    if (opts.estimator) {
        if (auto s = set("estimator", *opts.estimator)) return fail(s);
    }
    if (opts.trials) {
        if (auto s = set("sweep.trials", std::to_string(*opts.trials))) return fail(s);
    }
    if (opts.population) {
        if (auto s = set("population", "true")) return fail(s);
    }
    return 0;
}

int emit_text(const char* text, const std::optional<std::string>& out_path) {
    std::cout << text;
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) {
            std::cerr << "error: cannot open '" << *out_path << "' for writing\n";
            return static_cast<int>(SDOA_ERROR_IO);
        }
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DOA estimation toolkit for sparse arrays with mixed "
                 "circular/noncircular signals"};
    app.require_subcommand(1);

    CommonOptions coarray_opts;
    CLI::App* coarray = app.add_subcommand(
        "coarray", "print the coarray parameters (L1, L2, delta_p) and lag tables");
    add_common_options(*coarray, coarray_opts);

    CommonOptions spectrum_opts;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "evaluate one pseudo-spectrum and write it as CSV");
    add_common_options(*spectrum, spectrum_opts);

    CommonOptions resolve_opts;
    CLI::App* resolve =
        app.add_subcommand("resolve", "estimate the source angles for one run");
    add_common_options(*resolve, resolve_opts);

    CommonOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "run a Monte Carlo RMSE sweep and write the report as CSV");
    add_common_options(*sweep, sweep_opts);

    CLI11_PARSE(app, argc, argv);

    sdoa_run* run = nullptr;
    if (auto s = sdoa_run_create(&run)) return fail(s);

    int code = 0;
    char* text = nullptr;
    if (coarray->parsed()) {
        code = apply_options(run, coarray_opts);
        if (code == 0) {
            if (auto s = sdoa_run_coarray(run, &text)) code = fail(s);
        }
        if (code == 0) code = emit_text(text, coarray_opts.out);
    } else if (spectrum->parsed()) {
        code = apply_options(run, spectrum_opts);
        if (code == 0) {
            const std::string csv = spectrum_opts.out.value_or("spectrum.csv");
            if (auto s = sdoa_run_spectrum(run, csv.c_str(), &text)) code = fail(s);
        }
        if (code == 0) std::cout << text;
    } else if (resolve->parsed()) {
        code = apply_options(run, resolve_opts);
        if (code == 0) {
            if (auto s = sdoa_run_resolve(run, &text)) code = fail(s);
        }
        if (code == 0) code = emit_text(text, resolve_opts.out);
    } else if (sweep->parsed()) {
        code = apply_options(run, sweep_opts);
        if (code == 0) {
            const std::string csv = sweep_opts.out.value_or("sweep.csv");
            if (auto s = sdoa_run_sweep(run, csv.c_str(), &text)) code = fail(s);
        }
        if (code == 0) std::cout << text;
    }

    sdoa_string_free(text);
    sdoa_run_free(run);
    return code;
}

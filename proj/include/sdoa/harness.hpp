#ifndef SDOA_HARNESS_HPP
#define SDOA_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sdoa/subspace.hpp"

namespace sdoa {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pairs the i-th smallest estimate with the i-th smallest truth angle and
// returns the signed errors (estimate - truth), in truth-sorted order.
std::vector<double> match_estimates(std::vector<double> truth,
                                    std::vector<double> estimates);

struct TrialResult {
    bool success = false;
    std::vector<double> estimates_deg;  // sorted ascending when success
    int peaks_found = 0;                // local maxima located when success is false
};

// Full pipeline for one realization: synthesize -> sample covariances -> lag
// vectors -> extended covariance -> noise subspace -> spectrum -> peaks.
// population = true replaces the sampled matrix with the analytic one (the
// snapshot count and seed are then unused). "insufficient peaks" is returned
// as a failed result, never thrown.
TrialResult run_trial(const Scenario& scenario, int n_snapshots, std::uint64_t seed,
                      double grid_step_deg, EstimatorKind estimator,
                      bool population = false, bool parabolic_refine = false);

enum class SweepKind { Snr, Snapshots };

struct SweepConfig {
    Scenario scenario;  // noise_power is overwritten from the SNR in play
    SweepKind kind = SweepKind::Snr;
    std::vector<double> values;  // nonempty, strictly increasing
    double fixed_snr_db = 10.0;  // used when kind == Snapshots
    int fixed_snapshots = 2000;  // used when kind == Snr
    int trials = 500;
    std::uint64_t master_seed = 1;
    double grid_step_deg = 0.1;
    EstimatorKind estimator = EstimatorKind::IMusic;
    bool population = false;

    void validate() const;
};

struct SweepPoint {
    double sweep_value = 0.0;
    double rmse_deg = 0.0;  // NaN when every trial at this point failed
    int trials = 0;
    int failures = 0;
    double mean_runtime_ms = 0.0;
};

struct SweepReport {
    std::vector<SweepPoint> points;
};

// Injective over (sweep_index, trial_index) pairs for a fixed master seed.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint32_t sweep_index,
                                std::uint32_t trial_index);

// sqrt(mean); sorts before summing so the result is permutation-invariant.
double rmse_from_squared_errors(std::vector<double> squared_errors);

// RMSE over successful trials only; failures are counted per sweep point.
SweepReport rmse_sweep(const SweepConfig& config);

// sigma^2 = reference_power * 10^(-snr_db/10)
double snr_to_noise_power(double snr_db, double reference_power);

// Flat key=value run settings: config files, presets and flag overrides all
// funnel through set(). Later writes win, which gives CLI flags priority by
// applying them last. Keys:
//
//   positions=1,2,3,4,8,12        unit_spacing_over_wavelength=0.5
//   snr_db=20 | noise_power=0.01  snapshots=2000    seed=1
//   grid_step=0.1                 estimator=imusic|ul
//   population=true|false         parabolic_refine=true|false
//   source.<i>.theta / .power / .kind (bpsk|pam|circular_gaussian)
//              / .nc_phase / .pam_levels      (i = 1, 2, ...)
//   sweep.kind=snr|snapshots      sweep.values=-10,-6,...
//   sweep.trials=500              sweep.snr_db=10   sweep.snapshots=2000
class RunSettings {
public:
    void set(const std::string& key, const std::string& value);
    void load_file(const std::string& path);
    void load_text(const std::string& text, const std::string& origin = "<config>");
    void apply_preset(const std::string& name);

    bool has(const std::string& key) const;

    SparseArrayGeometry geometry() const;
    Scenario scenario() const;  // geometry + sources + noise power
    int snapshots() const;
    std::uint64_t seed() const;
    double grid_step() const;
    EstimatorKind estimator() const;
    bool population() const;
    bool parabolic_refine() const;
    SweepConfig sweep_config() const;

private:
    std::string require(const std::string& key) const;
    std::map<std::string, std::string> values_;
};

// Subcommand runners behind the CLI. Each returns the human-readable report;
// the CSV runners also write the file plus a gnuplot script next to it.
std::string run_coarray_report(const RunSettings& settings);
std::string run_resolve_report(const RunSettings& settings);  // throws InsufficientPeaksError
std::string run_spectrum_csv(const RunSettings& settings, const std::string& csv_path);
std::string run_sweep_csv(const RunSettings& settings, const std::string& csv_path);

}  // namespace sdoa

#endif

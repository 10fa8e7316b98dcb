#include "sdoa/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <regex>
#include <sstream>

namespace sdoa {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    return parts;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("value for '" + key + "' is not a number: '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long x = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("value for '" + key + "' is not an integer: '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const std::uint64_t x = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("value for '" + key + "' is not an unsigned integer: '" +
                          value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("value for '" + key + "' is not a boolean: '" + value + "'");
}

SourceKind parse_kind(const std::string& key, const std::string& value) {
    if (value == "bpsk") return SourceKind::Bpsk;
    if (value == "pam") return SourceKind::Pam;
    if (value == "circular_gaussian") return SourceKind::CircularGaussian;
    throw ConfigError("value for '" + key +
                      "' must be bpsk, pam or circular_gaussian: '" + value + "'");
}

EstimatorKind parse_estimator(const std::string& key, const std::string& value) {
    if (value == "imusic") return EstimatorKind::IMusic;
    if (value == "ul") return EstimatorKind::UlBaseline;
    throw ConfigError("value for '" + key + "' must be imusic or ul: '" + value + "'");
}

bool known_key(const std::string& key) {
    static const std::regex source_key(
        R"(source\.[1-9][0-9]*\.(theta|power|kind|nc_phase|pam_levels))");
    static const char* plain_keys[] = {
        "positions",  "unit_spacing_over_wavelength",
        "noise_power", "snr_db",
        "snapshots",  "seed",
        "grid_step",  "estimator",
        "population", "parabolic_refine",
        "sweep.kind", "sweep.values",
        "sweep.trials", "sweep.snr_db",
        "sweep.snapshots",
    };
    for (const char* k : plain_keys) {
        if (key == k) return true;
    }
    return std::regex_match(key, source_key);
}

std::string format_double(double x, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
    return buf;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("failed while writing '" + path + "'");
}

std::string plot_script_path(const std::string& csv_path) {
    const auto dot = csv_path.rfind('.');
    const auto slash = csv_path.find_last_of("/\\");
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
        return csv_path.substr(0, dot) + ".gnuplot";
    }
    return csv_path + ".gnuplot";
}

ExtendedCovariance extended_from_settings(const Scenario& scenario,
                                          const CoarrayProfile& profile,
                                          bool population, int n_snapshots,
                                          std::uint64_t seed) {
    if (population) {
        return oracle_extended(scenario, profile);
    }
    const SnapshotMatrix x = synthesize(scenario, n_snapshots, seed);
    return build_extended(
        make_lag_vectors(sample_covariance(x), sample_pseudo_covariance(x), profile));
}

}  // namespace

std::vector<double> match_estimates(std::vector<double> truth,
                                    std::vector<double> estimates) {
    if (truth.size() != estimates.size()) {
        throw std::invalid_argument("truth and estimate lists differ in length");
    }
    std::sort(truth.begin(), truth.end());
    std::sort(estimates.begin(), estimates.end());
    std::vector<double> errors(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i) {
        errors[i] = estimates[i] - truth[i];
    }
    return errors;
}

TrialResult run_trial(const Scenario& scenario, int n_snapshots, std::uint64_t seed,
                      double grid_step_deg, EstimatorKind estimator, bool population,
                      bool parabolic_refine) {
    scenario.validate();
    const int k = scenario.source_count();
    if (k < 1) {
        throw std::invalid_argument("scenario has no sources to estimate");
    }
    const CoarrayProfile profile = coarray_profile(scenario.geometry);
    const ExtendedCovariance ru =
        extended_from_settings(scenario, profile, population, n_snapshots, seed);
    const NoiseSubspace un = noise_subspace(ru, k);
    const std::vector<double> grid = angle_grid(grid_step_deg);
    const Spectrum spec = estimator == EstimatorKind::IMusic
                              ? imusic_spectrum(un, profile, grid)
                              : ul_spectrum(un, profile, grid);
    TrialResult out;
    try {
        out.estimates_deg = find_peaks(spec, k, parabolic_refine);
        out.success = true;
        out.peaks_found = k;
    } catch (const InsufficientPeaksError& err) {
        out.success = false;
        out.peaks_found = err.found;
    }
    return out;
}

void SweepConfig::validate() const {
    scenario.validate();
    if (scenario.sources.empty()) {
        throw std::invalid_argument("sweep scenario has no sources");
    }
    if (values.empty()) {
        throw std::invalid_argument("sweep values must be nonempty");
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw std::invalid_argument("sweep values must be strictly increasing");
        }
    }
    if (kind == SweepKind::Snapshots) {
        for (double v : values) {
            if (!(v >= 1.0)) {
                throw std::invalid_argument("snapshot counts must be >= 1");
            }
        }
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (!(grid_step_deg > 0.0)) {
        throw std::invalid_argument("grid step must be positive");
    }
    if (fixed_snapshots < 1) {
        throw std::invalid_argument("fixed snapshot count must be >= 1");
    }
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint32_t sweep_index,
                                std::uint32_t trial_index) {
    const std::uint64_t packed =
        (static_cast<std::uint64_t>(sweep_index) << 32) | trial_index;
    return splitmix64(master_seed ^ splitmix64(packed));
}

double rmse_from_squared_errors(std::vector<double> squared_errors) {
    if (squared_errors.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    std::sort(squared_errors.begin(), squared_errors.end());
    double total = 0.0;
    for (double e : squared_errors) total += e;
    return std::sqrt(total / static_cast<double>(squared_errors.size()));
}

double snr_to_noise_power(double snr_db, double reference_power) {
    return reference_power * std::pow(10.0, -snr_db / 10.0);
}

SweepReport rmse_sweep(const SweepConfig& config) {
    config.validate();
    const double reference_power = config.scenario.sources.front().power;
    std::vector<double> truth;
    truth.reserve(config.scenario.sources.size());
    for (const auto& s : config.scenario.sources) truth.push_back(s.theta_deg);
    std::sort(truth.begin(), truth.end());

    SweepReport report;
    for (std::size_t si = 0; si < config.values.size(); ++si) {
        Scenario scenario = config.scenario;
        int n_snapshots = config.fixed_snapshots;
        if (config.kind == SweepKind::Snr) {
            scenario.noise_power = snr_to_noise_power(config.values[si], reference_power);
        } else {
            n_snapshots = static_cast<int>(std::llround(config.values[si]));
            scenario.noise_power =
                snr_to_noise_power(config.fixed_snr_db, reference_power);
        }

        std::vector<double> squared;
        int failures = 0;
        double total_ms = 0.0;
        for (int t = 0; t < config.trials; ++t) {
            const std::uint64_t seed = derive_trial_seed(
                config.master_seed, static_cast<std::uint32_t>(si),
                static_cast<std::uint32_t>(t));
            const auto start = std::chrono::steady_clock::now();
            const TrialResult result =
                run_trial(scenario, n_snapshots, seed, config.grid_step_deg,
                          config.estimator, config.population);
            total_ms += std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            if (!result.success) {
                ++failures;
                continue;
            }
            for (double err : match_estimates(truth, result.estimates_deg)) {
                squared.push_back(err * err);
            }
        }

        SweepPoint point;
        point.sweep_value = config.values[si];
        point.rmse_deg = rmse_from_squared_errors(std::move(squared));
        point.trials = config.trials;
        point.failures = failures;
        point.mean_runtime_ms = total_ms / config.trials;
        report.points.push_back(point);
    }
    return report;
}

void RunSettings::set(const std::string& key, const std::string& value) {
    const std::string k = trim(key);
    if (!known_key(k)) {
        throw ConfigError("unknown configuration key '" + k + "'");
    }
    values_[k] = trim(value);
}

void RunSettings::load_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected key=value, got '" + stripped + "'");
        }
        try {
            set(stripped.substr(0, eq), stripped.substr(eq + 1));
        } catch (const ConfigError& err) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": " +
                              err.what());
        }
    }
}

void RunSettings::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    load_text(buffer.str(), path);
}

void RunSettings::apply_preset(const std::string& name) {
    const auto six_sources = [this]() {
        set("positions", "1,2,3,4,8,12");
        set("source.1.theta", "-25");
        set("source.1.kind", "bpsk");
        set("source.2.theta", "-15");
        set("source.2.kind", "bpsk");
        set("source.3.theta", "-5");
        set("source.3.kind", "bpsk");
        set("source.4.theta", "5");
        set("source.4.kind", "pam");
        set("source.5.theta", "15");
        set("source.5.kind", "circular_gaussian");
        set("source.6.theta", "25");
        set("source.6.kind", "circular_gaussian");
    };
    if (name == "fourteen-sources") {
        set("positions", "1,2,3,4,8,12");
        for (int i = 0; i < 14; ++i) {
            const std::string prefix = "source." + std::to_string(i + 1) + ".";
            set(prefix + "theta", std::to_string(-44 + 7 * i));
            if (i < 10) {
                set(prefix + "kind", "bpsk");
            } else if (i == 10) {
                set(prefix + "kind", "pam");
            } else {
                set(prefix + "kind", "circular_gaussian");
            }
        }
        set("snapshots", "12000");
        set("snr_db", "20");
    } else if (name == "six-sources") {
        six_sources();
        set("snapshots", "2000");
        set("snr_db", "20");
    } else if (name == "snr-sweep") {
        six_sources();
        set("sweep.kind", "snr");
        set("sweep.values", "-10,-6,-2,2,6,10,14,18,22");
        set("sweep.snapshots", "2000");
        set("sweep.trials", "500");
    } else if (name == "snapshot-sweep") {
        six_sources();
        set("sweep.kind", "snapshots");
        set("sweep.values", "200,500,800,1100,1400,1700,2000,2300");
        set("sweep.snr_db", "10");
        set("sweep.trials", "500");
    } else {
        throw ConfigError("unknown preset '" + name +
                          "' (expected fourteen-sources, six-sources, snr-sweep or "
                          "snapshot-sweep)");
    }
}

bool RunSettings::has(const std::string& key) const {
    return values_.count(key) != 0;
}

std::string RunSettings::require(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw ConfigError("missing required setting '" + key + "'");
    }
    return it->second;
}

SparseArrayGeometry RunSettings::geometry() const {
    const std::string value = require("positions");
    std::vector<int> positions;
    for (const std::string& part : split(value, ',')) {
        if (part.empty()) {
            throw ConfigError("positions list has an empty entry: '" + value + "'");
        }
        positions.push_back(static_cast<int>(parse_int("positions", part)));
    }
    double spacing = 0.5;
    if (has("unit_spacing_over_wavelength")) {
        spacing = parse_double("unit_spacing_over_wavelength",
                               require("unit_spacing_over_wavelength"));
    }
    try {
        return make_geometry(std::move(positions), spacing);
    } catch (const std::invalid_argument& err) {
        throw ConfigError(std::string("invalid array settings: ") + err.what());
    }
}

Scenario RunSettings::scenario() const {
    Scenario sc;
    sc.geometry = geometry();

    int max_index = 0;
    for (const auto& [key, value] : values_) {
        if (key.rfind("source.", 0) == 0) {
            const auto dot = key.find('.', 7);
            max_index = std::max(
                max_index, static_cast<int>(parse_int(key, key.substr(7, dot - 7))));
        }
    }
    for (int index = 1; index <= max_index; ++index) {
        const std::string prefix = "source." + std::to_string(index) + ".";
        if (!has(prefix + "theta")) {
            throw ConfigError("source " + std::to_string(index) +
                              " is missing its required '" + prefix + "theta' entry");
        }
        SourceSpec src;
        src.theta_deg = parse_double(prefix + "theta", require(prefix + "theta"));
        if (has(prefix + "power")) {
            src.power = parse_double(prefix + "power", require(prefix + "power"));
        }
        if (has(prefix + "kind")) {
            src.kind = parse_kind(prefix + "kind", require(prefix + "kind"));
        }
        if (has(prefix + "nc_phase")) {
            src.nc_phase =
                parse_double(prefix + "nc_phase", require(prefix + "nc_phase"));
        } else {
            src.nc_phase = std::numeric_limits<double>::quiet_NaN();  // fill below
        }
        if (has(prefix + "pam_levels")) {
            src.pam_levels = static_cast<int>(
                parse_int(prefix + "pam_levels", require(prefix + "pam_levels")));
        }
        sc.sources.push_back(src);
    }

    // Unset noncircularity phases default to distinct values spread over [0, pi).
    const int n_noncircular = sc.noncircular_count();
    int nc_index = 0;
    for (auto& src : sc.sources) {
        const bool unset = std::isnan(src.nc_phase);
        if (!src.noncircular()) {
            if (unset) src.nc_phase = 0.0;
            continue;
        }
        if (unset) {
            src.nc_phase = std::numbers::pi * nc_index / n_noncircular;
        }
        ++nc_index;
    }

    if (has("snr_db")) {
        const double reference =
            sc.sources.empty() ? 1.0 : sc.sources.front().power;
        sc.noise_power = snr_to_noise_power(parse_double("snr_db", require("snr_db")),
                                            reference);
    } else if (has("noise_power")) {
        sc.noise_power = parse_double("noise_power", require("noise_power"));
    }

    try {
        sc.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError(std::string("invalid scenario settings: ") + err.what());
    }
    return sc;
}

int RunSettings::snapshots() const {
    const int n = static_cast<int>(parse_int("snapshots", require("snapshots")));
    if (n < 1) throw ConfigError("snapshots must be >= 1");
    return n;
}

std::uint64_t RunSettings::seed() const {
    return has("seed") ? parse_u64("seed", require("seed")) : 1u;
}

double RunSettings::grid_step() const {
    const double step =
        has("grid_step") ? parse_double("grid_step", require("grid_step")) : 0.1;
    if (!(step > 0.0)) throw ConfigError("grid_step must be positive");
    return step;
}

EstimatorKind RunSettings::estimator() const {
    return has("estimator") ? parse_estimator("estimator", require("estimator"))
                            : EstimatorKind::IMusic;
}

bool RunSettings::population() const {
    return has("population") && parse_bool("population", require("population"));
}

bool RunSettings::parabolic_refine() const {
    return has("parabolic_refine") &&
           parse_bool("parabolic_refine", require("parabolic_refine"));
}

SweepConfig RunSettings::sweep_config() const {
    SweepConfig config;
    config.scenario = scenario();
    const std::string kind = require("sweep.kind");
    if (kind == "snr") {
        config.kind = SweepKind::Snr;
    } else if (kind == "snapshots") {
        config.kind = SweepKind::Snapshots;
    } else {
        throw ConfigError("sweep.kind must be snr or snapshots: '" + kind + "'");
    }
    for (const std::string& part : split(require("sweep.values"), ',')) {
        config.values.push_back(parse_double("sweep.values", part));
    }
    if (has("sweep.trials")) {
        config.trials =
            static_cast<int>(parse_int("sweep.trials", require("sweep.trials")));
    }
    if (has("sweep.snr_db")) {
        config.fixed_snr_db = parse_double("sweep.snr_db", require("sweep.snr_db"));
    } else if (config.kind == SweepKind::Snapshots) {
        throw ConfigError("snapshot sweeps need sweep.snr_db");
    }
    if (has("sweep.snapshots")) {
        config.fixed_snapshots = static_cast<int>(
            parse_int("sweep.snapshots", require("sweep.snapshots")));
    } else if (config.kind == SweepKind::Snr) {
        throw ConfigError("snr sweeps need sweep.snapshots");
    }
    config.master_seed = seed();
    config.grid_step_deg = grid_step();
    config.estimator = estimator();
    config.population = population();
    try {
        config.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError(std::string("invalid sweep settings: ") + err.what());
    }
    return config;
}

std::string run_coarray_report(const RunSettings& settings) {
    const SparseArrayGeometry geom = settings.geometry();
    const CoarrayProfile profile = coarray_profile(geom);
    const auto& pos = geom.positions;

    std::ostringstream out;
    out << "sensors: " << geom.sensor_count() << "\n";
    out << "positions:";
    for (int p : pos) out << ' ' << p;
    out << "\n";
    out << "unit_spacing_over_wavelength: "
        << format_double(geom.unit_spacing_over_wavelength, 10) << "\n";
    out << "L1: " << profile.l1 << "\n";
    out << "L2: " << profile.l2 << "\n";
    out << "delta_p: " << profile.delta_p << "\n";

    const int half = (profile.l1 - 1) / 2;
    out << "difference lags (consecutive segment " << -half << ".." << half << "):\n";
    for (const auto& [lag, pairs] : profile.diff_pairs) {
        out << "  lag " << lag << " x" << pairs.size() << ":";
        for (const auto& [i, j] : pairs) {
            out << " (" << pos[i] << ',' << pos[j] << ')';
        }
        if (lag < -half || lag > half) out << "  [outside segment]";
        out << "\n";
    }
    out << "sum lags (consecutive segment " << profile.delta_p << ".."
        << profile.delta_p + profile.l2 - 1 << "):\n";
    for (const auto& [lag, pairs] : profile.sum_pairs) {
        out << "  lag " << lag << " x" << pairs.size() << ":";
        for (const auto& [u, v] : pairs) {
            out << " (" << pos[u] << ',' << pos[v] << ')';
        }
        if (lag < profile.delta_p || lag > profile.delta_p + profile.l2 - 1) {
            out << "  [outside segment]";
        }
        out << "\n";
    }
    return out.str();
}

std::string run_resolve_report(const RunSettings& settings) {
    const Scenario scenario = settings.scenario();
    const bool population = settings.population();
    const TrialResult result =
        run_trial(scenario, population ? 1 : settings.snapshots(), settings.seed(),
                  settings.grid_step(), settings.estimator(), population,
                  settings.parabolic_refine());
    if (!result.success) {
        throw InsufficientPeaksError(scenario.source_count(), result.peaks_found);
    }
    std::ostringstream out;
    out << "estimates: " << result.estimates_deg.size() << "\n";
    for (std::size_t i = 0; i < result.estimates_deg.size(); ++i) {
        out << "theta_" << i + 1 << " = " << format_double(result.estimates_deg[i], 10)
            << "\n";
    }
    return out.str();
}

std::string run_spectrum_csv(const RunSettings& settings, const std::string& csv_path) {
    const Scenario scenario = settings.scenario();
    const CoarrayProfile profile = coarray_profile(scenario.geometry);
    const bool population = settings.population();
    const ExtendedCovariance ru =
        extended_from_settings(scenario, profile, population,
                               population ? 1 : settings.snapshots(), settings.seed());
    const NoiseSubspace un = noise_subspace(ru, scenario.source_count());
    const std::vector<double> grid = angle_grid(settings.grid_step());
    const Spectrum spec = settings.estimator() == EstimatorKind::IMusic
                              ? imusic_spectrum(un, profile, grid)
                              : ul_spectrum(un, profile, grid);

    std::ostringstream csv;
    csv << "theta_deg,p_value\n";
    for (std::size_t i = 0; i < spec.grid_deg.size(); ++i) {
        csv << format_double(spec.grid_deg[i], 17) << ','
            << format_double(spec.values[i], 17) << "\n";
    }
    write_text_file(csv_path, csv.str());

    const std::string script_path = plot_script_path(csv_path);
    std::ostringstream script;
    script << "set datafile separator ','\n"
           << "set xlabel 'theta (deg)'\n"
           << "set ylabel 'P(theta)'\n"
           << "set logscale y\n"
           << "plot '" << csv_path << "' every ::1 using 1:2 with lines title "
           << "'pseudo-spectrum'\n";
    write_text_file(script_path, script.str());

    std::ostringstream out;
    out << "wrote " << spec.grid_deg.size() << " grid points to " << csv_path << "\n";
    out << "plot script: " << script_path << "\n";
    return out.str();
}

std::string run_sweep_csv(const RunSettings& settings, const std::string& csv_path) {
    const SweepConfig config = settings.sweep_config();
    const SweepReport report = rmse_sweep(config);

    std::ostringstream csv;
    csv << "sweep_value,rmse_deg,trials,failures,mean_runtime_ms\n";
    for (const SweepPoint& p : report.points) {
        csv << format_double(p.sweep_value, 17) << ',' << format_double(p.rmse_deg, 17)
            << ',' << p.trials << ',' << p.failures << ','
            << format_double(p.mean_runtime_ms, 17) << "\n";
    }
    write_text_file(csv_path, csv.str());

    const std::string script_path = plot_script_path(csv_path);
    const char* xlabel = config.kind == SweepKind::Snr ? "SNR (dB)" : "snapshots";
    std::ostringstream script;
    script << "set datafile separator ','\n"
           << "set xlabel '" << xlabel << "'\n"
           << "set ylabel 'RMSE (deg)'\n"
           << "set logscale y\n"
           << "plot '" << csv_path << "' every ::1 using 1:2 with linespoints title "
           << "'RMSE'\n";
    write_text_file(script_path, script.str());

    std::ostringstream out;
    out << "sweep_value rmse_deg trials failures mean_runtime_ms\n";
    for (const SweepPoint& p : report.points) {
        out << format_double(p.sweep_value, 10) << ' ' << format_double(p.rmse_deg, 10)
            << ' ' << p.trials << ' ' << p.failures << ' '
            << format_double(p.mean_runtime_ms, 6) << "\n";
    }
    out << "wrote " << report.points.size() << " sweep points to " << csv_path << "\n";
    out << "plot script: " << script_path << "\n";
    return out.str();
}

}  // namespace sdoa

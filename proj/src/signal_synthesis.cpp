#include "sdoa/signal_synthesis.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sdoa {

namespace {

// mt19937_64 with an explicit Box-Muller transform so the sample stream for a
// given seed does not depend on the standard library's distribution
// internals.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    int uniform_index(int n) {
        const int idx = static_cast<int>(uniform() * n);
        return idx < n ? idx : n - 1;
    }

    double sign() { return (engine_() >> 63) != 0 ? 1.0 : -1.0; }

    std::complex<double> circular_gaussian(double power) {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1)) * std::sqrt(power / 2.0);
        const double arg = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(arg), r * std::sin(arg)};
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

std::complex<double> SourceSpec::nc_coefficient() const {
    if (kind == SourceKind::CircularGaussian) return {0.0, 0.0};
    return std::polar(1.0, nc_phase);
}

int Scenario::noncircular_count() const {
    int n = 0;
    for (const auto& s : sources) n += s.noncircular() ? 1 : 0;
    return n;
}

void Scenario::validate() const {
    geometry.validate();
    if (!(noise_power >= 0.0) || !std::isfinite(noise_power)) {
        throw std::invalid_argument("noise power must be finite and nonnegative");
    }
    bool circular_seen = false;
    for (const auto& s : sources) {
        detail::require_theta_range(s.theta_deg);
        if (!(s.power > 0.0) || !std::isfinite(s.power)) {
            throw std::invalid_argument("source powers must be positive");
        }
        if (s.kind == SourceKind::Pam && (s.pam_levels < 2 || s.pam_levels % 2 != 0)) {
            throw std::invalid_argument("pam_levels must be an even integer >= 2");
        }
        if (s.noncircular() && circular_seen) {
            throw std::invalid_argument(
                "circular sources must come after all noncircular ones");
        }
        circular_seen = circular_seen || !s.noncircular();
    }
    for (std::size_t i = 0; i < sources.size(); ++i) {
        for (std::size_t j = i + 1; j < sources.size(); ++j) {
            if (sources[i].theta_deg == sources[j].theta_deg) {
                throw std::invalid_argument("source angles must be pairwise distinct");
            }
        }
    }
}

SnapshotMatrix synthesize(const Scenario& scenario, int n_snapshots, std::uint64_t seed) {
    scenario.validate();
    if (n_snapshots < 1) {
        throw std::invalid_argument("n_snapshots must be >= 1");
    }
    const int m = scenario.geometry.sensor_count();
    const int k = scenario.source_count();

    Eigen::MatrixXcd steering(m, k);
    std::vector<std::complex<double>> carrier(k);  // sqrt(eta) e^{j psi / 2}
    std::vector<double> pam_scale(k, 0.0);
    for (int s = 0; s < k; ++s) {
        const auto& src = scenario.sources[s];
        steering.col(s) = steering_vector(scenario.geometry, src.theta_deg);
        carrier[s] = std::sqrt(src.power) * std::polar(1.0, src.nc_phase / 2.0);
        if (src.kind == SourceKind::Pam) {
            // alphabet {+-1, +-3, ...} normalized to unit power
            const double q = src.pam_levels;
            pam_scale[s] = std::sqrt(3.0 / (q * q - 1.0));
        }
    }

    RandomStream rng(seed);
    const double noise = scenario.noise_power;
    SnapshotMatrix x(m, n_snapshots);
    Eigen::VectorXcd symbols(k);
    for (int t = 0; t < n_snapshots; ++t) {
        for (int s = 0; s < k; ++s) {
            const auto& src = scenario.sources[s];
            switch (src.kind) {
                case SourceKind::Bpsk:
                    symbols(s) = carrier[s] * rng.sign();
                    break;
                case SourceKind::Pam: {
                    const int idx = rng.uniform_index(src.pam_levels);
                    const double level = 2.0 * idx - (src.pam_levels - 1);
                    symbols(s) = carrier[s] * (level * pam_scale[s]);
                    break;
                }
                case SourceKind::CircularGaussian:
                    symbols(s) = rng.circular_gaussian(src.power);
                    break;
            }
        }
        x.col(t) = steering * symbols;
        if (noise > 0.0) {
            for (int i = 0; i < m; ++i) {
                x(i, t) += rng.circular_gaussian(noise);
            }
        }
    }
    return x;
}

PopulationCovariances population_covariances(const Scenario& scenario) {
    scenario.validate();
    const int m = scenario.geometry.sensor_count();
    PopulationCovariances out;
    out.rxx = scenario.noise_power * Eigen::MatrixXcd::Identity(m, m);
    out.pseudo = Eigen::MatrixXcd::Zero(m, m);
    for (const auto& src : scenario.sources) {
        const Eigen::VectorXcd a = steering_vector(scenario.geometry, src.theta_deg);
        out.rxx += src.power * (a * a.adjoint());
        const std::complex<double> nc = src.nc_coefficient();
        if (nc != std::complex<double>(0.0, 0.0)) {
            out.pseudo += nc * src.power * (a * a.transpose());
        }
    }
    return out;
}

}  // namespace sdoa

#ifndef SDOA_SIGNAL_SYNTHESIS_HPP
#define SDOA_SIGNAL_SYNTHESIS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "sdoa/array_geometry.hpp"

namespace sdoa {

enum class SourceKind { Bpsk, Pam, CircularGaussian };

struct SourceSpec {
    double theta_deg = 0.0;
    double power = 1.0;  // eta
    SourceKind kind = SourceKind::Bpsk;
    double nc_phase = 0.0;  // psi, radians; ignored for circular sources
    int pam_levels = 4;     // even, >= 2

    bool noncircular() const { return kind != SourceKind::CircularGaussian; }
    // rho * exp(j psi) as it appears in the pseudo covariance: BPSK/PAM carry
    // rho = 1, circular Gaussian carries rho = 0.
    std::complex<double> nc_coefficient() const;
};

struct Scenario {
    SparseArrayGeometry geometry;
    std::vector<SourceSpec> sources;  // noncircular sources first
    double noise_power = 0.0;         // sigma^2

    int source_count() const { return static_cast<int>(sources.size()); }
    int noncircular_count() const;
    void validate() const;  // throws std::invalid_argument
};

using SnapshotMatrix = Eigen::MatrixXcd;  // sensors x snapshots

// x(t) = A s(t) + n(t) with per-snapshot independent symbols and circular
// white Gaussian noise. Deterministic for a fixed seed.
SnapshotMatrix synthesize(const Scenario& scenario, int n_snapshots,
                          std::uint64_t seed);

struct PopulationCovariances {
    Eigen::MatrixXcd rxx;     // E{x x^H} = sum eta a a^H + sigma^2 I
    Eigen::MatrixXcd pseudo;  // E{x x^T} = sum rho e^{j psi} eta a a^T
};

PopulationCovariances population_covariances(const Scenario& scenario);

}  // namespace sdoa

#endif

#ifndef SDOA_SUBSPACE_HPP
#define SDOA_SUBSPACE_HPP

#include <stdexcept>
#include <string>

#include "sdoa/extended_covariance.hpp"

namespace sdoa {

struct NoiseSubspace {
    Eigen::MatrixXcd basis;  // (L2+1) x (L2+1-K), orthonormal columns
    int signal_dim = 0;      // K
};

struct Spectrum {
    std::vector<double> grid_deg;
    std::vector<double> values;  // finite, nonnegative
    double grid_step_deg = 0.0;
};

enum class EstimatorKind { IMusic, UlBaseline };

class InsufficientPeaksError : public std::runtime_error {
public:
    InsufficientPeaksError(int requested_peaks, int found_peaks);
    int requested;
    int found;
};

// Symmetric grid i * step, i = -n..n, with endpoints at +-(90 - step) so that
// +-90 (where sin is stationary) never enter the search.
std::vector<double> angle_grid(double step_deg);
std::vector<double> angle_grid(double start_deg, double stop_deg, double step_deg);

// Trailing L2+1-K eigenvectors of the Hermitian eigendecomposition, requires
// 1 <= K <= L2-1 so at least two noise columns remain.
NoiseSubspace noise_subspace(const ExtendedCovariance& ru, int num_sources);

// Two-column block steering [a1(theta), 0; 0, b2(theta)]: a1 is the top block
// of extended_steering, b2 its unit bottom block (conjugated sum-coarray
// steering over the first e sum lags). Column norms are sqrt(c) and sqrt(e).
Eigen::MatrixXcd block_steering(double theta_deg, const CoarrayProfile& profile);

// P(theta) = 1 / det(B^H Un Un^H B) with the 2x2 determinant evaluated in
// real closed form; det is clamped below at 1e-300 so values cap at 1e300.
Spectrum imusic_spectrum(const NoiseSubspace& un, const CoarrayProfile& profile,
                         const std::vector<double>& grid_deg);

// Min-eigenvalue surrogate baseline: value = 1 / lambda_min(B^H Un Un^H B).
Spectrum ul_spectrum(const NoiseSubspace& un, const CoarrayProfile& profile,
                     const std::vector<double>& grid_deg);

// The num_peaks largest strict local maxima, sorted ascending by angle; grid
// endpoints qualify with one-sided comparison. Throws InsufficientPeaksError
// when fewer exist. parabolic_refine fits a log-domain parabola through each
// peak and its neighbours for an off-grid vertex.
std::vector<double> find_peaks(const Spectrum& spectrum, int num_peaks,
                               bool parabolic_refine = false);

struct NcCoefficient {
    enum class Branch {
        Ratio,             // value holds the conjugate-branch coefficient
        CircularDominant,  // null vector ~ [0, 1]: only the conjugate branch is nulled
        RankZero,          // both eigenvalues ~ 0: both branches nulled (circular source)
    };
    Branch branch = Branch::Ratio;
    std::complex<double> value;
};

// Recovers the conjugate-branch coefficient from the null eigenvector of the
// 2x2 matrix at theta_hat. Requires lambda_min/lambda_max < 1e-3 there.
NcCoefficient estimate_nc_coefficient(const NoiseSubspace& un, double theta_deg,
                                      const CoarrayProfile& profile);

}  // namespace sdoa

#endif

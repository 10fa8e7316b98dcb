#include "sdoa/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sdoa {

namespace {

constexpr double kDetFloor = 1e-300;

struct Gram2 {
    double g11;
    double g22;
    std::complex<double> g12;

    double det() const { return g11 * g22 - std::norm(g12); }

    double lambda_min() const {
        const double mid = (g11 + g22) / 2.0;
        const double disc = std::sqrt(std::pow((g11 - g22) / 2.0, 2) + std::norm(g12));
        return std::max(mid - disc, 0.0);
    }

    double lambda_max() const {
        const double mid = (g11 + g22) / 2.0;
        const double disc = std::sqrt(std::pow((g11 - g22) / 2.0, 2) + std::norm(g12));
        return mid + disc;
    }
};

// Cached split of the noise basis plus the per-angle 2x2 Gram of the two
// block-steering columns projected onto it.
class GramEvaluator {
public:
    GramEvaluator(const NoiseSubspace& un, const CoarrayProfile& profile)
        : profile_(profile),
          c_(profile.top_block_size()),
          e_(profile.bottom_block_size()) {
        if (un.basis.rows() != profile.l2 + 1) {
            throw std::invalid_argument("noise subspace does not match the profile");
        }
        un_top_ = un.basis.topRows(c_);
        un_bottom_ = un.basis.bottomRows(e_);
        a1_.resize(c_);
        b2_.resize(e_);
    }

    Gram2 at(double theta_deg) {
        const double phase = lag_phase_rad(profile_.geometry, theta_deg);
        for (int m = 0; m < c_; ++m) {
            a1_(m) = std::polar(1.0, -phase * m);
        }
        for (int n = 0; n < e_; ++n) {
            b2_(n) = std::polar(1.0, phase * (profile_.delta_p + n));
        }
        const Eigen::VectorXcd w1 = un_top_.adjoint() * a1_;
        const Eigen::VectorXcd w2 = un_bottom_.adjoint() * b2_;
        return {w1.squaredNorm(), w2.squaredNorm(), w1.dot(w2)};
    }

private:
    const CoarrayProfile& profile_;
    int c_;
    int e_;
    Eigen::MatrixXcd un_top_;
    Eigen::MatrixXcd un_bottom_;
    Eigen::VectorXcd a1_;
    Eigen::VectorXcd b2_;
};

void require_grid(const std::vector<double>& grid_deg) {
    if (grid_deg.empty()) {
        throw std::invalid_argument("angle grid is empty");
    }
    for (double theta : grid_deg) detail::require_theta_range(theta);
}

template <typename ValueFn>
Spectrum evaluate_spectrum(const NoiseSubspace& un, const CoarrayProfile& profile,
                           const std::vector<double>& grid_deg, ValueFn value_of) {
    require_grid(grid_deg);
    GramEvaluator gram(un, profile);
    Spectrum spec;
    spec.grid_deg = grid_deg;
    spec.values.resize(grid_deg.size());
    for (std::size_t i = 0; i < grid_deg.size(); ++i) {
        spec.values[i] = value_of(gram.at(grid_deg[i]));
    }
    spec.grid_step_deg = grid_deg.size() >= 2 ? grid_deg[1] - grid_deg[0] : 0.0;
    return spec;
}

}  // namespace

InsufficientPeaksError::InsufficientPeaksError(int requested_peaks, int found_peaks)
    : std::runtime_error("insufficient peaks: requested " +
                         std::to_string(requested_peaks) + ", found " +
                         std::to_string(found_peaks)),
      requested(requested_peaks),
      found(found_peaks) {}

std::vector<double> angle_grid(double step_deg) {
    if (!(step_deg > 0.0) || step_deg >= 90.0) {
        throw std::invalid_argument("grid step must lie in (0, 90) degrees");
    }
    const int n = static_cast<int>(std::floor((90.0 - step_deg) / step_deg + 1e-9));
    std::vector<double> grid;
    grid.reserve(2 * n + 1);
    for (int i = -n; i <= n; ++i) grid.push_back(i * step_deg);
    return grid;
}

std::vector<double> angle_grid(double start_deg, double stop_deg, double step_deg) {
    if (!(step_deg > 0.0)) {
        throw std::invalid_argument("grid step must be positive");
    }
    if (!(start_deg <= stop_deg)) {
        throw std::invalid_argument("grid start must not exceed its stop");
    }
    detail::require_theta_range(start_deg);
    detail::require_theta_range(stop_deg);
    const int n = static_cast<int>(std::floor((stop_deg - start_deg) / step_deg + 1e-9));
    std::vector<double> grid;
    grid.reserve(n + 1);
    for (int i = 0; i <= n; ++i) grid.push_back(start_deg + i * step_deg);
    return grid;
}

NoiseSubspace noise_subspace(const ExtendedCovariance& ru, int num_sources) {
    const int n = static_cast<int>(ru.matrix.rows());
    if (n != ru.profile.l2 + 1 || ru.matrix.cols() != n) {
        throw std::invalid_argument("extended covariance has inconsistent dimensions");
    }
    if (num_sources < 1 || num_sources > ru.profile.l2 - 1) {
        throw std::invalid_argument("source count must satisfy 1 <= K <= L2 - 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(ru.matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    // eigenvalues come back ascending, so the noise subspace is the leading block
    NoiseSubspace out;
    out.basis = solver.eigenvectors().leftCols(n - num_sources);
    out.signal_dim = num_sources;
    return out;
}

Eigen::MatrixXcd block_steering(double theta_deg, const CoarrayProfile& profile) {
    detail::require_theta_range(theta_deg);
    const int c = profile.top_block_size();
    const int e = profile.bottom_block_size();
    const double phase = lag_phase_rad(profile.geometry, theta_deg);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(profile.l2 + 1, 2);
    for (int m = 0; m < c; ++m) {
        b(m, 0) = std::polar(1.0, -phase * m);
    }
    for (int n = 0; n < e; ++n) {
        b(c + n, 1) = std::polar(1.0, phase * (profile.delta_p + n));
    }
    return b;
}

Spectrum imusic_spectrum(const NoiseSubspace& un, const CoarrayProfile& profile,
                         const std::vector<double>& grid_deg) {
    return evaluate_spectrum(un, profile, grid_deg, [](const Gram2& g) {
        return 1.0 / std::max(g.det(), kDetFloor);
    });
}

Spectrum ul_spectrum(const NoiseSubspace& un, const CoarrayProfile& profile,
                     const std::vector<double>& grid_deg) {
    return evaluate_spectrum(un, profile, grid_deg, [](const Gram2& g) {
        return 1.0 / std::max(g.lambda_min(), kDetFloor);
    });
}

std::vector<double> find_peaks(const Spectrum& spectrum, int num_peaks,
                               bool parabolic_refine) {
    if (num_peaks < 1) {
        throw std::invalid_argument("num_peaks must be >= 1");
    }
    const auto& v = spectrum.values;
    const auto& grid = spectrum.grid_deg;
    if (v.size() != grid.size() || v.empty()) {
        throw std::invalid_argument("spectrum grid and values are inconsistent");
    }
    const int n = static_cast<int>(v.size());
    std::vector<int> maxima;
    for (int i = 0; i < n; ++i) {
        const bool left_ok = (i == 0) || v[i] > v[i - 1];
        const bool right_ok = (i == n - 1) || v[i] > v[i + 1];
        if (left_ok && right_ok) maxima.push_back(i);
    }
    if (static_cast<int>(maxima.size()) < num_peaks) {
        throw InsufficientPeaksError(num_peaks, static_cast<int>(maxima.size()));
    }
    std::sort(maxima.begin(), maxima.end(), [&](int a, int b) {
        if (v[a] != v[b]) return v[a] > v[b];
        return a < b;
    });
    maxima.resize(num_peaks);

    std::vector<double> peaks;
    peaks.reserve(num_peaks);
    for (int i : maxima) {
        double theta = grid[i];
        if (parabolic_refine && i > 0 && i < n - 1) {
            // log-domain parabola through the peak and its neighbours
            const double l0 = std::log(std::max(v[i - 1], kDetFloor));
            const double l1 = std::log(std::max(v[i], kDetFloor));
            const double l2 = std::log(std::max(v[i + 1], kDetFloor));
            const double denom = l0 - 2.0 * l1 + l2;
            if (denom < 0.0) {
                const double delta =
                    std::clamp(0.5 * (l0 - l2) / denom, -0.5, 0.5);
                theta += delta * spectrum.grid_step_deg;
            }
        }
        peaks.push_back(theta);
    }
    std::sort(peaks.begin(), peaks.end());
    return peaks;
}

NcCoefficient estimate_nc_coefficient(const NoiseSubspace& un, double theta_deg,
                                      const CoarrayProfile& profile) {
    GramEvaluator gram(un, profile);
    const Gram2 g = gram.at(theta_deg);
    const double lmax = g.lambda_max();
    const double lmin = g.lambda_min();
    // the two steering columns have squared norms c and e, which bounds lmax
    const double scale = profile.top_block_size() + profile.bottom_block_size();
    NcCoefficient out;
    if (lmax <= 1e-10 * scale) {
        out.branch = NcCoefficient::Branch::RankZero;
        return out;
    }
    if (lmin >= 1e-3 * lmax) {
        throw std::runtime_error("matrix at theta_hat is not rank deficient");
    }
    // null eigenvector of the 2x2 Gram: pick the better conditioned row
    Eigen::Vector2cd q;
    if (std::abs(g.g11 - lmin) >= std::abs(g.g22 - lmin)) {
        q << g.g12, std::complex<double>(lmin - g.g11, 0.0);
    } else {
        q << std::complex<double>(lmin - g.g22, 0.0), std::conj(g.g12);
    }
    q.normalize();
    if (std::abs(q(0)) <= 1e-8) {
        out.branch = NcCoefficient::Branch::CircularDominant;
        return out;
    }
    out.branch = NcCoefficient::Branch::Ratio;
    out.value = q(1) / q(0);
    return out;
}

}  // namespace sdoa

#include "sdoa/array_geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sdoa {

namespace detail {

void require_theta_range(double theta_deg) {
    if (!(theta_deg > -90.0 && theta_deg < 90.0)) {
        throw std::invalid_argument("theta must lie in the open interval (-90, 90) degrees");
    }
}

double sin_deg(double deg) {
    return std::sin(deg * std::numbers::pi / 180.0);
}

}  // namespace detail

void SparseArrayGeometry::validate() const {
    if (positions.size() < 2) {
        throw std::invalid_argument("array needs at least two sensors");
    }
    if (positions.front() < 0) {
        throw std::invalid_argument("sensor positions must be nonnegative");
    }
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (positions[i] <= positions[i - 1]) {
            throw std::invalid_argument("sensor positions must be strictly increasing");
        }
    }
    if (!(unit_spacing_over_wavelength > 0.0) ||
        !std::isfinite(unit_spacing_over_wavelength)) {
        throw std::invalid_argument("unit_spacing_over_wavelength must be positive");
    }
}

SparseArrayGeometry make_geometry(std::vector<int> positions,
                                  double unit_spacing_over_wavelength) {
    SparseArrayGeometry geom{std::move(positions), unit_spacing_over_wavelength};
    geom.validate();
    return geom;
}

SparseArrayGeometry nested_array(int n1, int n2, double unit_spacing_over_wavelength) {
    if (n1 < 1 || n2 < 1) {
        throw std::invalid_argument("nested array levels must both have at least one sensor");
    }
    std::vector<int> positions;
    positions.reserve(static_cast<std::size_t>(n1) + static_cast<std::size_t>(n2));
    for (int i = 1; i <= n1; ++i) positions.push_back(i);
    for (int m = 1; m <= n2; ++m) positions.push_back((n1 + 1) * m);
    return make_geometry(std::move(positions), unit_spacing_over_wavelength);
}

CoarrayProfile coarray_profile(const SparseArrayGeometry& geom) {
    geom.validate();
    CoarrayProfile profile;
    profile.geometry = geom;

    const auto& pos = geom.positions;
    const int m = geom.sensor_count();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            profile.diff_pairs[pos[i] - pos[j]].emplace_back(i, j);
        }
    }
    for (int u = 0; u < m; ++u) {
        for (int v = u; v < m; ++v) {
            profile.sum_pairs[pos[u] + pos[v]].emplace_back(u, v);
        }
    }

    // The difference set is symmetric about 0, so the maximal consecutive run
    // containing 0 is -h..h for the largest h with all of 1..h present.
    int h = 0;
    while (profile.diff_pairs.count(h + 1) != 0) ++h;
    const int raw_l1 = 2 * h + 1;

    // Longest consecutive sum run; ties go to the smallest starting lag.
    int best_len = 0;
    int best_start = 0;
    for (auto it = profile.sum_pairs.begin(); it != profile.sum_pairs.end();) {
        const int start = it->first;
        int end = start;
        auto run = std::next(it);
        while (run != profile.sum_pairs.end() && run->first == end + 1) {
            end = run->first;
            ++run;
        }
        if (end - start + 1 > best_len) {
            best_len = end - start + 1;
            best_start = start;
        }
        it = run;
    }
    profile.l2 = best_len;
    profile.delta_p = best_start;

    // Keep the block layout of the extended matrix well formed: the bottom
    // block needs at least one row (L1 <= 2 L2 - 1) and its Toeplitz entries
    // draw difference lags up to L2 - 1 in magnitude (L2 <= L1).
    profile.l1 = std::min(raw_l1, 2 * profile.l2 - 1);
    profile.l2 = std::min(profile.l2, profile.l1);

    if (profile.l1 < 1 || profile.l2 < 1) {
        throw std::runtime_error("degenerate coarray profile");
    }
    return profile;
}

Eigen::VectorXcd steering_vector(const SparseArrayGeometry& geom, double theta_deg) {
    geom.validate();
    detail::require_theta_range(theta_deg);
    const double phase = lag_phase_rad(geom, theta_deg);
    Eigen::VectorXcd a(geom.sensor_count());
    for (int i = 0; i < geom.sensor_count(); ++i) {
        a(i) = std::polar(1.0, -phase * geom.positions[i]);
    }
    return a;
}

double lag_phase_rad(const SparseArrayGeometry& geom, double theta_deg) {
    return 2.0 * std::numbers::pi * geom.unit_spacing_over_wavelength *
           detail::sin_deg(theta_deg);
}

}  // namespace sdoa

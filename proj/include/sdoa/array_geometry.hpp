#ifndef SDOA_ARRAY_GEOMETRY_HPP
#define SDOA_ARRAY_GEOMETRY_HPP

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sdoa {

// Linear sparse array on an integer grid: sensor m sits at positions[m] * d,
// with d = unit_spacing_over_wavelength * lambda.
struct SparseArrayGeometry {
    std::vector<int> positions;                 // strictly increasing, nonnegative
    double unit_spacing_over_wavelength = 0.5;  // d / lambda

    int sensor_count() const { return static_cast<int>(positions.size()); }
    void validate() const;  // throws std::invalid_argument
};

SparseArrayGeometry make_geometry(std::vector<int> positions,
                                  double unit_spacing_over_wavelength = 0.5);

// Two-level nested array: inner ULA {1..n1}, outer {(n1+1)*m : m = 1..n2}.
SparseArrayGeometry nested_array(int n1, int n2,
                                 double unit_spacing_over_wavelength = 0.5);

using PairList = std::vector<std::pair<int, int>>;  // 0-based sensor index pairs

// Difference/sum coarray tables plus the consecutive-segment parameters that
// size everything downstream.
//
// diff_pairs[l] holds every ordered pair (i, j) with p_i - p_j = l, so the
// table covers all M^2 pairs. sum_pairs[l] holds the unordered pairs (u, v),
// u <= v, with p_u + p_v = l.
struct CoarrayProfile {
    SparseArrayGeometry geometry;
    std::map<int, PairList> diff_pairs;
    std::map<int, PairList> sum_pairs;
    int l1 = 0;       // odd length of the zero-centred consecutive difference run
    int l2 = 0;       // length of the chosen consecutive sum run
    int delta_p = 0;  // first lag of the sum run

    int top_block_size() const { return (l1 + 1) / 2; }                  // c
    int bottom_block_size() const { return l2 + 1 - top_block_size(); }  // e
};

CoarrayProfile coarray_profile(const SparseArrayGeometry& geom);

// a(theta)[m] = exp(-j 2 pi p_m (d/lambda) sin(theta)), theta in (-90, 90) deg.
Eigen::VectorXcd steering_vector(const SparseArrayGeometry& geom, double theta_deg);

// Phase advance per unit coarray lag: 2 pi (d/lambda) sin(theta).
double lag_phase_rad(const SparseArrayGeometry& geom, double theta_deg);

namespace detail {
void require_theta_range(double theta_deg);  // open interval (-90, 90)
double sin_deg(double deg);
}  // namespace detail

}  // namespace sdoa

#endif

#ifndef SDOA_COVARIANCE_LAGS_HPP
#define SDOA_COVARIANCE_LAGS_HPP

#include "sdoa/array_geometry.hpp"
#include "sdoa/signal_synthesis.hpp"

namespace sdoa {

// Averaged consecutive coarray lag vectors.
//
// diff has odd length L1 and is indexed by difference lag -(L1-1)/2 .. (L1-1)/2;
// the entry at lag l averages R(i, j) over all pairs with p_i - p_j = l, so a
// single source of power eta contributes eta * exp(-j 2 pi l (d/lambda) sin
// theta). sum has length L2 and is indexed by sum lag delta_p .. delta_p+L2-1,
// averaging Rp(u, v) over pairs with p_u + p_v = lag.
struct LagVectors {
    Eigen::VectorXcd diff;
    Eigen::VectorXcd sum;
    CoarrayProfile profile;

    std::complex<double> diff_at(int lag) const;  // |lag| <= (L1-1)/2
    std::complex<double> sum_at(int lag) const;   // delta_p <= lag < delta_p+L2
};

// (1/N) sum_t x(t) x(t)^H, symmetrized so the result is exactly Hermitian.
Eigen::MatrixXcd sample_covariance(const SnapshotMatrix& x);

// (1/N) sum_t x(t) x(t)^T, symmetrized so the result is exactly symmetric.
Eigen::MatrixXcd sample_pseudo_covariance(const SnapshotMatrix& x);

Eigen::VectorXcd lag_average_difference(const Eigen::MatrixXcd& r,
                                        const CoarrayProfile& profile);

Eigen::VectorXcd lag_average_sum(const Eigen::MatrixXcd& rp,
                                 const CoarrayProfile& profile);

LagVectors make_lag_vectors(const Eigen::MatrixXcd& r, const Eigen::MatrixXcd& rp,
                            const CoarrayProfile& profile);

}  // namespace sdoa

#endif

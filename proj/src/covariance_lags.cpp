#include "sdoa/covariance_lags.hpp"

#include <stdexcept>

namespace sdoa {

namespace {

void require_square(const Eigen::MatrixXcd& r, const CoarrayProfile& profile) {
    const int m = profile.geometry.sensor_count();
    if (r.rows() != m || r.cols() != m) {
        throw std::invalid_argument("covariance dimensions do not match the array");
    }
}

}  // namespace

std::complex<double> LagVectors::diff_at(int lag) const {
    const int half = (static_cast<int>(diff.size()) - 1) / 2;
    if (lag < -half || lag > half) {
        throw std::out_of_range("difference lag outside the consecutive segment");
    }
    return diff(lag + half);
}

std::complex<double> LagVectors::sum_at(int lag) const {
    const int idx = lag - profile.delta_p;
    if (idx < 0 || idx >= sum.size()) {
        throw std::out_of_range("sum lag outside the consecutive segment");
    }
    return sum(idx);
}

Eigen::MatrixXcd sample_covariance(const SnapshotMatrix& x) {
    if (x.rows() < 1 || x.cols() < 1) {
        throw std::invalid_argument("snapshot matrix is empty");
    }
    Eigen::MatrixXcd r = (x * x.adjoint()) / static_cast<double>(x.cols());
    return (r + r.adjoint().eval()) / 2.0;
}

Eigen::MatrixXcd sample_pseudo_covariance(const SnapshotMatrix& x) {
    if (x.rows() < 1 || x.cols() < 1) {
        throw std::invalid_argument("snapshot matrix is empty");
    }
    Eigen::MatrixXcd rp = (x * x.transpose()) / static_cast<double>(x.cols());
    return (rp + rp.transpose().eval()) / 2.0;
}

Eigen::VectorXcd lag_average_difference(const Eigen::MatrixXcd& r,
                                        const CoarrayProfile& profile) {
    require_square(r, profile);
    const int half = (profile.l1 - 1) / 2;
    Eigen::VectorXcd out(profile.l1);
    for (int lag = -half; lag <= half; ++lag) {
        const PairList& pairs = profile.diff_pairs.at(lag);
        std::complex<double> acc = 0.0;
        for (const auto& [i, j] : pairs) acc += r(i, j);
        out(lag + half) = acc / static_cast<double>(pairs.size());
    }
    return out;
}

Eigen::VectorXcd lag_average_sum(const Eigen::MatrixXcd& rp,
                                 const CoarrayProfile& profile) {
    require_square(rp, profile);
    Eigen::VectorXcd out(profile.l2);
    for (int idx = 0; idx < profile.l2; ++idx) {
        const PairList& pairs = profile.sum_pairs.at(profile.delta_p + idx);
        std::complex<double> acc = 0.0;
        for (const auto& [u, v] : pairs) acc += rp(u, v);
        out(idx) = acc / static_cast<double>(pairs.size());
    }
    return out;
}

LagVectors make_lag_vectors(const Eigen::MatrixXcd& r, const Eigen::MatrixXcd& rp,
                            const CoarrayProfile& profile) {
    LagVectors lags;
    lags.diff = lag_average_difference(r, profile);
    lags.sum = lag_average_sum(rp, profile);
    lags.profile = profile;
    return lags;
}

}  // namespace sdoa

#include "sdoa/extended_covariance.hpp"

#include <stdexcept>

namespace sdoa {

namespace {

ExtendedCovariance assemble(const LagVectors& lags) {
    const CoarrayProfile& profile = lags.profile;
    const int c = profile.top_block_size();
    const int e = profile.bottom_block_size();
    if (e < 1 || e > c) {
        // Only reachable when the profile's segment truncation was bypassed.
        throw std::invalid_argument("extended covariance block shapes are invalid");
    }
    if (lags.diff.size() != profile.l1 || lags.sum.size() != profile.l2) {
        throw std::invalid_argument("lag vector lengths do not match the profile");
    }

    const int n = profile.l2 + 1;
    Eigen::MatrixXcd ru(n, n);
    for (int a = 0; a < c; ++a) {
        for (int b = 0; b < c; ++b) {
            ru(a, b) = lags.diff_at(a - b);
        }
    }
    for (int a = 0; a < c; ++a) {
        for (int b = 0; b < e; ++b) {
            const std::complex<double> s = lags.sum_at(profile.delta_p + a + b);
            ru(a, c + b) = s;
            ru(c + b, a) = std::conj(s);
        }
    }
    for (int a = 0; a < e; ++a) {
        for (int b = 0; b < e; ++b) {
            ru(c + a, c + b) = lags.diff_at(b - a);
        }
    }
    ru = ((ru + ru.adjoint().eval()) / 2.0).eval();

    ExtendedCovariance out;
    out.matrix = std::move(ru);
    out.top_size = c;
    out.bottom_size = e;
    out.profile = profile;
    return out;
}

}  // namespace

ExtendedCovariance build_extended(const LagVectors& lags) {
    return assemble(lags);
}

Eigen::VectorXcd extended_steering(double theta_deg, std::complex<double> nc_coeff,
                                   const CoarrayProfile& profile) {
    detail::require_theta_range(theta_deg);
    const int c = profile.top_block_size();
    const int e = profile.bottom_block_size();
    const double phase = lag_phase_rad(profile.geometry, theta_deg);
    Eigen::VectorXcd v(profile.l2 + 1);
    for (int m = 0; m < c; ++m) {
        v(m) = std::polar(1.0, -phase * m);
    }
    for (int n = 0; n < e; ++n) {
        v(c + n) = nc_coeff * std::polar(1.0, phase * (profile.delta_p + n));
    }
    return v;
}

ExtendedCovariance oracle_extended(const Scenario& scenario,
                                   const CoarrayProfile& profile) {
    scenario.validate();
    if (scenario.geometry.positions != profile.geometry.positions) {
        throw std::invalid_argument("scenario and profile use different arrays");
    }
    const int half = (profile.l1 - 1) / 2;
    LagVectors lags;
    lags.profile = profile;
    lags.diff = Eigen::VectorXcd::Zero(profile.l1);
    lags.sum = Eigen::VectorXcd::Zero(profile.l2);
    for (const auto& src : scenario.sources) {
        const double phase = lag_phase_rad(scenario.geometry, src.theta_deg);
        const std::complex<double> nc = src.nc_coefficient();
        for (int lag = -half; lag <= half; ++lag) {
            lags.diff(lag + half) += src.power * std::polar(1.0, -phase * lag);
        }
        if (nc != std::complex<double>(0.0, 0.0)) {
            for (int idx = 0; idx < profile.l2; ++idx) {
                const int lag = profile.delta_p + idx;
                lags.sum(idx) += nc * src.power * std::polar(1.0, -phase * lag);
            }
        }
    }
    lags.diff(half) += scenario.noise_power;
    return assemble(lags);
}

}  // namespace sdoa

#include <doctest.h>

#include <complex>
#include <random>

#include "sdoa/extended_covariance.hpp"

using namespace sdoa;

namespace {

LagVectors zero_lags(const CoarrayProfile& profile) {
    LagVectors lags;
    lags.diff = Eigen::VectorXcd::Zero(profile.l1);
    lags.sum = Eigen::VectorXcd::Zero(profile.l2);
    lags.profile = profile;
    return lags;
}

// conjugate-branch coefficient matching a source's pseudo covariance entry
std::complex<double> branch_coeff(const SourceSpec& src) {
    return std::conj(src.nc_coefficient());
}

Eigen::MatrixXcd factorized(const Scenario& sc, const CoarrayProfile& profile) {
    const int n = profile.l2 + 1;
    Eigen::MatrixXcd expected =
        sc.noise_power * Eigen::MatrixXcd::Identity(n, n);
    for (const auto& src : sc.sources) {
        const Eigen::VectorXcd bar =
            extended_steering(src.theta_deg, branch_coeff(src), profile);
        expected += src.power * (bar * bar.adjoint());
    }
    return expected;
}

int rank_above(const Eigen::MatrixXcd& m, double threshold) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
    int count = 0;
    for (int i = 0; i < eig.eigenvalues().size(); ++i) {
        if (eig.eigenvalues()(i) > threshold) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("zero lag vectors build the zero matrix") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));
    const ExtendedCovariance ru = build_extended(zero_lags(profile));
    CHECK(ru.matrix.rows() == 16);
    CHECK(ru.matrix.cols() == 16);
    CHECK(ru.matrix.norm() == 0.0);
}

TEST_CASE("block sizes for the six-sensor nested array") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));
    const ExtendedCovariance ru = build_extended(zero_lags(profile));
    CHECK(ru.top_size == 12);     // R1 is 12x12, R2 is 12x4
    CHECK(ru.bottom_size == 4);   // R3 is 4x4
    CHECK(ru.matrix.rows() == profile.l2 + 1);
}

TEST_CASE("malformed block shapes are rejected") {
    CoarrayProfile doctored = coarray_profile(nested_array(3, 3));
    LagVectors lags = zero_lags(doctored);
    lags.profile.l1 = doctored.l1 + 10;  // pretend the truncation was skipped
    lags.diff = Eigen::VectorXcd::Zero(lags.profile.l1);
    CHECK_THROWS_AS(build_extended(lags), std::invalid_argument);

    LagVectors bad_len = zero_lags(doctored);
    bad_len.diff = Eigen::VectorXcd::Zero(doctored.l1 - 2);
    CHECK_THROWS_AS(build_extended(bad_len), std::invalid_argument);
}

TEST_CASE("extended steering structure") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));
    const std::complex<double> nc(0.6, -0.8);

    SUBCASE("broadside stacks ones over the coefficient") {
        const Eigen::VectorXcd bar = extended_steering(0.0, nc, profile);
        for (int m = 0; m < profile.top_block_size(); ++m) {
            CHECK(std::abs(bar(m) - 1.0) < 1e-15);
        }
        for (int n = 0; n < profile.bottom_block_size(); ++n) {
            CHECK(std::abs(bar(profile.top_block_size() + n) - nc) < 1e-15);
        }
    }

    SUBCASE("zero coefficient blanks the bottom block") {
        const Eigen::VectorXcd bar = extended_steering(24.0, 0.0, profile);
        CHECK(bar.tail(profile.bottom_block_size()).norm() == 0.0);
        CHECK(std::abs(bar.head(profile.top_block_size()).norm() -
                       std::sqrt(12.0)) < 1e-12);
    }
}

TEST_CASE("rank-1 factorization for a single strictly noncircular source") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));
    Scenario sc;
    sc.geometry = profile.geometry;
    sc.sources.push_back({20.0, 1.3, SourceKind::Bpsk, 0.8, 4});

    const auto pop = population_covariances(sc);
    const ExtendedCovariance ru = build_extended(make_lag_vectors(
        pop.rxx, pop.pseudo, profile));
    const Eigen::MatrixXcd expected = factorized(sc, profile);
    CHECK((ru.matrix - expected).norm() / ru.matrix.norm() < 1e-10);
}

TEST_CASE("factorization holds for strictly noncircular mixtures with noise") {
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> angle(-80.0, 80.0);
    std::uniform_real_distribution<double> power(0.5, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 6.28);

    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));
    for (int trial = 0; trial < 20; ++trial) {
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.noise_power = trial % 3 == 0 ? 0.0 : power(rng);
        const int k = 1 + static_cast<int>(rng() % 8);
        while (sc.source_count() < k) {
            SourceSpec src;
            src.theta_deg = angle(rng);
            bool clash = false;
            for (const auto& other : sc.sources) {
                clash = clash || other.theta_deg == src.theta_deg;
            }
            if (clash) continue;
            src.power = power(rng);
            src.kind = rng() % 2 == 0 ? SourceKind::Bpsk : SourceKind::Pam;
            src.nc_phase = phase(rng);
            sc.sources.push_back(src);
        }

        const ExtendedCovariance ru = oracle_extended(sc, profile);
        const Eigen::MatrixXcd expected = factorized(sc, profile);
        CHECK((ru.matrix - expected).norm() / ru.matrix.norm() < 1e-10);
    }
}

TEST_CASE("analytic oracle agrees with the sampled-path assembly") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));

    SUBCASE("noise-only scenario gives sigma^2 I") {
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.noise_power = 0.45;
        const ExtendedCovariance ru = oracle_extended(sc, profile);
        CHECK((ru.matrix - 0.45 * Eigen::MatrixXcd::Identity(16, 16)).norm() < 1e-15);
    }

    SUBCASE("mixture equals the population-covariance pipeline") {
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.sources.push_back({-18.0, 1.1, SourceKind::Bpsk, 0.2, 4});
        sc.sources.push_back({4.0, 0.9, SourceKind::Pam, 1.4, 4});
        sc.sources.push_back({36.0, 1.5, SourceKind::CircularGaussian, 0.0, 4});
        sc.noise_power = 0.25;

        const auto pop = population_covariances(sc);
        const ExtendedCovariance sampled_path =
            build_extended(make_lag_vectors(pop.rxx, pop.pseudo, profile));
        const ExtendedCovariance analytic = oracle_extended(sc, profile);
        CHECK((analytic.matrix - sampled_path.matrix).norm() /
                  analytic.matrix.norm() <
              1e-13);
    }

    SUBCASE("all-circular scenario blanks the Hankel block") {
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.sources.push_back({-9.0, 1.0, SourceKind::CircularGaussian, 0.0, 4});
        sc.sources.push_back({27.0, 2.0, SourceKind::CircularGaussian, 0.0, 4});
        const ExtendedCovariance ru = oracle_extended(sc, profile);
        CHECK(ru.matrix.topRightCorner(ru.top_size, ru.bottom_size).norm() == 0.0);
    }
}

TEST_CASE("extended covariance is Hermitian and has the model rank") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));

    SUBCASE("hermitian by construction") {
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.sources.push_back({-25.0, 1.0, SourceKind::Bpsk, 0.3, 4});
        sc.sources.push_back({10.0, 1.0, SourceKind::CircularGaussian, 0.0, 4});
        sc.noise_power = 0.4;
        const SnapshotMatrix x = synthesize(sc, 300, 3);
        const ExtendedCovariance ru = build_extended(make_lag_vectors(
            sample_covariance(x), sample_pseudo_covariance(x), profile));
        CHECK((ru.matrix - ru.matrix.adjoint()).norm() == 0.0);
    }

    SUBCASE("eigenvalues sit on sigma^2 with exactly K above it") {
        std::mt19937 rng(9);
        std::uniform_real_distribution<double> angle(-70.0, 70.0);
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.noise_power = 0.6;
        for (int k = 0; k < 5; ++k) {
            sc.sources.push_back(
                {angle(rng), 1.0, SourceKind::Bpsk, 0.4 * k, 4});
        }
        const ExtendedCovariance ru = oracle_extended(sc, profile);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(ru.matrix);
        CHECK(eig.eigenvalues().minCoeff() > 0.6 - 1e-10);
        int above = 0;
        for (int i = 0; i < eig.eigenvalues().size(); ++i) {
            if (eig.eigenvalues()(i) > 0.6 + 1e-8) ++above;
        }
        CHECK(above == 5);
    }

    SUBCASE("single-source ranks: noncircular 1, circular 2") {
        Scenario nc;
        nc.geometry = profile.geometry;
        nc.sources.push_back({13.0, 1.0, SourceKind::Bpsk, 0.9, 4});
        const ExtendedCovariance ru_nc = oracle_extended(nc, profile);
        CHECK(rank_above(ru_nc.matrix, 1e-10 * ru_nc.matrix.trace().real()) == 1);

        Scenario circ;
        circ.geometry = profile.geometry;
        circ.sources.push_back({13.0, 1.0, SourceKind::CircularGaussian, 0.0, 4});
        const ExtendedCovariance ru_c = oracle_extended(circ, profile);
        CHECK(rank_above(ru_c.matrix, 1e-10 * ru_c.matrix.trace().real()) == 2);
    }
}

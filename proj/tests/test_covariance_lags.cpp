#include <doctest.h>

#include <complex>
#include <map>
#include <random>

#include "sdoa/covariance_lags.hpp"

using namespace sdoa;

namespace {

Eigen::MatrixXcd random_complex(int rows, int cols, std::mt19937& rng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m(i, j) = std::complex<double>(normal(rng), normal(rng));
        }
    }
    return m;
}

// Reference lag averaging that rescans every sensor pair for every lag.
Eigen::VectorXcd naive_diff(const Eigen::MatrixXcd& r, const CoarrayProfile& p) {
    const int half = (p.l1 - 1) / 2;
    Eigen::VectorXcd out(p.l1);
    for (int lag = -half; lag <= half; ++lag) {
        std::complex<double> acc = 0.0;
        int count = 0;
        for (int i = 0; i < p.geometry.sensor_count(); ++i) {
            for (int j = 0; j < p.geometry.sensor_count(); ++j) {
                if (p.geometry.positions[i] - p.geometry.positions[j] == lag) {
                    acc += r(i, j);
                    ++count;
                }
            }
        }
        out(lag + half) = acc / static_cast<double>(count);
    }
    return out;
}

Eigen::VectorXcd naive_sum(const Eigen::MatrixXcd& rp, const CoarrayProfile& p) {
    Eigen::VectorXcd out(p.l2);
    for (int idx = 0; idx < p.l2; ++idx) {
        const int lag = p.delta_p + idx;
        std::complex<double> acc = 0.0;
        int count = 0;
        for (int u = 0; u < p.geometry.sensor_count(); ++u) {
            for (int v = u; v < p.geometry.sensor_count(); ++v) {
                if (p.geometry.positions[u] + p.geometry.positions[v] == lag) {
                    acc += rp(u, v);
                    ++count;
                }
            }
        }
        out(idx) = acc / static_cast<double>(count);
    }
    return out;
}

}  // namespace

TEST_CASE("sample covariance definitions") {
    SnapshotMatrix x(2, 1);
    x << std::complex<double>(1.0, 2.0), std::complex<double>(0.5, -1.0);
    const auto r = sample_covariance(x);
    CHECK((r - x.col(0) * x.col(0).adjoint()).norm() < 1e-15);
    const auto rp = sample_pseudo_covariance(x);
    CHECK((rp - x.col(0) * x.col(0).transpose()).norm() < 1e-15);

    SnapshotMatrix empty(0, 0);
    CHECK_THROWS_AS(sample_covariance(empty), std::invalid_argument);
    CHECK_THROWS_AS(sample_pseudo_covariance(empty), std::invalid_argument);
}

TEST_CASE("real snapshots give a real symmetric sample covariance") {
    std::mt19937 rng(5);
    SnapshotMatrix x = random_complex(3, 40, rng).real().cast<std::complex<double>>();
    const auto r = sample_covariance(x);
    CHECK(r.imag().norm() < 1e-14);
    CHECK((r - r.transpose()).norm() < 1e-14);
}

TEST_CASE("sample covariance converges to the population covariance") {
    Scenario sc;
    sc.geometry = make_geometry({0, 1, 3});
    sc.sources.push_back({-12.0, 1.0, SourceKind::Bpsk, 0.5, 4});
    sc.sources.push_back({25.0, 1.0, SourceKind::CircularGaussian, 0.0, 4});
    sc.noise_power = 0.3;

    const SnapshotMatrix x = synthesize(sc, 1000000, 17);
    const auto pop = population_covariances(sc);
    const auto r = sample_covariance(x);
    CHECK((r - pop.rxx).cwiseAbs().maxCoeff() < 5e-3);
    const auto rp = sample_pseudo_covariance(x);
    CHECK((rp - pop.pseudo).cwiseAbs().maxCoeff() < 5e-3);
}

TEST_CASE("difference lag averaging") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));
    const int m = profile.geometry.sensor_count();
    const int half = (profile.l1 - 1) / 2;

    SUBCASE("identity matrix maps to a unit pulse at lag zero") {
        const Eigen::VectorXcd rd =
            lag_average_difference(Eigen::MatrixXcd::Identity(m, m), profile);
        for (int lag = -half; lag <= half; ++lag) {
            const double expected = lag == 0 ? 1.0 : 0.0;
            CHECK(std::abs(rd(lag + half) - expected) < 1e-15);
        }
    }

    SUBCASE("single source population covariance matches the closed form") {
        const double theta = 17.0;
        const double eta = 1.7;
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.sources.push_back({theta, eta, SourceKind::Bpsk, 0.2, 4});

        const auto pop = population_covariances(sc);
        const Eigen::VectorXcd rd = lag_average_difference(pop.rxx, profile);
        const double phase = lag_phase_rad(profile.geometry, theta);
        for (int lag = -half; lag <= half; ++lag) {
            const std::complex<double> expected = eta * std::polar(1.0, -phase * lag);
            CHECK(std::abs(rd(lag + half) - expected) < 1e-12);
        }

        // noise adds sigma^2 to the zero-lag bin only
        sc.noise_power = 0.9;
        const Eigen::VectorXcd rd_noisy =
            lag_average_difference(population_covariances(sc).rxx, profile);
        for (int lag = -half; lag <= half; ++lag) {
            const std::complex<double> expected =
                eta * std::polar(1.0, -phase * lag) + (lag == 0 ? 0.9 : 0.0);
            CHECK(std::abs(rd_noisy(lag + half) - expected) < 1e-12);
        }
    }

    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(
            lag_average_difference(Eigen::MatrixXcd::Identity(4, 4), profile),
            std::invalid_argument);
        CHECK_THROWS_AS(lag_average_sum(Eigen::MatrixXcd::Zero(4, 4), profile),
                        std::invalid_argument);
    }
}

TEST_CASE("sum lag averaging") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));
    const int m = profile.geometry.sensor_count();

    SUBCASE("zero pseudo covariance maps to the zero vector") {
        const Eigen::VectorXcd rs =
            lag_average_sum(Eigen::MatrixXcd::Zero(m, m), profile);
        CHECK(rs.norm() == 0.0);
    }

    SUBCASE("single strictly noncircular source matches the closed form") {
        const double theta = -33.0;
        const double eta = 0.8;
        const double psi = 2.1;
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.sources.push_back({theta, eta, SourceKind::Pam, psi, 4});

        const auto pop = population_covariances(sc);
        const Eigen::VectorXcd rs = lag_average_sum(pop.pseudo, profile);
        const double phase = lag_phase_rad(profile.geometry, theta);
        for (int idx = 0; idx < profile.l2; ++idx) {
            const int lag = profile.delta_p + idx;
            const std::complex<double> expected =
                std::polar(eta, psi) * std::polar(1.0, -phase * lag);
            CHECK(std::abs(rs(idx) - expected) < 1e-12);
        }
    }

    SUBCASE("broadside strictly noncircular source is constant across lags") {
        Scenario sc;
        sc.geometry = profile.geometry;
        sc.sources.push_back({0.0, 1.4, SourceKind::Bpsk, 0.6, 4});
        const Eigen::VectorXcd rs =
            lag_average_sum(population_covariances(sc).pseudo, profile);
        const std::complex<double> expected = std::polar(1.4, 0.6);
        for (int idx = 0; idx < profile.l2; ++idx) {
            CHECK(std::abs(rs(idx) - expected) < 1e-12);
        }
    }
}

TEST_CASE("lag averaging properties") {
    const CoarrayProfile profile = coarray_profile(nested_array(3, 3));
    const int m = profile.geometry.sensor_count();
    std::mt19937 rng(77);

    SUBCASE("conjugate symmetry from a Hermitian input") {
        SnapshotMatrix x = random_complex(m, 50, rng);
        const auto r = sample_covariance(x);
        const Eigen::VectorXcd rd = lag_average_difference(r, profile);
        const int half = (profile.l1 - 1) / 2;
        for (int lag = 1; lag <= half; ++lag) {
            CHECK(std::abs(rd(half + lag) - std::conj(rd(half - lag))) < 1e-12);
        }
    }

    SUBCASE("linearity") {
        const Eigen::MatrixXcd r1 = random_complex(m, m, rng);
        const Eigen::MatrixXcd r2 = random_complex(m, m, rng);
        const std::complex<double> alpha(0.3, -1.1);
        const std::complex<double> beta(-2.0, 0.4);
        const Eigen::VectorXcd lhs = lag_average_difference(alpha * r1 + beta * r2, profile);
        const Eigen::VectorXcd rhs = alpha * lag_average_difference(r1, profile) +
                                     beta * lag_average_difference(r2, profile);
        CHECK((lhs - rhs).norm() < 1e-12);

        const Eigen::VectorXcd lhs_s = lag_average_sum(alpha * r1 + beta * r2, profile);
        const Eigen::VectorXcd rhs_s = alpha * lag_average_sum(r1, profile) +
                                       beta * lag_average_sum(r2, profile);
        CHECK((lhs_s - rhs_s).norm() < 1e-12);
    }

    SUBCASE("pair-map averaging equals the naive per-lag scan") {
        for (const auto& geom :
             {nested_array(3, 3), nested_array(2, 2), make_geometry({0, 2, 3, 7})}) {
            const CoarrayProfile p = coarray_profile(geom);
            const int n = geom.sensor_count();
            const Eigen::MatrixXcd r = random_complex(n, n, rng);
            CHECK((lag_average_difference(r, p) - naive_diff(r, p)).norm() < 1e-13);
            CHECK((lag_average_sum(r, p) - naive_sum(r, p)).norm() < 1e-13);
        }
    }
}

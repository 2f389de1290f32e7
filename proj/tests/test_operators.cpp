#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qmoo/operators.hpp"
#include "qmoo/rng.hpp"

using namespace qmoo;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("angular momentum x") {
    SUBCASE("d=2 is sigma_x / 2") {
        const Eigen::MatrixXd lx = angular_momentum_x(2);
        CHECK(lx(0, 0) == 0.0);
        CHECK(lx(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(lx(1, 0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(lx(1, 1) == 0.0);
    }
    SUBCASE("d=3 off-diagonals are sqrt(2)/2") {
        const Eigen::MatrixXd lx = angular_momentum_x(3);
        CHECK(lx(0, 1) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-14));
        CHECK(lx(1, 2) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-14));
        CHECK(lx(0, 2) == 0.0);
    }
    SUBCASE("Hermitian for all small d") {
        for (int d = 2; d <= 10; ++d) {
            const Eigen::MatrixXd lx = angular_momentum_x(d);
            CHECK((lx - lx.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    CHECK_THROWS_AS(angular_momentum_x(1), std::domain_error);
}

TEST_CASE("angular momentum z") {
    const Eigen::MatrixXd lz2 = angular_momentum_z(2);
    CHECK(lz2(0, 0) == -0.5);
    CHECK(lz2(1, 1) == 0.5);
    const Eigen::MatrixXd lz3 = angular_momentum_z(3);
    CHECK(lz3(0, 0) == -1.0);
    CHECK(lz3(1, 1) == 0.0);
    CHECK(lz3(2, 2) == 1.0);
    for (int d = 2; d <= 9; ++d) CHECK(std::abs(angular_momentum_z(d).trace()) < 1e-12);
    CHECK_THROWS_AS(angular_momentum_z(0), std::domain_error);
}

TEST_CASE("squeezing operator") {
    CHECK((squeezing(2) - 0.25 * Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    const Eigen::MatrixXd s3 = squeezing(3);
    CHECK(s3(0, 0) == 1.0);
    CHECK(s3(1, 1) == 0.0);
    CHECK(s3(2, 2) == 1.0);
    const Eigen::MatrixXd s5 = squeezing(5);
    CHECK(s5(0, 0) == 4.0);
    CHECK(s5(1, 1) == 1.0);
    CHECK(s5(2, 2) == 0.0);
    CHECK(s5(3, 3) == 1.0);
    CHECK(s5(4, 4) == 4.0);
}

TEST_CASE("mixer matrix") {
    SUBCASE("zero angles give the identity") {
        for (int d : {2, 3, 5}) {
            const Eigen::MatrixXcd u = mixer_matrix(d, 0.0, 0.0);
            CHECK((u - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
    SUBCASE("d=2 at beta1=pi is -i sigma_x, beta2 ignored") {
        const Eigen::MatrixXcd u = mixer_matrix(2, kPi, 123.456);
        CHECK(std::abs(u(0, 0)) < 1e-12);
        CHECK(std::abs(u(1, 1)) < 1e-12);
        CHECK(std::abs(u(0, 1) - std::complex<double>(0, -1)) < 1e-12);
        CHECK(std::abs(u(1, 0) - std::complex<double>(0, -1)) < 1e-12);
    }
    SUBCASE("d=2 matches the closed form for random angles") {
        Rng rng(4);
        for (int rep = 0; rep < 50; ++rep) {
            const double beta = rng.uniform(-6, 6);
            const Eigen::MatrixXcd u = mixer_matrix(2, beta, rng.uniform(-6, 6));
            Eigen::MatrixXcd expected(2, 2);
            const std::complex<double> c(std::cos(beta / 2), 0);
            const std::complex<double> s(0, -std::sin(beta / 2));
            expected << c, s, s, c;
            CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("unitary for random angles") {
        Rng rng(9);
        for (int d : {3, 5, 7}) {
            for (int rep = 0; rep < 20; ++rep) {
                const Eigen::MatrixXcd u = mixer_matrix(d, rng.uniform(-8, 8), rng.uniform(-8, 8));
                CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <
                      1e-10);
            }
        }
    }
    SUBCASE("negating the angles inverts the mixer") {
        Rng rng(13);
        for (int d : {2, 3, 5}) {
            const double b1 = rng.uniform(-3, 3);
            const double b2 = rng.uniform(-3, 3);
            const Eigen::MatrixXcd prod = mixer_matrix(d, b1, b2) * mixer_matrix(d, -b1, -b2);
            CHECK((prod - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
    SUBCASE("non-finite angles are rejected") {
        CHECK_THROWS_AS(mixer_matrix(3, std::nan(""), 0.0), std::domain_error);
    }
}

TEST_CASE("commutator of Lx and Lz is anti-Hermitian and nonzero") {
    for (int d = 2; d <= 8; ++d) {
        const Eigen::MatrixXd lx = angular_momentum_x(d);
        const Eigen::MatrixXd lz = angular_momentum_z(d);
        const Eigen::MatrixXd comm = lx * lz - lz * lx;
        CHECK((comm + comm.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(comm.cwiseAbs().maxCoeff() > 0.1);
    }
}

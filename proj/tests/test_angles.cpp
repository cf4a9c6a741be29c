#include <doctest.h>

#include <cmath>
#include <numbers>

#include "planeop/angles.hpp"
#include "planeop/polar.hpp"
#include "support/oracles.hpp"
#include "support/random_matrices.hpp"

using namespace planeop;
using planeop::testing::Family;
using planeop::testing::RandomMatrices;

namespace {

constexpr double pi = std::numbers::pi;

/// Operator with eigenvalues l1, l2 on unit eigenvectors at angle beta.
Mat2 with_eigendata(double l1, double l2, double beta, double orientation = 0.3) {
    const Vec2 u1{std::cos(orientation), std::sin(orientation)};
    const Vec2 u2{std::cos(orientation + beta), std::sin(orientation + beta)};
    const Mat2 U = Mat2::columns(u1, u2);
    return U * Mat2::diag(l1, l2) * inverse(U);
}

/// cos(gamma) measured on the operator itself at eigen-coordinates (t, 1).
double measured_profile(double l1, double l2, double beta, double t) {
    const double orientation = 0.3;
    const Vec2 u1{std::cos(orientation), std::sin(orientation)};
    const Vec2 u2{std::cos(orientation + beta), std::sin(orientation + beta)};
    return std::cos(gamma_of(with_eigendata(l1, l2, beta, orientation), t * u1 + u2));
}

}  // namespace

TEST_CASE("ProfileParams validation") {
    CHECK_THROWS_AS(ProfileParams::make(1.0, 0.5), Error);
    CHECK_THROWS_AS(ProfileParams::make(0.5, 0.5), Error);
    CHECK_THROWS_AS(ProfileParams::make(2.0, 0.0), Error);
    CHECK_THROWS_AS(ProfileParams::make(2.0, 1.7), Error);
    CHECK_NOTHROW(ProfileParams::make(2.0, pi / 2));
}

TEST_CASE("f_profile") {
    SUBCASE("orthogonal eigenvectors at t = sqrt(delta)") {
        const auto p = ProfileParams::make(4.0, pi / 2);
        CHECK(f_profile(p, 2.0) == doctest::Approx(0.8).epsilon(1e-15));
        CHECK(measured_profile(1.0, 4.0, pi / 2, 2.0) == doctest::Approx(0.8).epsilon(1e-12));
    }
    SUBCASE("beta = pi/3 at t = -2") {
        const auto p = ProfileParams::make(4.0, pi / 3);
        CHECK(f_profile(p, -2.0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(measured_profile(1.0, 4.0, pi / 3, -2.0) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("tends to 1 along u1") {
        const auto p = ProfileParams::make(7.0, 0.9);
        CHECK(f_profile(p, 1e9) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(f_profile(p, -1e9) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(f_profile(p, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("matches the measured angle everywhere") {
        RandomMatrices rng(8);
        for (int i = 0; i < 2000; ++i) {
            const double l1 = rng.uniform(0.1, 3.0);
            const double l2 = l1 * rng.uniform(1.01, 10.0);
            const double beta = rng.uniform(0.05, pi / 2);
            const double t = rng.uniform(-20.0, 20.0);
            const auto p = ProfileParams::make(l2 / l1, beta);
            REQUIRE(f_profile(p, t) == doctest::Approx(measured_profile(l1, l2, beta, t)).epsilon(1e-9));
        }
    }
}

TEST_CASE("f_critical_points") {
    const auto c = f_critical_points(ProfileParams::make(4.0, 1.0));
    CHECK(c.t0 == 0.0);
    CHECK(c.t_plus == 2.0);
    CHECK(c.t_minus == -2.0);

    SUBCASE("derivative vanishes at the roots") {
        const auto p = ProfileParams::make(9.0, pi / 4);
        const auto f = [&](double t) { return f_profile(p, t); };
        CHECK(std::abs(testing::central_difference(f, 3.0, 1e-5)) <= 1e-6);
        CHECK(std::abs(testing::central_difference(f, -3.0, 1e-5)) <= 1e-6);
        CHECK(std::abs(testing::central_difference(f, 0.0, 1e-5)) <= 1e-6);
        CHECK(std::abs(testing::central_difference(f, 1.0, 1e-5)) > 1e-3);
    }
    SUBCASE("t_minus is the global minimum, t_plus the minimum on t > 0") {
        const auto p = ProfileParams::make(5.0, 0.7);
        const auto crit = f_critical_points(p);
        for (double t = -50.0; t <= 50.0; t += 0.01) {
            REQUIRE(f_profile(p, t) >= f_profile(p, crit.t_minus) - 1e-15);
            if (t > 0.0) {
                REQUIRE(f_profile(p, t) >= f_profile(p, crit.t_plus) - 1e-15);
            }
        }
    }
}

TEST_CASE("gamma_max_real") {
    CHECK(gamma_max_real(1.0, 4.0, pi / 3) == doctest::Approx(pi / 3).epsilon(1e-14));
    CHECK(gamma_max_real(1.0, 4.0, pi / 2) == doctest::Approx(std::acos(0.8)).epsilon(1e-14));
    CHECK(gamma_max_real(1.0, 4.0, pi / 2) == doctest::Approx(0.6435).epsilon(1e-4));
    CHECK(gamma_max_real(1.0, 1.0 + 1e-12, 1.0) < 1e-11);
    CHECK_THROWS_AS(gamma_max_real(4.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(gamma_max_real(-1.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(gamma_max_real(1.0, 2.0, 0.0), Error);
    CHECK_THROWS_AS(gamma_max_real(1.0, 2.0, 2.0), Error);

    SUBCASE("arccos form and profile minimum agree") {
        RandomMatrices rng(12);
        for (int i = 0; i < 10'000; ++i) {
            const double l1 = rng.uniform(0.1, 3.0);
            const double l2 = l1 * rng.uniform(1.5, 20.0);
            const double beta = rng.uniform(0.05, pi / 2);
            const double g = gamma_max_real(l1, l2, beta);
            const double s = std::sqrt(l1 * l2);
            const double arccos_form =
                std::acos((2 * s - (l1 + l2) * std::cos(beta)) / (l1 + l2 - 2 * s * std::cos(beta)));
            REQUIRE(g == doctest::Approx(arccos_form).epsilon(1e-9));
            const auto p = ProfileParams::make(l2 / l1, beta);
            REQUIRE(f_profile(p, f_critical_points(p).t_minus) == doctest::Approx(std::cos(g)).epsilon(1e-12));
        }
    }
    SUBCASE("sampling oracle") {
        for (double beta : {pi / 3, pi / 2}) {
            const Mat2 m = with_eigendata(1.0, 4.0, beta);
            const auto sweep = testing::sweep_angles_acos(m, 100'000);
            CHECK(sweep.max_unsigned <= gamma_max_real(1.0, 4.0, beta) + 1e-9);
            CHECK(sweep.max_unsigned >= gamma_max_real(1.0, 4.0, beta) - 1e-6);
        }
    }
}

TEST_CASE("gamma_prime_max equals the orthogonal-eigenvector bound") {
    RandomMatrices rng(13);
    for (int i = 0; i < 10'000; ++i) {
        const double a = rng.uniform(0.05, 3.0);
        const double b = a * rng.uniform(1.0001, 50.0);
        const double bound = 2.0 * std::sqrt(std::sqrt(a * a * b * b)) / (a + b);
        REQUIRE(gamma_prime_max(a, b) == doctest::Approx(gamma_max_real(a, b, pi / 2)).epsilon(1e-12));
        REQUIRE(std::abs(gamma_prime_max(a, b) - std::acos(bound)) <= 1e-7);
    }
    CHECK(gamma_prime_max(2.0, 2.0) == 0.0);
}

TEST_CASE("rotation_range examples") {
    SUBCASE("complex") {
        const auto r = rotation_range({0, -2, 1, 0});
        CHECK(r.mode == RangeMode::OneDirectional);
        const double spread = std::acos(2 * std::numbers::sqrt2 / 3);
        CHECK(r.gamma_min == doctest::Approx(pi / 2 - spread).epsilon(1e-14));
        CHECK(r.gamma_max == doctest::Approx(pi / 2 + spread).epsilon(1e-14));
        CHECK(r.gamma_min == doctest::Approx(1.2310).epsilon(1e-4));
        CHECK(r.gamma_max == doctest::Approx(1.9106).epsilon(1e-4));
        const auto sweep = testing::sweep_angles_acos({0, -2, 1, 0}, 100'000);
        CHECK(sweep.min_signed == doctest::Approx(r.gamma_min).epsilon(1e-6));
        CHECK(sweep.max_signed == doctest::Approx(r.gamma_max).epsilon(1e-6));
    }
    SUBCASE("conformal") {
        for (double theta : {0.4, 2.9, -1.3}) {
            const auto r = rotation_range(1.7 * Mat2::rotation(theta));
            CHECK(r.mode == RangeMode::OneDirectional);
            CHECK(r.gamma_min == doctest::Approx(theta).epsilon(1e-14));
            CHECK(r.gamma_max == doctest::Approx(theta).epsilon(1e-14));
        }
    }
    SUBCASE("mixed signs") {
        const auto r = rotation_range(Mat2::diag(2, -1));
        CHECK(r.mode == RangeMode::AdjacentCones);
        CHECK(r.gamma_min == 0.0);
        CHECK(r.gamma_max == pi);
    }
    SUBCASE("positive real") {
        const auto r = rotation_range(with_eigendata(1.0, 4.0, pi / 3));
        CHECK(r.mode == RangeMode::Bidirectional);
        CHECK(r.gamma_max == doctest::Approx(pi / 3).epsilon(1e-12));
        CHECK(r.gamma_min == -r.gamma_max);
    }
    SUBCASE("negative real composes with the central symmetry") {
        const Mat2 m = -1.0 * with_eigendata(1.0, 4.0, pi / 3);
        const auto r = rotation_range(m);
        CHECK(r.mode == RangeMode::CentralSymmetric);
        CHECK(r.gamma_min == doctest::Approx(pi - pi / 3).epsilon(1e-12));
        CHECK(r.gamma_max == pi);
        const auto sweep = testing::sweep_angles_acos(m, 100'000);
        CHECK(sweep.min_unsigned >= r.gamma_min - 1e-9);
        CHECK(sweep.min_unsigned <= r.gamma_min + 1e-6);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(rotation_range({1, 1, 0, 1}), Error);
        CHECK_THROWS_AS(rotation_range({1, 2, 2, 4}), Error);
    }
}

TEST_CASE("gamma_of") {
    CHECK(gamma_of(Mat2::rotation(pi / 3), {1, 0}) == doctest::Approx(pi / 3).epsilon(1e-15));
    const Mat2 m = with_eigendata(1.0, 4.0, 1.0);
    const auto& r = std::get<RealDistinct>(classify(m));
    CHECK(std::abs(gamma_of(m, r.u1)) <= 1e-12);
    CHECK(std::abs(gamma_of(m, r.u2)) <= 1e-12);
    const double h = 1.0 / std::numbers::sqrt2;
    CHECK(gamma_of({0, -2, 1, 0}, {h, h}) == doctest::Approx(std::atan2(3.0, -1.0)).epsilon(1e-15));
    CHECK(gamma_of({0, -2, 1, 0}, {h, h}) == doctest::Approx(1.8925).epsilon(1e-4));
    CHECK_THROWS_AS(gamma_of(m, {0, 0}), Error);
}

TEST_CASE("envelopes on random matrices") {
    RandomMatrices rng(77);
    SUBCASE("complex: one direction, inside [alpha - g', alpha + g']") {
        for (int i = 0; i < 100; ++i) {
            const Mat2 m = rng.next(Family::ComplexSpectrum);
            const auto range = rotation_range(m);
            const double alpha = polar_decompose(m).alpha;
            const auto sweep = testing::sweep_angles(4000, [&](Vec2 x) { return gamma_of(m, x); });
            REQUIRE(sweep.min_signed >= range.gamma_min - 1e-9);
            REQUIRE(sweep.max_signed <= range.gamma_max + 1e-9);
            REQUIRE(sweep.has_positive != sweep.has_negative);
            REQUIRE(sweep.has_positive == (alpha > 0.0));
        }
    }
    SUBCASE("positive real: polar spread exceeds |alpha|, so the extremes differ in sign") {
        for (int i = 0; i < 100; ++i) {
            const Mat2 m = rng.next(Family::RealPositiveSpectrum);
            const auto p = polar_decompose(m);
            const double spread = gamma_prime_max(p.sqrt_lambda, p.sqrt_mu);
            REQUIRE(std::signbit(p.alpha - spread) != std::signbit(p.alpha + spread));
            const auto sweep = testing::sweep_angles(4000, [&](Vec2 x) { return gamma_of(m, x); });
            REQUIRE(sweep.has_positive);
            REQUIRE(sweep.has_negative);
            REQUIRE(sweep.max_unsigned <= rotation_range(m).gamma_max + 1e-9);
        }
    }
}

#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "planeop/angles.hpp"
#include "planeop/meanangle.hpp"
#include "planeop/polar.hpp"
#include "support/oracles.hpp"
#include "support/random_matrices.hpp"

using namespace planeop;
using planeop::testing::Family;
using planeop::testing::RandomMatrices;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_over_pi = 2.0 / std::numbers::pi;

GPoint random_g_point(RandomMatrices& rng) {
    for (;;) {
        const GPoint p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        if (p.x * p.x + p.y * p.y < 0.999 * p.z * p.z) return p;
    }
}

}  // namespace

TEST_CASE("quadrature oracle reproduces 2/pi") {
    CHECK(testing::quadrature_mean_gamma_prime() == doctest::Approx(two_over_pi).epsilon(1e-6));
    CHECK(std::abs(testing::quadrature_mean_gamma_prime() - two_over_pi) <= 1e-6);
}

TEST_CASE("change of variables") {
    SUBCASE("scaled rotation") {
        const GPoint p = to_xyzt({1, 1, -1, 1});
        CHECK(p.x == 0.0);
        CHECK(p.y == 0.0);
        CHECK(p.z == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
        CHECK(p.t == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
        CHECK(max_abs(from_xyzt(p) - Mat2{1, 1, -1, 1}) <= 1e-15);
    }
    SUBCASE("x = y = 0 is conformal") {
        const Mat2 m = from_xyzt({0, 0, 0.6, 0.8});
        const double h = 1.0 / std::numbers::sqrt2;
        CHECK(m.a == doctest::Approx(0.8 * h).epsilon(1e-15));
        CHECK(m.b == doctest::Approx(0.6 * h).epsilon(1e-15));
        CHECK(m.c == doctest::Approx(-0.6 * h).epsilon(1e-15));
        CHECK(m.d == doctest::Approx(0.8 * h).epsilon(1e-15));
        CHECK(gamma_prime_max_at({0, 0, 0.6, 0.8}) == 0.0);
    }
    SUBCASE("round trip and domain on random matrices") {
        RandomMatrices rng(1);
        double worst = 0.0;
        for (int i = 0; i < 100'000; ++i) {
            const Mat2 m = rng.raw();
            worst = std::max(worst, max_abs(from_xyzt(to_xyzt(m)) - m));
            const Discriminants d = discriminants(m);
            if (std::abs(d.from_entries) > 1e-9 * d.magnitude) {
                REQUIRE(to_xyzt(m).in_complex_domain() == (d.from_entries < 0.0));
            }
        }
        CHECK(worst < 1e-14);
    }
}

TEST_CASE("gamma_prime_max_at") {
    CHECK(gamma_prime_max_at({0, 0, 1, 1}) == 0.0);
    CHECK(gamma_prime_max_at({0.3, 0, 0.5, 0.0}) == doctest::Approx(std::asin(0.6)).epsilon(1e-15));
    CHECK(gamma_prime_max_at({0.3, 0, 0.5, 0.0}) == doctest::Approx(0.6435).epsilon(1e-4));
    CHECK_THROWS_AS(gamma_prime_max_at({0.5, 0, 0.5, 0}), Error);
    CHECK_THROWS_AS(gamma_prime_max_at({1, 1, 0.1, 0}), Error);

    SUBCASE("agrees with the polar route") {
        RandomMatrices rng(2);
        for (int i = 0; i < 10'000; ++i) {
            const GPoint p = random_g_point(rng);
            const PolarForm polar = polar_decompose(from_xyzt(p));
            const double bound = 2.0 * std::sqrt(polar.sqrt_lambda * polar.sqrt_mu) /
                                 (polar.sqrt_lambda + polar.sqrt_mu);
            REQUIRE(gamma_prime_max_at(p) == doctest::Approx(gamma_prime_max(polar.sqrt_lambda, polar.sqrt_mu)).epsilon(1e-10));
            if (gamma_prime_max_at(p) > 1e-3) {
                REQUIRE(std::abs(gamma_prime_max_at(p) - std::acos(bound)) <= 1e-10);
            }
        }
    }
    SUBCASE("homogeneous of degree zero") {
        RandomMatrices rng(3);
        for (int i = 0; i < 10'000; ++i) {
            const GPoint p = random_g_point(rng);
            for (double s : {0.25, 2.0, 1024.0}) {
                REQUIRE(gamma_prime_max_at({s * p.x, s * p.y, s * p.z, s * p.t}) == gamma_prime_max_at(p));
            }
            const double s = rng.uniform(0.01, 100.0);
            REQUIRE(gamma_prime_max_at({s * p.x, s * p.y, s * p.z, s * p.t}) ==
                    doctest::Approx(gamma_prime_max_at(p)).epsilon(1e-14));
        }
    }
}

TEST_CASE("alpha_at") {
    CHECK(alpha_at({0, 0, 1, 0}) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(alpha_at({0, 0, 1, 1}) == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK_THROWS_AS(alpha_at({0, 0, 0, 1}), Error);
    CHECK_THROWS_AS(alpha_at({0, 0, -1, 1}), Error);

    RandomMatrices rng(4);
    for (int i = 0; i < 10'000; ++i) {
        GPoint p = random_g_point(rng);
        p.z = std::abs(p.z);
        // z > 0 is a clockwise polar rotation: alpha_at reports its magnitude.
        const double polar_alpha = polar_decompose(from_xyzt(p)).alpha;
        REQUIRE(polar_alpha < 0.0);
        REQUIRE(alpha_at(p) == doctest::Approx(-polar_alpha).epsilon(1e-10));
        REQUIRE(alpha_at(p) == doctest::Approx(std::acos(p.t / std::hypot(p.t, p.z))).epsilon(1e-10));
        // t -> -t mirrors alpha about pi/2.
        REQUIRE(alpha_at({p.x, p.y, p.z, -p.t}) == doctest::Approx(pi - alpha_at(p)).epsilon(1e-14));
    }
}

TEST_CASE("sample_g_prime") {
    const auto sample = sample_g_prime(42, 1'000'000);
    CHECK(sample.n_proposed == 1'000'000);
    const double ratio = static_cast<double>(sample.accepted.size()) / 1e6;
    CHECK(std::abs(ratio - 0.25) <= 4.0 * std::sqrt(0.25 * 0.75 / 1e6));
    for (const GPoint& p : sample.accepted) {
        REQUIRE(p.x * p.x + p.y * p.y < p.z * p.z);
        REQUIRE(p.x * p.x + p.y * p.y < 1.0);
        REQUIRE(p.z * p.z + p.t * p.t < 1.0);
    }

    const auto again = sample_g_prime(42, 1'000'000);
    REQUIRE(again.accepted.size() == sample.accepted.size());
    bool identical = true;
    for (std::size_t i = 0; i < sample.accepted.size(); ++i) {
        const GPoint& p = sample.accepted[i];
        const GPoint& q = again.accepted[i];
        identical &= std::bit_cast<std::uint64_t>(p.x) == std::bit_cast<std::uint64_t>(q.x) &&
                     std::bit_cast<std::uint64_t>(p.t) == std::bit_cast<std::uint64_t>(q.t);
    }
    CHECK(identical);

    const auto other = sample_g_prime(43, 1000);
    CHECK(other.accepted.front().x != sample.accepted.front().x);
    CHECK_THROWS_AS(sample_g_prime(1, 0), Error);
}

TEST_CASE("estimators") {
    SUBCASE("n = 10^6") {
        const auto g = estimate_mean_gamma_prime(42, 1'000'000);
        CHECK(std::abs(g.mean - two_over_pi) <= 4.0 * g.std_error);
        CHECK(g.std_error < 1e-3);
        CHECK(g.n_samples == 1'000'000);
        CHECK(g.n_accepted == sample_g_prime(42, 1'000'000).accepted.size());
        CHECK(g.seed == 42);

        const auto a = estimate_mean_alpha(42, 1'000'000);
        CHECK(std::abs(a.mean - pi / 2) <= 4.0 * a.std_error);
        CHECK(a.n_accepted < g.n_accepted);
    }
    SUBCASE("n = 10^4 uses a wider band") {
        const auto g = estimate_mean_gamma_prime(7, 10'000);
        CHECK(std::abs(g.mean - two_over_pi) <= 4.0 * g.std_error);
        CHECK(g.std_error > estimate_mean_gamma_prime(7, 1'000'000).std_error * 5.0);
    }
    SUBCASE("matches a direct pass over the sampled points") {
        const auto sample = sample_g_prime(9, 200'000);
        double sum = 0.0;
        for (const GPoint& p : sample.accepted) sum += gamma_prime_max_at(p);
        const double direct = sum / static_cast<double>(sample.accepted.size());
        CHECK(estimate_mean_gamma_prime(9, 200'000).mean == doctest::Approx(direct).epsilon(1e-12));
    }
    SUBCASE("worker count does not change the result") {
        const auto one = survey_mean_angles(5, 500'000, 1);
        for (unsigned w : {2u, 3u, 8u}) {
            const auto many = survey_mean_angles(5, 500'000, w);
            CHECK(std::bit_cast<std::uint64_t>(many.gamma_prime.mean) == std::bit_cast<std::uint64_t>(one.gamma_prime.mean));
            CHECK(std::bit_cast<std::uint64_t>(many.alpha.std_error) == std::bit_cast<std::uint64_t>(one.alpha.std_error));
            CHECK(many.acceptance.n_accepted == one.acceptance.n_accepted);
        }
    }
    SUBCASE("acceptance ratio estimates vol(G') / vol(C)") {
        const auto s = survey_mean_angles(11, 1'000'000);
        CHECK(std::abs(s.acceptance.mean - 0.25) <= 4.0 * s.acceptance.std_error);
        CHECK(s.acceptance.std_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 1e6)).epsilon(0.01));
    }
    SUBCASE("too few samples") {
        CHECK_THROWS_AS(estimate_mean_gamma_prime(1, 100), Error);
        CHECK_THROWS_AS(estimate_mean_alpha(1, 9'999), Error);
    }
}

TEST_CASE("alpha on the conformal slice is uniform") {
    RandomMatrices rng(6);
    double sum = 0.0;
    double sum2 = 0.0;
    int n = 0;
    while (n < 100'000) {
        const double z = rng.uniform(-1, 1);
        const double t = rng.uniform(-1, 1);
        if (z <= 0.0 || z * z + t * t >= 1.0) continue;
        const double a = alpha_at({0, 0, z, t});
        sum += a;
        sum2 += a * a;
        ++n;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / n);
    CHECK(std::abs(mean - pi / 2) <= 4.0 * se);
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "planeop/core.hpp"

namespace planeop {

/// Rotated coefficient coordinates:
///   a = (x + t)/sqrt2, b = (y + z)/sqrt2, c = (y - z)/sqrt2, d = (t - x)/sqrt2.
/// A has a complex spectrum exactly when x^2 + y^2 < z^2.
struct GPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;

    bool in_complex_domain() const { return x * x + y * y < z * z; }
};

GPoint to_xyzt(const Mat2& m);
Mat2 from_xyzt(const GPoint& p);

/// arcsin(sqrt((x^2 + y^2) / (t^2 + z^2))); requires x^2 + y^2 < z^2.
double gamma_prime_max_at(const GPoint& p);

/// Rotation angle of the orthogonal factor, in (0, pi), from
/// cos = t / sqrt(t^2 + z^2) and sin = z / sqrt(t^2 + z^2); requires z > 0.
/// Since c - b = -sqrt2 z, points with z > 0 rotate clockwise, so this is
/// -polar_decompose(from_xyzt(p)).alpha.
double alpha_at(const GPoint& p);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t n_accepted = 0;
    std::uint64_t seed = 0;
};

/// Draws are split into fixed chunks of this many proposals; chunk k uses a
/// generator seeded from (seed, k), so results do not depend on worker count.
inline constexpr std::uint64_t kChunkSize = 1u << 16;

/// Uniform proposals on the product of two unit disks, (x, y) and (z, t),
/// kept when x^2 + y^2 < z^2.
struct GPrimeSample {
    std::vector<GPoint> accepted;
    std::uint64_t n_proposed = 0;
};

GPrimeSample sample_g_prime(std::uint64_t seed, std::uint64_t n);

/// Everything a single sampling pass produces.
struct MeanAngleSurvey {
    McEstimate gamma_prime;  // mean of gamma_prime_max_at over accepted points
    McEstimate alpha;        // mean of alpha_at over accepted points with z > 0
    McEstimate acceptance;   // indicator mean: estimates vol(G') / vol(C) = 1/4
};

/// workers = 0 picks the hardware concurrency.
MeanAngleSurvey survey_mean_angles(std::uint64_t seed, std::uint64_t n, unsigned workers = 0);

/// Both estimators require n >= 10^4.
McEstimate estimate_mean_gamma_prime(std::uint64_t seed, std::uint64_t n, unsigned workers = 0);
McEstimate estimate_mean_alpha(std::uint64_t seed, std::uint64_t n, unsigned workers = 0);

inline constexpr std::uint64_t kMinMeanAngleSamples = 10'000;

}  // namespace planeop

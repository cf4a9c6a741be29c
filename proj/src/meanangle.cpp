#include "planeop/meanangle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <thread>

namespace planeop {

GPoint to_xyzt(const Mat2& m) {
    constexpr double h = 1.0 / std::numbers::sqrt2;
    return {h * (m.a - m.d), h * (m.b + m.c), h * (m.b - m.c), h * (m.a + m.d)};
}

Mat2 from_xyzt(const GPoint& p) {
    constexpr double h = 1.0 / std::numbers::sqrt2;
    return {h * (p.x + p.t), h * (p.y + p.z), h * (p.y - p.z), h * (p.t - p.x)};
}

double gamma_prime_max_at(const GPoint& p) {
    if (!p.in_complex_domain()) {
        throw Error(Errc::OutsideDomain, "gamma' is only defined for x^2 + y^2 < z^2");
    }
    return std::asin(std::sqrt((p.x * p.x + p.y * p.y) / (p.t * p.t + p.z * p.z)));
}

double alpha_at(const GPoint& p) {
    if (!(p.z > 0.0)) {
        throw Error(Errc::OutsideDomain, "alpha is only tabulated for z > 0");
    }
    // Same angle as arccos(t / sqrt(t^2 + z^2)) on the upper half plane.
    return std::atan2(p.z, p.t);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class ChunkSampler {
public:
    ChunkSampler(std::uint64_t seed, std::uint64_t chunk)
        : engine_(splitmix64(splitmix64(seed) ^ splitmix64(chunk + 1))) {}

    GPoint next() {
        const auto [x, y] = unit_disk();
        const auto [z, t] = unit_disk();
        return {x, y, z, t};
    }

private:
    double symmetric_unit() {
        // 53 random bits, mapped to [-1, 1).
        return 2.0 * static_cast<double>(engine_() >> 11) * 0x1p-53 - 1.0;
    }

    std::pair<double, double> unit_disk() {
        for (;;) {
            const double u = symmetric_unit();
            const double v = symmetric_unit();
            if (u * u + v * v < 1.0) {
                return {u, v};
            }
        }
    }

    std::mt19937_64 engine_;
};

/// Running mean and sum of squared deviations.
struct Moments {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double value) {
        ++count;
        const double delta = value - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (value - mean);
    }

    void merge(const Moments& other) {
        if (other.count == 0) {
            return;
        }
        const double n1 = static_cast<double>(count);
        const double n2 = static_cast<double>(other.count);
        const double total = n1 + n2;
        const double delta = other.mean - mean;
        mean += delta * n2 / total;
        m2 += other.m2 + delta * delta * n1 * n2 / total;
        count += other.count;
    }

    double std_error() const {
        if (count < 2) {
            return 0.0;
        }
        const double n = static_cast<double>(count);
        return std::sqrt(m2 / (n - 1.0) / n);
    }
};

struct ChunkResult {
    std::uint64_t proposed = 0;
    Moments gamma_prime;
    Moments alpha;
};

std::uint64_t chunk_count(std::uint64_t n) { return (n + kChunkSize - 1) / kChunkSize; }

std::uint64_t chunk_length(std::uint64_t n, std::uint64_t chunk) {
    return std::min(kChunkSize, n - chunk * kChunkSize);
}

ChunkResult run_chunk(std::uint64_t seed, std::uint64_t n, std::uint64_t chunk) {
    ChunkSampler sampler(seed, chunk);
    ChunkResult result;
    result.proposed = chunk_length(n, chunk);
    for (std::uint64_t i = 0; i < result.proposed; ++i) {
        const GPoint p = sampler.next();
        if (!p.in_complex_domain()) {
            continue;
        }
        result.gamma_prime.push(gamma_prime_max_at(p));
        if (p.z > 0.0) {
            result.alpha.push(alpha_at(p));
        }
    }
    return result;
}

McEstimate to_estimate(const Moments& m, std::uint64_t n, std::uint64_t seed) {
    return {m.mean, m.std_error(), n, m.count, seed};
}

void require_samples(std::uint64_t n) {
    if (n < kMinMeanAngleSamples) {
        throw Error(Errc::InvalidArgument,
                    "mean-angle estimation needs at least " +
                        std::to_string(kMinMeanAngleSamples) + " samples");
    }
}

}  // namespace

GPrimeSample sample_g_prime(std::uint64_t seed, std::uint64_t n) {
    if (n == 0) {
        throw Error(Errc::InvalidArgument, "sample count must be positive");
    }
    GPrimeSample out;
    out.n_proposed = n;
    out.accepted.reserve(n / 4 + 64);
    for (std::uint64_t chunk = 0; chunk < chunk_count(n); ++chunk) {
        ChunkSampler sampler(seed, chunk);
        const std::uint64_t len = chunk_length(n, chunk);
        for (std::uint64_t i = 0; i < len; ++i) {
            const GPoint p = sampler.next();
            if (p.in_complex_domain()) {
                out.accepted.push_back(p);
            }
        }
    }
    return out;
}

MeanAngleSurvey survey_mean_angles(std::uint64_t seed, std::uint64_t n, unsigned workers) {
    if (n == 0) {
        throw Error(Errc::InvalidArgument, "sample count must be positive");
    }
    const std::uint64_t chunks = chunk_count(n);
    std::vector<ChunkResult> results(chunks);

    unsigned threads = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t k = next++; k < chunks; k = next++) {
            results[k] = run_chunk(seed, n, k);
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(work);
        }
    }

    // Merge in chunk order so the result is independent of scheduling.
    Moments gamma_prime;
    Moments alpha;
    for (const ChunkResult& r : results) {
        gamma_prime.merge(r.gamma_prime);
        alpha.merge(r.alpha);
    }

    const double accepted = static_cast<double>(gamma_prime.count);
    const double ratio = accepted / static_cast<double>(n);
    McEstimate acceptance{ratio, std::sqrt(ratio * (1.0 - ratio) / static_cast<double>(n)), n,
                          gamma_prime.count, seed};
    return {to_estimate(gamma_prime, n, seed), to_estimate(alpha, n, seed), acceptance};
}

McEstimate estimate_mean_gamma_prime(std::uint64_t seed, std::uint64_t n, unsigned workers) {
    require_samples(n);
    return survey_mean_angles(seed, n, workers).gamma_prime;
}

McEstimate estimate_mean_alpha(std::uint64_t seed, std::uint64_t n, unsigned workers) {
    require_samples(n);
    return survey_mean_angles(seed, n, workers).alpha;
}

}  // namespace planeop

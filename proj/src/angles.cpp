#include "planeop/angles.hpp"

#include <cmath>
#include <numbers>

#include "planeop/polar.hpp"

namespace planeop {

bool RotationRange::contains(double gamma, double tolerance) const {
    const double g = (mode == RangeMode::CentralSymmetric || mode == RangeMode::AdjacentCones)
                         ? std::abs(gamma)
                         : gamma;
    return g >= gamma_min - tolerance && g <= gamma_max + tolerance;
}

ProfileParams ProfileParams::make(double delta, double beta) {
    if (!(delta > 1.0) || !std::isfinite(delta)) {
        throw Error(Errc::InvalidProfile, "delta must exceed 1");
    }
    if (!(beta > 0.0 && beta <= 0.5 * std::numbers::pi)) {
        throw Error(Errc::InvalidBeta, "beta must lie in (0, pi/2]");
    }
    return {delta, beta};
}

double f_profile(const ProfileParams& p, double t) {
    const double c = std::cos(p.beta);
    const double delta = p.delta;
    const double numerator = t * t + (1.0 + delta) * c * t + delta;
    const double len_x = std::sqrt(t * t + 2.0 * t * c + 1.0);
    const double len_image = std::sqrt(t * t + 2.0 * delta * t * c + delta * delta);
    return numerator / (len_x * len_image);
}

CriticalPoints f_critical_points(const ProfileParams& p) {
    const double root = std::sqrt(p.delta);
    return {0.0, root, -root};
}

double gamma_max_real(double lambda1, double lambda2, double beta) {
    if (!(lambda1 > 0.0 && lambda2 > lambda1) || !std::isfinite(lambda2)) {
        throw Error(Errc::InvalidEigenvalues, "require 0 < lambda1 < lambda2");
    }
    if (!(beta > 0.0 && beta <= 0.5 * std::numbers::pi)) {
        throw Error(Errc::InvalidBeta, "beta must lie in (0, pi/2]");
    }
    // cos = (2 sqrt(l1 l2) - (l1 + l2) cos b) / (l1 + l2 - 2 sqrt(l1 l2) cos b)
    // sin = (l2 - l1) sin b / (same denominator)
    const double geometric = 2.0 * std::sqrt(lambda1 * lambda2);
    return std::atan2((lambda2 - lambda1) * std::sin(beta),
                      geometric - (lambda1 + lambda2) * std::cos(beta));
}

double gamma_prime_max(double sqrt_lambda, double sqrt_mu) {
    // sin = |sqrt(mu) - sqrt(lambda)| / (sqrt(lambda) + sqrt(mu))
    return std::atan2(std::abs(sqrt_mu - sqrt_lambda), 2.0 * std::sqrt(sqrt_lambda * sqrt_mu));
}

RotationRange rotation_range(const Mat2& m) {
    const SpectrumClass spectrum = classify(m);
    if (std::holds_alternative<ComplexPair>(spectrum)) {
        const PolarForm p = polar_decompose(m);
        const double spread = gamma_prime_max(p.sqrt_lambda, p.sqrt_mu);
        return {p.alpha - spread, p.alpha + spread, RangeMode::OneDirectional};
    }

    const auto& real = std::get<RealDistinct>(spectrum);
    if (real.lambda1 > 0.0) {
        const double g = gamma_max_real(real.lambda1, real.lambda2, real.beta);
        return {-g, g, RangeMode::Bidirectional};
    }
    if (real.lambda2 < 0.0) {
        // Ascending order puts the larger magnitude first.
        const double g = gamma_max_real(-real.lambda2, -real.lambda1, real.beta);
        return {std::numbers::pi - g, std::numbers::pi, RangeMode::CentralSymmetric};
    }
    return {0.0, std::numbers::pi, RangeMode::AdjacentCones};
}

double gamma_of(const Mat2& m, Vec2 x) {
    if (norm(x) == 0.0) {
        throw Error(Errc::ZeroVector, "rotation angle undefined for the zero vector");
    }
    return signed_angle(x, apply(m, x));
}

}  // namespace planeop

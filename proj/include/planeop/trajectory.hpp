#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "planeop/core.hpp"

namespace planeop {

/// Real basis (u, v) from the eigenvector z of exp(i theta), in which A acts
/// as the rotation rot(theta). P maps standard coordinates to (u, v) coordinates.
struct InvariantBasis {
    Vec2 u;
    Vec2 v;
    double theta;  // (0, pi)
    Mat2 P;
};

/// Requires a complex spectrum and |det(A) - 1| <= 1e-9. The eigenvector is
/// normalized to unit length with its dominant component real and positive,
/// then multiplied by `rescale` (a test hook; any nonzero value describes the
/// same family of ellipses).
InvariantBasis invariant_basis(const Mat2& m, std::complex<double> rescale = 1.0);

struct ConicInvariants {
    Mat2 Af;       // P^T P
    double S;      // trace(Af)
    double delta;  // det(Af) = det(P)^2
};

ConicInvariants conic_invariants(const Mat2& P);

struct EllipseReport {
    Mat2 Af;
    double S;
    double delta;
    double Delta;     // -delta r^2
    double lambda_p;  // smaller eigenvalue of Af
    double mu_p;      // larger eigenvalue of Af
    double semi_major;
    double semi_minor;
    double r2;
    Vec2 major_axis;
    Vec2 minor_axis;

    /// x^T Af x, the quadratic form that equals r2 on the ellipse.
    double form(Vec2 x) const;
    double eccentricity() const;
};

EllipseReport ellipse_through(const Mat2& m, Vec2 x0, std::complex<double> rescale = 1.0);

inline constexpr std::size_t kMaxPeriod = 10'000;
inline constexpr double kPeriodAngleTolerance = 1e-9;

struct OrbitReport {
    std::vector<Vec2> points;
    std::optional<std::size_t> period;
    double theta_over_2pi;
};

/// Iterates x_{k+1} = A x_k for n points starting at x0, and reports the
/// smallest q <= min(n, kMaxPeriod) with q theta = 0 (mod 2 pi) and A^q x0 = x0.
OrbitReport orbit(const Mat2& m, Vec2 x0, std::size_t n);

}  // namespace planeop

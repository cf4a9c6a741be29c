#include "planeop/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace planeop {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::SingularMatrix: return "singular matrix";
    case Errc::DegenerateSpectrum: return "degenerate spectrum";
    case Errc::ZeroVector: return "zero vector";
    case Errc::NotSymmetric: return "matrix is not symmetric";
    case Errc::ReflectionCase: return "reflection case out of scope";
    case Errc::Indeterminate: return "indeterminate";
    case Errc::InvalidEigenvalues: return "invalid eigenvalues";
    case Errc::InvalidBeta: return "invalid eigenvector angle";
    case Errc::InvalidProfile: return "invalid profile parameters";
    case Errc::OutsideDomain: return "point outside domain";
    case Errc::NotComplexSpectrum: return "complex spectrum with det=1 required";
    case Errc::DetNotOne: return "complex spectrum with det=1 required";
    case Errc::SingularBasis: return "singular basis";
    case Errc::InvalidArgument: return "invalid argument";
    }
    return "unknown error";
}

double dot(Vec2 p, Vec2 q) { return p.x1 * q.x1 + p.x2 * q.x2; }
double cross(Vec2 p, Vec2 q) { return p.x1 * q.x2 - p.x2 * q.x1; }
double norm(Vec2 p) { return std::hypot(p.x1, p.x2); }

Mat2 Mat2::rotation(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c, -s, s, c};
}

bool Mat2::is_finite() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
}

Mat2 operator*(const Mat2& p, const Mat2& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
            p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

Mat2 operator*(double s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
Mat2 operator+(const Mat2& p, const Mat2& q) { return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d}; }
Mat2 operator-(const Mat2& p, const Mat2& q) { return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d}; }

double det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 inverse(const Mat2& m) {
    const double dt = det(m);
    if (dt == 0.0 || !std::isfinite(dt)) {
        throw Error(Errc::SingularMatrix, "matrix has no inverse");
    }
    return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

Vec2 apply(const Mat2& m, Vec2 x) { return {m.a * x.x1 + m.b * x.x2, m.c * x.x1 + m.d * x.x2}; }

double norm_inf(const Mat2& m) {
    return std::max(std::abs(m.a) + std::abs(m.b), std::abs(m.c) + std::abs(m.d));
}

double max_abs(const Mat2& m) {
    return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

double singular_tolerance(const Mat2& m) {
    const double n = norm_inf(m);
    return 1e-12 * std::max(1.0, n * n);
}

double discriminant_scale(const Mat2& m) {
    const double tr = m.trace();
    return std::max({1.0, tr * tr, std::abs(det(m))});
}

void require_invertible(const Mat2& m) {
    if (!m.is_finite()) {
        throw Error(Errc::InvalidArgument, "matrix entries must be finite");
    }
    if (!(std::abs(det(m)) > singular_tolerance(m))) {
        throw Error(Errc::SingularMatrix, "singular matrix: |det| below tolerance");
    }
}

Discriminants discriminants(const Mat2& m) {
    const double tr = m.a + m.d;
    const double diff = m.a - m.d;
    const double ad = m.a * m.d;
    const double bc = m.b * m.c;
    return {
        tr * tr - 4.0 * (ad - bc),
        diff * diff + 4.0 * bc,
        std::max({tr * tr, diff * diff, 4.0 * std::abs(ad), 4.0 * std::abs(bc)}),
    };
}

double signed_angle(Vec2 x, Vec2 y) {
    if (norm(x) == 0.0 || norm(y) == 0.0) {
        throw Error(Errc::ZeroVector, "angle undefined for a zero vector");
    }
    // atan2 returns (-pi, pi]; a negative zero cross product maps to -pi, so fold it.
    const double angle = std::atan2(cross(x, y), dot(x, y));
    return angle == -std::numbers::pi ? std::numbers::pi : angle;
}

namespace {

Vec2 canonical_direction(Vec2 v) {
    const double n = norm(v);
    Vec2 u{v.x1 / n, v.x2 / n};
    if (u.x1 < 0.0 || (u.x1 == 0.0 && u.x2 < 0.0)) {
        u = -1.0 * u;
    }
    return u;
}

Vec2 eigenvector(const Mat2& m, double lambda) {
    // Either row of (A - lambda I) annihilates the eigenvector; use the better scaled one.
    const Vec2 from_row0{m.b, lambda - m.a};
    const Vec2 from_row1{lambda - m.d, m.c};
    return canonical_direction(norm(from_row0) >= norm(from_row1) ? from_row0 : from_row1);
}

SymmetricEigen eigen_impl(const Mat2& s, std::optional<double> known_det) {
    const double scale = std::max(1.0, max_abs(s));
    if (!(std::abs(s.b - s.c) <= 8.0 * std::numeric_limits<double>::epsilon() * scale)) {
        throw Error(Errc::NotSymmetric, "matrix is not symmetric");
    }
    const double p = s.a;
    const double q = 0.5 * (s.b + s.c);
    const double r = s.d;

    if (q == 0.0) {
        if (p <= r) {
            return {p, r, {1.0, 0.0}, {0.0, 1.0}};
        }
        return {r, p, {0.0, 1.0}, {-1.0, 0.0}};
    }

    const double mean = 0.5 * (p + r);
    const double radius = std::hypot(0.5 * (p - r), q);
    double lambda = mean - radius;
    double mu = mean + radius;
    if (known_det) {
        // Recover the smaller-magnitude eigenvalue from the product.
        if (mean >= 0.0) {
            lambda = *known_det / mu;
        } else {
            mu = *known_det / lambda;
        }
    }

    // Direction of the eigenvector belonging to mu.
    const double phi = 0.5 * std::atan2(2.0 * q, p - r);
    const Vec2 e1 = canonical_direction({-std::sin(phi), std::cos(phi)});
    const Vec2 e2{-e1.x2, e1.x1};
    return {lambda, mu, e1, e2};
}

}  // namespace

SpectrumClass classify(const Mat2& m) {
    require_invertible(m);
    const double disc = discriminants(m).from_trace_det;
    const double tolerance = kDiscriminantTolerance * discriminant_scale(m);
    const double tr = m.trace();

    if (disc < -tolerance) {
        return ComplexPair{0.5 * tr, 0.5 * std::sqrt(-disc)};
    }
    if (disc <= tolerance) {
        throw Error(Errc::DegenerateSpectrum, "degenerate spectrum: repeated eigenvalue");
    }

    const double root = std::sqrt(disc);
    const double large = 0.5 * (tr >= 0.0 ? tr + root : tr - root);
    const double small = det(m) / large;
    const double lambda1 = std::min(large, small);
    const double lambda2 = std::max(large, small);

    const Vec2 u1 = eigenvector(m, lambda1);
    const Vec2 u2 = eigenvector(m, lambda2);
    const double beta = std::atan2(std::abs(cross(u1, u2)), std::abs(dot(u1, u2)));
    return RealDistinct{lambda1, lambda2, u1, u2, beta};
}

SymmetricEigen eigen_symmetric(const Mat2& s) { return eigen_impl(s, std::nullopt); }

SymmetricEigen eigen_symmetric(const Mat2& s, double known_det) { return eigen_impl(s, known_det); }

}  // namespace planeop

#pragma once

#include <variant>

#include "planeop/error.hpp"

namespace planeop {

struct Vec2 {
    double x1 = 0.0;
    double x2 = 0.0;

    friend constexpr Vec2 operator+(Vec2 p, Vec2 q) { return {p.x1 + q.x1, p.x2 + q.x2}; }
    friend constexpr Vec2 operator-(Vec2 p, Vec2 q) { return {p.x1 - q.x1, p.x2 - q.x2}; }
    friend constexpr Vec2 operator*(double s, Vec2 p) { return {s * p.x1, s * p.x2}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

double dot(Vec2 p, Vec2 q);
double cross(Vec2 p, Vec2 q);
double norm(Vec2 p);

/// Row-major 2x2 real matrix (a b; c d).
struct Mat2 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 diag(double p, double q) { return {p, 0.0, 0.0, q}; }
    static Mat2 rotation(double angle);
    /// Matrix with the given columns.
    static constexpr Mat2 columns(Vec2 first, Vec2 second) {
        return {first.x1, second.x1, first.x2, second.x2};
    }

    constexpr double trace() const { return a + d; }
    constexpr Vec2 col0() const { return {a, c}; }
    constexpr Vec2 col1() const { return {b, d}; }
    constexpr Mat2 transposed() const { return {a, c, b, d}; }
    bool is_finite() const;

    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& p, const Mat2& q);
Mat2 operator*(double s, const Mat2& m);
Mat2 operator+(const Mat2& p, const Mat2& q);
Mat2 operator-(const Mat2& p, const Mat2& q);

double det(const Mat2& m);
Mat2 inverse(const Mat2& m);
Vec2 apply(const Mat2& m, Vec2 x);
/// Largest absolute row sum.
double norm_inf(const Mat2& m);
/// Largest absolute entry; used for residual checks.
double max_abs(const Mat2& m);

/// |det| threshold below which an operator counts as singular.
double singular_tolerance(const Mat2& m);
/// max(1, trace^2, |det|): the scale the discriminant tolerance is relative to.
double discriminant_scale(const Mat2& m);
inline constexpr double kDiscriminantTolerance = 1e-10;

/// Throws SingularMatrix unless |det| exceeds singular_tolerance.
void require_invertible(const Mat2& m);

/// Both algebraic forms of the characteristic discriminant.
struct Discriminants {
    double from_trace_det;  // (a+d)^2 - 4(ad-bc)
    double from_entries;    // (a-d)^2 + 4bc
    double magnitude;       // largest term entering either form
};
Discriminants discriminants(const Mat2& m);

/// Counterclockwise angle from x to y in (-pi, pi].
double signed_angle(Vec2 x, Vec2 y);

struct ComplexPair {
    double re;
    double im;
};

struct RealDistinct {
    double lambda1;
    double lambda2;
    Vec2 u1;
    Vec2 u2;
    double beta;  // acute angle between the eigenlines, (0, pi/2]
};

using SpectrumClass = std::variant<ComplexPair, RealDistinct>;

/// Spectrum class from the discriminant sign. Repeated eigenvalues raise
/// DegenerateSpectrum; eigenvalues of RealDistinct are ascending.
SpectrumClass classify(const Mat2& m);

struct SymmetricEigen {
    double lambda;  // smaller eigenvalue
    double mu;      // larger eigenvalue
    Vec2 e1;
    Vec2 e2;
};

/// Closed-form eigendecomposition of a symmetric matrix. (e1, e2) is a
/// right-handed orthonormal pair with e1 having a non-negative first component.
SymmetricEigen eigen_symmetric(const Mat2& s);

/// As above, with det(s) supplied by the caller. Gram matrices A^T A pass
/// det(A)^2 here so the small eigenvalue keeps full relative accuracy.
SymmetricEigen eigen_symmetric(const Mat2& s, double known_det);

}  // namespace planeop

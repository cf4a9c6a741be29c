#include "planeop/polar.hpp"

#include <algorithm>
#include <cmath>

namespace planeop {

namespace {

Mat2 outer(Vec2 p, Vec2 q) { return {p.x1 * q.x1, p.x1 * q.x2, p.x2 * q.x1, p.x2 * q.x2}; }

Mat2 gram(const Mat2& m) {
    return {m.a * m.a + m.c * m.c, m.a * m.b + m.c * m.d,
            m.a * m.b + m.c * m.d, m.b * m.b + m.d * m.d};
}

void require_rotation_branch(const Mat2& m) {
    require_invertible(m);
    if (det(m) < 0.0) {
        throw Error(Errc::ReflectionCase, "reflection case out of scope: det(A) < 0");
    }
}

constexpr double kUnitTolerance = 1e-12;

}  // namespace

PolarForm polar_decompose(const Mat2& m) {
    require_rotation_branch(m);
    const double dt = det(m);
    const SymmetricEigen eig = eigen_symmetric(gram(m), dt * dt);
    const double s1 = std::sqrt(eig.lambda);
    const double s2 = std::sqrt(eig.mu);

    const Mat2 p1 = outer(eig.e1, eig.e1);
    const Mat2 p2 = outer(eig.e2, eig.e2);
    const Mat2 B = s1 * p1 + s2 * p2;
    const Mat2 B_inv = (1.0 / s1) * p1 + (1.0 / s2) * p2;
    const Mat2 O = m * B_inv;
    return {std::atan2(O.c, O.a), O, B, s1, s2, eig.e1, eig.e2};
}

CosAlphaBound cos_alpha_bound_check(const PolarForm& p) {
    const double bound = 2.0 * std::sqrt(p.sqrt_lambda * p.sqrt_mu) / (p.sqrt_lambda + p.sqrt_mu);
    const double cos_alpha = std::cos(p.alpha);
    // The boundary is symmetric in cos(alpha): a negative trace flips its sign
    // without changing the discriminant.
    const double gap = std::abs(cos_alpha) - bound;
    if (std::abs(gap) <= 1e-10) {
        throw Error(Errc::Indeterminate, "cos(alpha) lies on the spectrum boundary");
    }
    return {gap < 0.0 ? BoundSide::Below : BoundSide::Above, bound, cos_alpha};
}

double operator_norm(const Mat2& m) {
    if (!m.is_finite()) {
        throw Error(Errc::InvalidArgument, "matrix entries must be finite");
    }
    const double dt = det(m);
    const SymmetricEigen eig = eigen_symmetric(gram(m), dt * dt);
    return std::sqrt(std::max(0.0, eig.mu));
}

LengthRatioBounds length_ratio_bounds(const Mat2& m) {
    const PolarForm p = polar_decompose(m);
    return {p.lambda(), p.mu()};
}

IsometricDirections isometric_directions(const Mat2& m) {
    const PolarForm p = polar_decompose(m);
    const double lambda = p.lambda();
    const double mu = p.mu();
    const bool lambda_unit = std::abs(lambda - 1.0) <= kUnitTolerance;
    const bool mu_unit = std::abs(mu - 1.0) <= kUnitTolerance;

    if (lambda_unit && mu_unit) {
        return {IsometryKind::AllDirections, {}};
    }
    if (lambda_unit) {
        return {IsometryKind::Single, {p.e1}};
    }
    if (mu_unit) {
        return {IsometryKind::Single, {p.e2}};
    }
    if (lambda > 1.0 || mu < 1.0) {
        return {};
    }
    // x = cos(psi) e1 + sin(psi) e2 with lambda cos^2 + mu sin^2 = 1.
    const double c = std::sqrt((mu - 1.0) / (mu - lambda));
    const double s = std::sqrt((1.0 - lambda) / (mu - lambda));
    return {IsometryKind::Pair, {c * p.e1 + s * p.e2, c * p.e1 - s * p.e2}};
}

}  // namespace planeop

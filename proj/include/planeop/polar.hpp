#pragma once

#include <vector>

#include "planeop/core.hpp"

namespace planeop {

/// Polar factorization A = O * B with O a rotation and B symmetric positive
/// definite. (e1, e2) diagonalize both A^T A and B.
struct PolarForm {
    double alpha;  // rotation angle of O, (-pi, pi]
    Mat2 O;
    Mat2 B;
    double sqrt_lambda;  // singular value along e1 (the smaller one)
    double sqrt_mu;      // singular value along e2
    Vec2 e1;
    Vec2 e2;

    double lambda() const { return sqrt_lambda * sqrt_lambda; }
    double mu() const { return sqrt_mu * sqrt_mu; }
};

/// Requires det(A) > 0; negative determinants raise ReflectionCase.
PolarForm polar_decompose(const Mat2& m);

enum class BoundSide { Below, Above };

struct CosAlphaBound {
    BoundSide side;
    double bound;      // 2 (lambda mu)^(1/4) / (sqrt(lambda) + sqrt(mu))
    double cos_alpha;
};

/// Places |cos alpha| relative to the spectrum boundary: Below for a complex
/// spectrum, Above for a real one. Within 1e-10 of the bound it is Indeterminate.
CosAlphaBound cos_alpha_bound_check(const PolarForm& p);

/// max(sqrt(lambda), sqrt(mu)); defined for any finite matrix.
double operator_norm(const Mat2& m);

struct LengthRatioBounds {
    double lo;
    double hi;
};

/// Bounds on |A x|^2 / |x|^2.
LengthRatioBounds length_ratio_bounds(const Mat2& m);

enum class IsometryKind { None, Pair, Single, AllDirections };

struct IsometricDirections {
    IsometryKind kind = IsometryKind::None;
    std::vector<Vec2> directions;  // unit vectors, standard coordinates
};

/// Directions along which A preserves length.
IsometricDirections isometric_directions(const Mat2& m);

}  // namespace planeop

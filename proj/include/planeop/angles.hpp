#pragma once

#include "planeop/core.hpp"

namespace planeop {

enum class RangeMode {
    OneDirectional,   // complex spectrum: every vector turns the same way
    Bidirectional,    // positive real spectrum: |gamma| <= gamma_max, both signs occur
    CentralSymmetric, // negative real spectrum: |gamma| in [gamma_min, pi]
    AdjacentCones,    // mixed-sign real spectrum: |gamma| in [0, pi]
};

/// Envelope of the rotation angle gamma(x) = angle(x, A x). OneDirectional
/// and Bidirectional bound the signed angle; the other two bound |gamma|.
struct RotationRange {
    double gamma_min;
    double gamma_max;
    RangeMode mode;

    bool contains(double gamma, double tolerance = 0.0) const;
};

/// Ratio delta = lambda2 / lambda1 > 1 and the acute eigenline angle beta.
struct ProfileParams {
    double delta;
    double beta;

    static ProfileParams make(double delta, double beta);
};

/// cos(gamma) as a function of t = x1 / x2, the coordinate ratio of x in the
/// unit eigenvector basis (u1, u2).
double f_profile(const ProfileParams& p, double t);

struct CriticalPoints {
    double t0;
    double t_plus;
    double t_minus;
};

/// Roots of f'(t): 0 and +-sqrt(delta). f(t_minus) is the global minimum.
CriticalPoints f_critical_points(const ProfileParams& p);

/// Largest rotation angle of an operator with eigenvalues 0 < lambda1 < lambda2
/// whose eigenlines meet at the acute angle beta.
double gamma_max_real(double lambda1, double lambda2, double beta);

/// Largest rotation angle of a positive factor with singular values
/// sqrt(lambda), sqrt(mu): arccos(2 (lambda mu)^(1/4) / (sqrt(lambda) + sqrt(mu))).
double gamma_prime_max(double sqrt_lambda, double sqrt_mu);

RotationRange rotation_range(const Mat2& m);

/// Signed angle from x to A x.
double gamma_of(const Mat2& m, Vec2 x);

}  // namespace planeop

#include "planeop/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace planeop {

namespace {

using cplx = std::complex<double>;

struct CVec2 {
    cplx z1;
    cplx z2;
};

double cnorm(const CVec2& z) { return std::hypot(std::abs(z.z1), std::abs(z.z2)); }

void require_unit_complex(const Mat2& m) {
    const SpectrumClass spectrum = classify(m);
    if (!std::holds_alternative<ComplexPair>(spectrum)) {
        throw Error(Errc::NotComplexSpectrum, "complex spectrum with det=1 required");
    }
    if (std::abs(det(m) - 1.0) > 1e-9) {
        throw Error(Errc::DetNotOne,
                    "complex spectrum with det=1 required (rescale A by 1/sqrt(det))");
    }
}

InvariantBasis basis_from(double theta, Vec2 u, Vec2 v) {
    const Mat2 Q = Mat2::columns(u, v);
    const double scale = std::max(1.0, norm(u) * norm(v));
    if (!(std::abs(det(Q)) > 1e-12 * scale)) {
        throw Error(Errc::SingularBasis, "eigenvector real and imaginary parts are parallel");
    }
    return {u, v, theta, inverse(Q)};
}

}  // namespace

InvariantBasis invariant_basis(const Mat2& m, std::complex<double> rescale) {
    require_unit_complex(m);
    if (rescale == 0.0) {
        throw Error(Errc::InvalidArgument, "eigenvector rescale must be nonzero");
    }
    const double theta = std::acos(std::clamp(0.5 * m.trace(), -1.0, 1.0));
    const cplx w = std::polar(1.0, theta);

    // (A - w I) z = 0; either row gives a null vector, keep the larger one.
    const CVec2 from_row0{m.b, w - m.a};
    const CVec2 from_row1{w - m.d, m.c};
    CVec2 z = cnorm(from_row0) >= cnorm(from_row1) ? from_row0 : from_row1;

    const double len = cnorm(z);
    const cplx pivot = std::abs(z.z1) >= std::abs(z.z2) ? z.z1 : z.z2;
    const cplx phase = std::conj(pivot) / (std::abs(pivot) * len);
    z.z1 *= phase * rescale;
    z.z2 *= phase * rescale;

    // A(u - iv) = exp(i theta)(u - iv) gives A u = cos u + sin v and
    // A v = -sin u + cos v, i.e. rot(theta) in the basis (u, v).
    const Vec2 u{z.z1.real(), z.z2.real()};
    Vec2 v{-z.z1.imag(), -z.z2.imag()};
    InvariantBasis basis = basis_from(theta, u, v);

    const Mat2 conjugated = basis.P * m * Mat2::columns(basis.u, basis.v);
    if (conjugated.c < 0.0) {
        v = -1.0 * v;
        basis = basis_from(theta, u, v);
    }
    return basis;
}

ConicInvariants conic_invariants(const Mat2& P) {
    const double scale = std::max(1.0, max_abs(P) * max_abs(P));
    if (!P.is_finite() || !(std::abs(det(P)) > 1e-12 * scale)) {
        throw Error(Errc::SingularBasis, "change-of-basis matrix is singular");
    }
    const double p = P.a;
    const double q = P.b;
    const double s = P.c;
    const double t = P.d;
    const double cross_term = p * q + s * t;
    const Mat2 Af{p * p + s * s, cross_term, cross_term, q * q + t * t};
    return {Af, Af.trace(), det(Af)};
}

double EllipseReport::form(Vec2 x) const { return dot(x, apply(Af, x)); }

double EllipseReport::eccentricity() const {
    const double ratio = semi_minor / semi_major;
    return std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
}

EllipseReport ellipse_through(const Mat2& m, Vec2 x0, std::complex<double> rescale) {
    if (norm(x0) == 0.0) {
        throw Error(Errc::ZeroVector, "starting point must be nonzero");
    }
    const InvariantBasis basis = invariant_basis(m, rescale);
    const Vec2 local = apply(basis.P, x0);
    const double r2 = dot(local, local);

    const ConicInvariants conic = conic_invariants(basis.P);
    const double det_p = det(basis.P);
    const SymmetricEigen axes = eigen_symmetric(conic.Af, det_p * det_p);

    EllipseReport report;
    report.Af = conic.Af;
    report.S = conic.S;
    report.delta = conic.delta;
    report.Delta = -conic.delta * r2;
    report.lambda_p = axes.lambda;
    report.mu_p = axes.mu;
    report.semi_major = std::sqrt(r2 / axes.lambda);
    report.semi_minor = std::sqrt(r2 / axes.mu);
    report.r2 = r2;
    report.major_axis = axes.e1;
    report.minor_axis = axes.e2;
    return report;
}

OrbitReport orbit(const Mat2& m, Vec2 x0, std::size_t n) {
    if (n == 0) {
        throw Error(Errc::InvalidArgument, "orbit needs at least one point");
    }
    if (norm(x0) == 0.0) {
        throw Error(Errc::ZeroVector, "starting point must be nonzero");
    }
    const InvariantBasis basis = invariant_basis(m);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    OrbitReport report;
    report.theta_over_2pi = basis.theta / two_pi;
    report.points.reserve(n);
    report.points.push_back(x0);
    for (std::size_t k = 1; k < n; ++k) {
        report.points.push_back(apply(m, report.points.back()));
    }

    const double scale = norm(x0);
    const std::size_t limit = std::min(n, kMaxPeriod);
    for (std::size_t q = 1; q <= limit; ++q) {
        const double turns = std::fmod(static_cast<double>(q) * basis.theta, two_pi);
        if (std::min(turns, two_pi - turns) > kPeriodAngleTolerance) {
            continue;
        }
        const Vec2 back = q < n ? report.points[q] : apply(m, report.points.back());
        if (norm(back - x0) <= 1e-9 * scale) {
            report.period = q;
            break;
        }
    }
    return report;
}

}  // namespace planeop

#include "arclen/geom_core.hpp"

#include "arclen/curve.hpp"
#include "arclen/error.hpp"

#include <cmath>

namespace arclen {

double normalize_angle(double a)
{
    double r = std::remainder(a, kTwoPi); // [-pi, pi]
    if (r <= -kPi) r += kTwoPi;
    return r;
}

CurvatureElement::CurvatureElement(double x, double y, double tau, double k)
    : x(x), y(y), tau(normalize_angle(tau)), k(k)
{
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(tau) || !std::isfinite(k))
        throw Error(ErrorCode::invalid_data, "curvature element must be finite");
}

ChordData::ChordData(double c, double alpha, double beta) : c(c), alpha(alpha), beta(beta)
{
    if (!(c > 0.0) || !std::isfinite(c))
        throw Error(ErrorCode::invalid_data, "half-chord c must be positive");
    if (!std::isfinite(alpha) || !std::isfinite(beta))
        throw Error(ErrorCode::invalid_data, "chord angles must be finite");
}

ChordData reflect_x(const ChordData& d) { return {d.c, -d.alpha, -d.beta}; }
ChordData reflect_y(const ChordData& d) { return {d.c, -d.beta, -d.alpha}; }
ChordData reversed(const ChordData& d) { return {d.c, d.beta, d.alpha}; }

G2ChordData reflect_x(const G2ChordData& d) { return {reflect_x(d.chord), -d.k1, -d.k2}; }
G2ChordData reflect_y(const G2ChordData& d) { return {reflect_y(d.chord), d.k2, d.k1}; }
G2ChordData reversed(const G2ChordData& d) { return {reversed(d.chord), -d.k2, -d.k1}; }

Pose RigidMotion::apply(const Pose& p) const
{
    return {apply(p.point), normalize_angle(p.tau + rotation)};
}

RigidMotion RigidMotion::inverse() const
{
    return {-rotation, -unit(-rotation) * shift};
}

RigidMotion RigidMotion::then(const RigidMotion& next) const
{
    return {rotation + next.rotation, unit(next.rotation) * shift + next.shift};
}

Circle circle_through(Point a, Point b, Point c)
{
    const Point ab = b - a;
    const Point ac = c - a;
    const double d = 2.0 * (ab.real() * ac.imag() - ab.imag() * ac.real());
    const double scale = std::max({std::norm(ab), std::norm(ac), 1e-300});
    if (std::abs(d) <= 1e-14 * scale)
        throw Error(ErrorCode::invalid_data, "circle_through: collinear points");
    const double nb = std::norm(ab);
    const double nc = std::norm(ac);
    const Point u{(ac.imag() * nb - ab.imag() * nc) / d, (ab.real() * nc - ac.real() * nb) / d};
    return {a + u, std::abs(u)};
}

Point curvature_center(Point p, double tau, double k)
{
    return p + Point(0.0, 1.0) * unit(tau) / k;
}

double q_invariant(const G2ChordData& d)
{
    const double c = d.c();
    const double sw = std::sin(d.omega());
    return (d.k1 * c + std::sin(d.alpha())) * (d.k2 * c - std::sin(d.beta())) + sw * sw;
}

namespace {

int sign_eps(double x, double eps)
{
    if (x > eps) return 1;
    if (x < -eps) return -1;
    return 0;
}

} // namespace

bool vogt_sign_ok(const G2ChordData& d, double eps)
{
    return sign_eps(d.c() * (d.k2 - d.k1), eps) == sign_eps(d.alpha() + d.beta(), eps);
}

bool is_short_spiral_data(const G2ChordData& d, double eps)
{
    const double dk = d.c() * (d.k2 - d.k1);
    if (std::abs(dk) <= eps)
        throw Error(ErrorCode::unsupported_query, "short-spiral test needs k1 != k2");
    if (!(q_invariant(d) < -eps)) return false;
    const double a = d.alpha();
    const double b = d.beta();
    if (dk > 0.0)
        return a > -kPi && a <= kPi && b > -kPi && b <= kPi && a + b > eps;
    return a >= -kPi && a < kPi && b >= -kPi && b < kPi && a + b < -eps;
}

ChordFrame chord_frame(const PiecewiseConstCurve& curve)
{
    if (curve.segments.empty())
        throw Error(ErrorCode::zero_chord, "chord_frame: empty curve");
    const Point a = curve.start.point;
    const Pose e = curve.end_raw();
    const Point chord = e.point - a;
    const double c = 0.5 * std::abs(chord);
    if (!(c > 1e-12 * std::max(1.0, curve.length())))
        throw Error(ErrorCode::zero_chord, "chord_frame: endpoints coincide");
    const double phi = std::arg(chord);
    const Point mid = 0.5 * (a + e.point);
    RigidMotion m{-phi, -unit(-phi) * mid};
    G2ChordData d(c, normalize_angle(curve.start.tau - phi), normalize_angle(e.tau - phi),
                  curve.segments.front().k, curve.segments.back().k);
    return {d, m};
}

} // namespace arclen

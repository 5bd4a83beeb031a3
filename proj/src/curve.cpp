#include "arclen/curve.hpp"

#include <algorithm>
#include <cmath>

namespace arclen {

namespace {

// sin(x)/x, exact at 0.
double sinc(double x)
{
    if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

} // namespace

Point z1(double k, double l)
{
    const double h = 0.5 * k * l;
    return l * sinc(h) * unit(h);
}

Point z2(double q1, double l1, double q2, double l2)
{
    return z1(q1, l1) + unit(q1 * l1) * z1(q2, l2);
}

Point z3(double q1, double l1, double q2, double l2, double q3, double l3)
{
    return z1(q1, l1) + unit(q1 * l1) * z1(q2, l2) + unit(q1 * l1 + q2 * l2) * z1(q3, l3);
}

double arc_length_from_chord(double chord, double theta)
{
    return chord / sinc(0.5 * theta);
}

double PiecewiseConstCurve::length() const
{
    double s = 0.0;
    for (const auto& g : segments) s += g.l;
    return s;
}

double PiecewiseConstCurve::turning() const
{
    double t = 0.0;
    for (const auto& g : segments) t += g.k * g.l;
    return t;
}

bool PiecewiseConstCurve::valid() const
{
    if (!std::isfinite(start.point.real()) || !std::isfinite(start.point.imag()) ||
        !std::isfinite(start.tau))
        return false;
    return std::all_of(segments.begin(), segments.end(), [](const Segment& g) {
        return std::isfinite(g.k) && std::isfinite(g.l) && g.l > 0.0;
    });
}

Pose PiecewiseConstCurve::end_raw() const
{
    Pose p = start;
    for (const auto& g : segments) {
        p.point += unit(p.tau) * z1(g.k, g.l);
        p.tau += g.k * g.l;
    }
    return p;
}

Pose PiecewiseConstCurve::end() const
{
    Pose p = end_raw();
    p.tau = normalize_angle(p.tau);
    return p;
}

Point PiecewiseConstCurve::point_at(double s) const
{
    Pose p = start;
    for (const auto& g : segments) {
        if (s <= g.l) return p.point + unit(p.tau) * z1(g.k, std::max(s, 0.0));
        p.point += unit(p.tau) * z1(g.k, g.l);
        p.tau += g.k * g.l;
        s -= g.l;
    }
    return p.point;
}

double PiecewiseConstCurve::curvature_at(double s) const
{
    for (const auto& g : segments) {
        if (s < g.l) return g.k;
        s -= g.l;
    }
    return segments.empty() ? 0.0 : segments.back().k;
}

std::vector<ArcPiece> PiecewiseConstCurve::pieces() const
{
    std::vector<ArcPiece> out;
    out.reserve(segments.size());
    Pose p = start;
    for (const auto& g : segments) {
        out.push_back({p.point, p.tau, g.k, g.l});
        p.point += unit(p.tau) * z1(g.k, g.l);
        p.tau += g.k * g.l;
    }
    return out;
}

std::vector<Point> PiecewiseConstCurve::vertices() const
{
    std::vector<Point> out{start.point};
    for (const auto& a : pieces()) out.push_back(a.end());
    return out;
}

std::vector<Point> PiecewiseConstCurve::sample(double max_step) const
{
    std::vector<Point> out{start.point};
    for (const auto& a : pieces()) {
        const int n = std::max(1, static_cast<int>(std::ceil(a.l / max_step)));
        for (int i = 1; i <= n; ++i) out.push_back(a.point_at(a.l * i / n));
    }
    return out;
}

PiecewiseConstCurve PiecewiseConstCurve::reversed() const
{
    const Pose e = end_raw();
    PiecewiseConstCurve r;
    r.start = {e.point, normalize_angle(e.tau + kPi)};
    r.segments.reserve(segments.size());
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) r.segments.push_back({-it->k, it->l});
    return r;
}

PiecewiseConstCurve PiecewiseConstCurve::transformed(const RigidMotion& m) const
{
    return {m.apply(start), segments};
}

} // namespace arclen

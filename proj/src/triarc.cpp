#include "arclen/triarc.hpp"

#include "arclen/error.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace arclen {

namespace {

// Chords shorter than this (relative to c) are treated as vanished arcs.
constexpr double kVanish = 1e-12;

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Three well-spread points on the curvature circle (or line) of a directed element.
std::array<Point, 3> circle_points(Point p, double tau, double k, double c)
{
    if (std::abs(k * c) < 1e-14) return {p, p + unit(tau) * (2.0 * c), p - unit(tau) * (2.0 * c)};
    const double s = kTwoPi / (3.0 * std::abs(k));
    return {p, p + unit(tau) * z1(k, s), p + unit(tau) * z1(k, 2.0 * s)};
}

// Half-turning of the arc of curvature k leaving `from` along tau and reaching `to`.
double half_turn(Point from, double tau, Point to, double k, double c)
{
    const Point v = (to - from) * unit(-tau);
    if (std::abs(v) <= kVanish * c || std::abs(k * c) < 1e-14) return 0.0;
    double h = std::arg(v);
    if (k > 0.0 && h < 0.0) h = h < -0.5 * kPi ? kPi : 0.0;
    if (k < 0.0 && h > 0.0) h = h > 0.5 * kPi ? -kPi : 0.0;
    return h;
}

Triarc reflect(const Triarc& t, const ChordData& chord)
{
    Triarc r = t;
    r.chord = chord;
    r.start.tau = -t.start.tau;
    for (auto& s : r.segments) s.k = -s.k;
    return r;
}

// Construction for increasing-curvature data; nullopt when the end tangent check fails.
std::optional<Triarc> build(const G2ChordData& d, double t, Branch branch, double eps)
{
    const double c = d.c();
    const MobiusMap m = mobius_concentric(d, branch, eps);
    const ConcentricImage img = concentric_image(d, m);
    const Point O = img.center;
    const Point A(-c, 0.0), B(c, 0.0);
    const Point Aw = m.apply(A), Bw = m.apply(B);
    const Point tan_a = m.derivative(A) * unit(d.alpha());
    const double sigma = cross(Aw - O, tan_a) > 0.0 ? 1.0 : -1.0;
    const double phi_a = std::arg(Aw - O);
    const double phi_b = std::arg(Bw - O);
    double delta = std::fmod(sigma * (phi_b - kPi - phi_a), kTwoPi);
    if (delta < 0.0) delta += kTwoPi;
    const double phi_m = phi_a + sigma * t * delta;

    const Point M = t <= 0.0 ? A : m.inverse(O + img.r1 * unit(phi_m));
    const Point N = t >= 1.0 ? B : m.inverse(O + img.r2 * unit(phi_m + kPi));

    const double th1 = 2.0 * half_turn(A, d.alpha(), M, d.k1, c);
    const double l1 = arc_length_from_chord(std::abs(M - A), th1);
    const double tau_m = d.alpha() + th1;
    const Point mn = (N - M) * unit(-tau_m);
    const double th2 = std::abs(N - M) <= kVanish * c ? 0.0 : 2.0 * std::arg(mn);
    const double l2 = arc_length_from_chord(std::abs(N - M), th2);
    const double k_mid = l2 > 0.0 ? th2 / l2 : 0.5 * (d.k1 + d.k2);
    const double tau_n = tau_m + th2;
    const double th3 = 2.0 * half_turn(N, tau_n, B, d.k2, c);
    const double l3 = arc_length_from_chord(std::abs(B - N), th3);

    const double end_tau = tau_n + th3;
    if (std::abs(unit(end_tau) - unit(d.beta())) > 1e-7) return std::nullopt;

    Triarc tr;
    tr.start = {A, d.alpha()};
    tr.segments = {Segment{d.k1, l1}, Segment{k_mid, l2}, Segment{d.k2, l3}};
    tr.chord = d.chord;
    tr.t = t;
    tr.branch = branch;
    return tr;
}

} // namespace

MobiusMap mobius_concentric(const G2ChordData& d, Branch branch, double eps)
{
    const double Q = q_invariant(d);
    if (!(Q < -eps)) throw Error(ErrorCode::invalid_data, "concentric map needs Q < 0");
    const double c = d.c();
    const double sw = std::sin(d.omega());
    if (std::abs(sw) <= eps) throw Error(ErrorCode::degenerate_lens, "concentric map needs sin(omega) != 0");
    const double p1 = -sw / (d.k1 * c + std::sin(d.alpha()));
    const double p2 = (d.k2 * c - std::sin(d.beta())) / sw;
    const double sgn = branch == Branch::plus ? 1.0 : -1.0;
    const double root = std::sqrt(1.0 - Q) + sgn * std::sqrt(-Q);
    const double kappa = root * root;
    const double r0 = std::sqrt(kappa / (p1 * p2));
    const double lambda0 = kPi - d.gamma() + std::atan((kappa - 1.0) / (kappa + 1.0) / std::tan(d.omega()));
    const Point e = r0 * unit(lambda0);
    MobiusMap m;
    m.z0 = (e - 1.0) / (e + 1.0);
    m.branch = branch;
    m.kappa = kappa;
    m.c = c;
    if (!(std::abs(std::abs(m.z0) - 1.0) > 1e-15))
        throw Error(ErrorCode::numerical, "concentric map is degenerate");
    return m;
}

ConcentricImage concentric_image(const G2ChordData& d, const MobiusMap& m)
{
    const double c = d.c();
    auto image = [&](Point p, double tau, double k) {
        const auto pts = circle_points(p, tau, k, c);
        return circle_through(m.apply(pts[0]), m.apply(pts[1]), m.apply(pts[2]));
    };
    const Circle c1 = image(Point(-c, 0.0), d.alpha(), d.k1);
    const Circle c2 = image(Point(c, 0.0), d.beta(), d.k2);
    return {0.5 * (c1.center + c2.center), c1.radius, c2.radius, std::abs(c1.center - c2.center)};
}

bool Triarc::convex() const
{
    const bool nonneg = std::all_of(segments.begin(), segments.end(), [](const Segment& s) { return s.k >= 0.0; });
    const bool nonpos = std::all_of(segments.begin(), segments.end(), [](const Segment& s) { return s.k <= 0.0; });
    return nonneg || nonpos;
}

bool Triarc::monotone() const
{
    const double a = segments[0].k, b = segments[1].k, c = segments[2].k;
    return (a < b && b < c) || (a > b && b > c);
}

Triarc inscribed_triarc(const G2ChordData& d, double t, std::optional<Branch> branch, double eps)
{
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::invalid_data, "triarc parameter t must lie in [0, 1]");
    const bool reflected = d.k1 > d.k2;
    const G2ChordData n = reflected ? reflect_x(d) : d;
    if (!is_short_spiral_data(n, eps))
        throw Error(ErrorCode::invalid_data, "triarc needs short-spiral G2 data");
    std::vector<Branch> order;
    if (branch) order = {*branch};
    else order = {Branch::plus, Branch::minus};
    for (Branch b : order) {
        if (auto tr = build(n, t, b, eps)) return reflected ? reflect(*tr, d.chord) : *tr;
    }
    throw Error(ErrorCode::numerical, "triarc construction failed the end-tangent check");
}

Triarc solve_length_triarc(const G2ChordData& d, double L0, double eps)
{
    if (!(L0 > 0.0) || !std::isfinite(L0)) throw Error(ErrorCode::invalid_data, "target length must be positive");
    auto length_at = [&](double t) { return inscribed_triarc(d, t, std::nullopt, eps).length(); };
    const double s0 = length_at(0.0);
    const double s1 = length_at(1.0);
    const double tol = 1e-10 * L0;
    if (L0 < std::min(s0, s1) - tol)
        throw LengthRangeError(LengthBound::below_lower, std::min(s0, s1), L0, "lower bound S(p2)");
    if (L0 > std::max(s0, s1) + tol)
        throw LengthRangeError(LengthBound::above_upper, std::max(s0, s1), L0, "upper bound S(p1)");
    if (std::abs(s0 - L0) <= tol) return inscribed_triarc(d, 0.0, std::nullopt, eps);
    if (std::abs(s1 - L0) <= tol) return inscribed_triarc(d, 1.0, std::nullopt, eps);

    constexpr int kScan = 64;
    double t_prev = 0.0;
    double f_prev = s0 - L0;
    for (int i = 1; i <= kScan; ++i) {
        const double t = static_cast<double>(i) / kScan;
        const double f = (i == kScan ? s1 : length_at(t)) - L0;
        if (f == 0.0) return inscribed_triarc(d, t, std::nullopt, eps);
        if ((f < 0.0) != (f_prev < 0.0)) {
            std::uintmax_t iters = 200;
            auto g = [&](double x) { return length_at(x) - L0; };
            auto tol_x = [](double a, double b) { return std::abs(b - a) <= 1e-15; };
            const auto r = boost::math::tools::bisect(g, t_prev, t, tol_x, iters);
            const Triarc ta = inscribed_triarc(d, r.first, std::nullopt, eps);
            const Triarc tb = inscribed_triarc(d, r.second, std::nullopt, eps);
            return std::abs(ta.length() - L0) <= std::abs(tb.length() - L0) ? ta : tb;
        }
        t_prev = t;
        f_prev = f;
    }
    throw Error(ErrorCode::no_root, "no bracketed triarc length on the scan grid");
}

} // namespace arclen

#include "arclen/approx_solver.hpp"

#include "arclen/error.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace arclen {

namespace {

constexpr double kEqualAngles = 1e-8;

struct XTolerance {
    bool operator()(double a, double b) const
    {
        return std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
    }
};

// Root of S(p) = L on [lo, hi]; S monotone there and f(lo), f(hi) bracket zero.
double find_p(const ChordData& d, double L, double lo, double hi, RootMethod method)
{
    auto f = [&](double p) { return length_residual(d, L, p); };
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    std::uintmax_t iters = 400;
    std::pair<double, double> r;
    if (method == RootMethod::bisection)
        r = boost::math::tools::bisect(f, lo, hi, XTolerance{}, iters);
    else
        r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, XTolerance{}, iters);
    const double a = r.first;
    const double b = r.second;
    return std::abs(f(a)) <= std::abs(f(b)) ? a : b;
}

ApproxResult finish(const ChordData& d, double L, double p, bool flagged)
{
    ApproxResult out;
    out.p0 = p;
    out.biarc = make_biarc({d, p});
    const auto fc = family_curvatures({d, p});
    out.q1 = fc.a / d.c;
    out.q2 = fc.b / d.c;
    out.ill_conditioned = flagged;
    out.residual = biarc_length({d, p}).S - L;
    return out;
}

void check_length_finite(double L)
{
    if (!(L > 0.0) || !std::isfinite(L))
        throw Error(ErrorCode::invalid_data, "target length must be positive");
}

} // namespace

double length_tolerance(double c, double L)
{
    return std::max(1e-12 * c, 1e-10 * L);
}

double length_residual(const ChordData& d, double L, double p)
{
    return biarc_length({d, p}).S - L;
}

ApproxResult solve_length_biarc(const G2ChordData& d, double L, RootMethod method, double eps)
{
    check_length_finite(L);
    const G2ChordData n = d.k1 > d.k2 ? reflect_x(d) : d;
    if (n.k1 * n.k2 < 0.0 && std::abs(n.k1 * n.c()) > eps && std::abs(n.k2 * n.c()) > eps)
        throw Error(ErrorCode::non_convex, "curvature changes sign: spiral is not convex");
    const Bilens bl = bilens_from_g2(d, eps);
    const ChordData& ch = d.chord;
    const double tol = length_tolerance(ch.c, L);
    const double s1 = biarc_length({ch, bl.p1}).S;
    const double s2 = biarc_length({ch, bl.p2}).S;
    const double lo = std::min(s1, s2);
    const double hi = std::max(s1, s2);
    if (L < lo - tol) throw LengthRangeError(LengthBound::below_lower, lo, L, "lower bound");
    if (L > hi + tol) throw LengthRangeError(LengthBound::above_upper, hi, L, "upper bound");

    ApproxResult out;
    if (std::abs(ch.alpha - ch.beta) < kEqualAngles) {
        out = finish(ch, L, std::clamp(1.0, bl.p1, bl.p2), true);
    } else if (bl.p1 == bl.p2) {
        out = finish(ch, L, bl.p1, false);
    } else if (std::abs(s1 - L) <= tol || std::abs(s2 - L) <= tol) {
        out = finish(ch, L, std::abs(s1 - L) <= std::abs(s2 - L) ? bl.p1 : bl.p2, false);
    } else {
        out = finish(ch, L, find_p(ch, L, bl.p1, bl.p2, method), false);
    }
    out.width_bound = bilens_width(bl);
    return out;
}

ApproxResult solve_length_biarc(const ChordData& d, double L, RootMethod method, double eps)
{
    check_length_finite(L);
    const double tol = length_tolerance(d.c, L);
    if (length_monotonicity(d, eps) == Monotonicity::constant) {
        ApproxResult out = finish(d, L, 1.0, true);
        if (std::abs(out.residual) > tol)
            throw LengthRangeError(out.residual > 0.0 ? LengthBound::below_lower : LengthBound::above_upper,
                                   L + out.residual, L, "constant family length");
        return out;
    }
    const auto th = convexity_threshold(d, eps);
    if (!(th.p_bar > 0.0) || !std::isfinite(th.p_bar))
        throw Error(ErrorCode::non_convex, "no convex biarc for these angles");
    const double s_bar = biarc_length({d, th.p_bar}).S;
    if (L > s_bar + tol) throw LengthRangeError(LengthBound::above_upper, s_bar, L, "convexity limit S(p_bar)");
    if (std::abs(L - s_bar) <= tol) return finish(d, L, th.p_bar, false);

    // S decreasing on [p_bar, inf) or increasing on (0, p_bar]; grow the open end.
    const bool first = th.straight == StraightArc::first;
    const double s_open = first ? biarc_length_at_infinity(d).S : biarc_length_at_zero(d).S;
    if (L <= s_open + tol) throw LengthRangeError(LengthBound::below_lower, s_open, L, "angle-only lower bound");
    double cap = th.p_bar;
    for (int i = 0; i < 2000; ++i) {
        cap = first ? cap * 4.0 : cap / 4.0;
        if (length_residual(d, L, cap) < 0.0) break;
        if (!std::isfinite(cap) || cap == 0.0)
            throw Error(ErrorCode::no_root, "could not bracket the length-matching biarc");
    }
    const double lo = first ? th.p_bar : cap;
    const double hi = first ? cap : th.p_bar;
    return finish(d, L, find_p(d, L, lo, hi, method), false);
}

} // namespace arclen

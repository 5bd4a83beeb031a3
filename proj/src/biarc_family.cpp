#include "arclen/biarc_family.hpp"

#include "arclen/error.hpp"

#include <cmath>

namespace arclen {

namespace {

void check_p(const BiarcParams& bp)
{
    if (bp.p == 0.0 || !std::isfinite(bp.p))
        throw Error(ErrorCode::invalid_data, "biarc parameter p must be finite and nonzero");
    if (bp.p < 0.0 && !bp.long_biarc)
        throw Error(ErrorCode::invalid_data, "p < 0 requires the long-biarc flag");
}

// Below this |normalized curvature| the chord form is used for subarc length.
constexpr double kChordFormSwitch = 1e-3;

double subarc_length(double c, double theta, double kn, Point from, Point to)
{
    if (std::abs(kn) < kChordFormSwitch) return arc_length_from_chord(std::abs(to - from), theta);
    return c * theta / kn;
}

} // namespace

Point Biarc::join() const
{
    return start.point + unit(start.tau) * z1(segments[0].k, segments[0].l);
}

FamilyCurvatures family_curvatures(const BiarcParams& bp)
{
    check_p(bp);
    const double sw = std::sin(bp.chord.omega());
    return {-std::sin(bp.chord.alpha) - sw / bp.p, std::sin(bp.chord.beta) + bp.p * sw};
}

double join_tangent(const BiarcParams& bp)
{
    check_p(bp);
    const double p = bp.p;
    return -bp.chord.omega() + 2.0 * std::atan((1.0 - p) / (1.0 + p) * std::tan(0.5 * bp.chord.gamma()));
}

double join_tangent_product_form(const BiarcParams& bp)
{
    check_p(bp);
    const double p = bp.p;
    const double ha = 0.5 * bp.chord.alpha;
    const double hb = 0.5 * bp.chord.beta;
    return -2.0 * std::atan((p * std::sin(ha) + std::sin(hb)) / (p * std::cos(ha) + std::cos(hb)));
}

SubarcTurnings subarc_turnings(const BiarcParams& bp)
{
    const double tj = join_tangent(bp);
    return {tj - bp.chord.alpha, bp.chord.beta - tj};
}

Point join_point(const ChordData& d, double p)
{
    const double g = d.gamma();
    const Point num(p * p - 1.0, 2.0 * p * std::sin(g));
    return d.c * num / (p * p + 2.0 * p * std::cos(g) + 1.0);
}

BiarcLength biarc_length(const BiarcParams& bp)
{
    const auto [a, b] = family_curvatures(bp);
    const auto [t1, t2] = subarc_turnings(bp);
    const double c = bp.chord.c;
    const Point A(-c, 0.0), B(c, 0.0);
    const Point J = join_point(bp.chord, bp.p);
    const double s1 = subarc_length(c, t1, a, A, J);
    const double s2 = subarc_length(c, t2, b, J, B);
    return {s1 + s2, s1, s2};
}

BiarcLength biarc_length_at_zero(const ChordData& d)
{
    const double s = arc_length_from_chord(2.0 * d.c, 2.0 * d.beta);
    return {s, 0.0, s};
}

BiarcLength biarc_length_at_infinity(const ChordData& d)
{
    const double s = arc_length_from_chord(2.0 * d.c, 2.0 * d.alpha);
    return {s, s, 0.0};
}

ArcPiece lens_arc_at_zero(const ChordData& d)
{
    return {Point(-d.c, 0.0), -d.beta, std::sin(d.beta) / d.c, biarc_length_at_zero(d).S};
}

ArcPiece lens_arc_at_infinity(const ChordData& d)
{
    return {Point(-d.c, 0.0), d.alpha, -std::sin(d.alpha) / d.c, biarc_length_at_infinity(d).S};
}

Biarc make_biarc(const BiarcParams& bp)
{
    const auto [a, b] = family_curvatures(bp);
    const auto len = biarc_length(bp);
    const double c = bp.chord.c;
    Biarc out;
    out.start = {Point(-c, 0.0), bp.chord.alpha};
    out.segments = {Segment{a / c, len.S1}, Segment{b / c, len.S2}};
    out.chord = bp.chord;
    out.p = bp.p;
    return out;
}

ConvexityThreshold convexity_threshold(const ChordData& d, double eps)
{
    const double aa = std::abs(d.alpha);
    const double ab = std::abs(d.beta);
    if (std::abs(aa - ab) <= eps)
        throw Error(ErrorCode::degenerate_lens, "convexity threshold needs |alpha| != |beta|");
    const double sw = std::sin(d.omega());
    if (aa < ab) return {-sw / std::sin(d.alpha), StraightArc::first};
    return {-std::sin(d.beta) / sw, StraightArc::second};
}

double straight_limit_length(const ChordData& d, double eps)
{
    const auto th = convexity_threshold(d, eps);
    const double g = d.gamma();
    const double sg = std::sin(g);
    const double sw = std::sin(d.omega());
    if (th.straight == StraightArc::first)
        return 2.0 * d.c / sg * (g * std::sin(d.alpha) / sg - sw);
    return 2.0 * d.c / sg * (sw - g * std::sin(d.beta) / sg);
}

double straight_segment_length(const ChordData& d, double eps)
{
    const auto th = convexity_threshold(d, eps);
    const double r = 2.0 * d.c * std::sin(d.omega()) / std::sin(d.gamma());
    return th.straight == StraightArc::first ? -r : r;
}

Monotonicity length_monotonicity(const ChordData& d, double eps)
{
    const double diff = std::abs(d.alpha) - std::abs(d.beta);
    if (std::abs(d.alpha - d.beta) <= eps || std::abs(d.alpha + d.beta) <= eps)
        return Monotonicity::constant;
    return diff < 0.0 ? Monotonicity::decreasing : Monotonicity::increasing;
}

} // namespace arclen

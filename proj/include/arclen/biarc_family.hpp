#pragma once

#include "arclen/curve.hpp"

#include <array>

namespace arclen {

// Member p of the biarc family on a fixed chord. p < 0 (long biarcs) only when flagged.
struct BiarcParams {
    ChordData chord;
    double p = 1.0;
    bool long_biarc = false;
};

struct FamilyCurvatures {
    double a = 0.0; // first arc, normalized (k * c)
    double b = 0.0; // second arc, normalized
};

struct SubarcTurnings {
    double theta1 = 0.0;
    double theta2 = 0.0;
};

struct BiarcLength {
    double S = 0.0;
    double S1 = 0.0;
    double S2 = 0.0;
};

struct Biarc {
    Pose start;
    std::array<Segment, 2> segments{};
    ChordData chord;
    double p = 1.0;

    PiecewiseConstCurve curve() const { return {start, {segments[0], segments[1]}}; }
    double length() const { return segments[0].l + segments[1].l; }
    Point join() const;
};

FamilyCurvatures family_curvatures(const BiarcParams& bp);

// Tangent slope at the join point (half-angle form).
double join_tangent(const BiarcParams& bp);
// Same value from the product form; agrees with join_tangent modulo 2 pi.
double join_tangent_product_form(const BiarcParams& bp);

SubarcTurnings subarc_turnings(const BiarcParams& bp);
BiarcLength biarc_length(const BiarcParams& bp);

// p -> 0 and p -> infinity limits (the lens arcs).
BiarcLength biarc_length_at_zero(const ChordData& d);
BiarcLength biarc_length_at_infinity(const ChordData& d);
ArcPiece lens_arc_at_zero(const ChordData& d);
ArcPiece lens_arc_at_infinity(const ChordData& d);

// Join point in the chord frame; p = 0 gives A.
Point join_point(const ChordData& d, double p);

// Biarc in the chord frame, starting at (-c, 0) along alpha.
Biarc make_biarc(const BiarcParams& bp);

enum class StraightArc { first, second };

struct ConvexityThreshold {
    double p_bar = 1.0;
    StraightArc straight = StraightArc::first;
};

// Throws degenerate_lens when |alpha| = |beta|.
ConvexityThreshold convexity_threshold(const ChordData& d, double eps = kDefaultEps);
// S(p_bar).
double straight_limit_length(const ChordData& d, double eps = kDefaultEps);
// Length of the straight arc of the convexity-limit biarc (|AJ0| or |J0B|).
double straight_segment_length(const ChordData& d, double eps = kDefaultEps);

enum class Monotonicity { decreasing, increasing, constant };

// Type of S(p) on (0, infinity).
Monotonicity length_monotonicity(const ChordData& d, double eps = kDefaultEps);

} // namespace arclen

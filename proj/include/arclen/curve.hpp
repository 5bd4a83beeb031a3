#pragma once

#include "arclen/geom_core.hpp"

#include <vector>

namespace arclen {

struct Segment {
    double k = 0.0;
    double l = 0.0;
};

// Endpoint of an arc of curvature k and length l, starting at 0 along +x.
Point z1(double k, double l);
Point z2(double q1, double l1, double q2, double l2);
Point z3(double q1, double l1, double q2, double l2, double q3, double l3);

// Arc length from chord length and turning; exact, including theta -> 0.
double arc_length_from_chord(double chord, double theta);

// One circular (or straight) piece anchored in the plane.
struct ArcPiece {
    Point start{0.0, 0.0};
    double tau = 0.0;
    double k = 0.0;
    double l = 0.0;

    Point point_at(double s) const { return start + unit(tau) * z1(k, s); }
    Point end() const { return point_at(l); }
    double end_tau() const { return tau + k * l; }
    double turning() const { return k * l; }
};

// Curvature step function k(s) anchored at a start pose.
class PiecewiseConstCurve {
public:
    Pose start;
    std::vector<Segment> segments;

    PiecewiseConstCurve() = default;
    PiecewiseConstCurve(const Pose& start, std::vector<Segment> segments)
        : start(start), segments(std::move(segments)) {}

    double length() const;
    double turning() const;
    bool valid() const; // all lengths > 0 and finite

    // End pose with raw (unnormalized) tangent angle.
    Pose end_raw() const;
    Pose end() const;

    Point point_at(double s) const;
    double curvature_at(double s) const;

    std::vector<ArcPiece> pieces() const;
    // Segment endpoints including start and end.
    std::vector<Point> vertices() const;
    // Points spaced at most max_step apart along the curve, vertices included.
    std::vector<Point> sample(double max_step) const;

    PiecewiseConstCurve reversed() const;
    PiecewiseConstCurve transformed(const RigidMotion& m) const;
};

} // namespace arclen

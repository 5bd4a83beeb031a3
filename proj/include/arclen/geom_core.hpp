#pragma once

#include <complex>
#include <numbers>

namespace arclen {

using Point = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Default tolerance for predicate boundaries (Q < 0, sign tests).
inline constexpr double kDefaultEps = 1e-9;

// Maps an angle into (-pi, pi].
double normalize_angle(double a);

// Unit vector exp(i*a).
inline Point unit(double a) { return std::polar(1.0, a); }

struct Pose {
    Point point{0.0, 0.0};
    double tau = 0.0;
};

// Point, tangent slope and curvature; k = 0 is a straight element.
struct CurvatureElement {
    double x = 0.0;
    double y = 0.0;
    double tau = 0.0;
    double k = 0.0;

    CurvatureElement() = default;
    CurvatureElement(double x, double y, double tau, double k);

    Point point() const { return {x, y}; }
    Pose pose() const { return {point(), tau}; }
};

// Half-chord c and end tangent angles measured from the chord direction.
struct ChordData {
    double c = 1.0;
    double alpha = 0.0;
    double beta = 0.0;

    ChordData() = default;
    ChordData(double c, double alpha, double beta);

    double gamma() const { return 0.5 * (alpha - beta); }
    double omega() const { return 0.5 * (alpha + beta); }
};

struct G2ChordData {
    ChordData chord;
    double k1 = 0.0;
    double k2 = 0.0;

    G2ChordData() = default;
    G2ChordData(const ChordData& chord, double k1, double k2) : chord(chord), k1(k1), k2(k2) {}
    G2ChordData(double c, double alpha, double beta, double k1, double k2)
        : chord(c, alpha, beta), k1(k1), k2(k2) {}

    double c() const { return chord.c; }
    double alpha() const { return chord.alpha; }
    double beta() const { return chord.beta; }
    double gamma() const { return chord.gamma(); }
    double omega() const { return chord.omega(); }
};

// Symmetries of chord data.
ChordData reflect_x(const ChordData& d);
ChordData reflect_y(const ChordData& d);
ChordData reversed(const ChordData& d);
G2ChordData reflect_x(const G2ChordData& d);
G2ChordData reflect_y(const G2ChordData& d);
G2ChordData reversed(const G2ChordData& d);

// z -> exp(i*rotation) * z + shift.
struct RigidMotion {
    double rotation = 0.0;
    Point shift{0.0, 0.0};

    Point apply(Point z) const { return unit(rotation) * z + shift; }
    Pose apply(const Pose& p) const;
    RigidMotion inverse() const;
    RigidMotion then(const RigidMotion& next) const;
};

struct Circle {
    Point center{0.0, 0.0};
    double radius = 0.0;
};

// Circle through three points; throws invalid_data when they are collinear.
Circle circle_through(Point a, Point b, Point c);

// Center of the curvature circle of a directed element (k != 0).
Point curvature_center(Point p, double tau, double k);

double q_invariant(const G2ChordData& d);

bool vogt_sign_ok(const G2ChordData& d, double eps = kDefaultEps);

// Existence test for a short non-biarc spiral; throws unsupported_query when k1 = k2.
bool is_short_spiral_data(const G2ChordData& d, double eps = kDefaultEps);

class PiecewiseConstCurve;

struct ChordFrame {
    G2ChordData data;
    RigidMotion to_frame; // world -> chord frame
};

// Frame carrying the curve endpoints to (-c, 0), (c, 0); throws zero_chord for closed curves.
ChordFrame chord_frame(const PiecewiseConstCurve& curve);

} // namespace arclen

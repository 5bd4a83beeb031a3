#pragma once

#include "arclen/bilens.hpp"

#include <array>
#include <optional>

namespace arclen {

enum class Branch { plus, minus };

// w = (z0 + u) / (1 + z0 u) with u = z / c; fixes the chord endpoints u = -1, u = 1.
struct MobiusMap {
    Point z0{0.0, 0.0};
    Branch branch = Branch::plus;
    double kappa = 1.0;
    double c = 1.0;

    Point apply(Point z) const
    {
        const Point u = z / c;
        return (z0 + u) / (1.0 + z0 * u);
    }
    Point inverse(Point w) const { return c * (w - z0) / (1.0 - z0 * w); }
    // dw/dz.
    Point derivative(Point z) const
    {
        const Point d = 1.0 + z0 * z / c;
        return (1.0 - z0 * z0) / (d * d * c);
    }
};

// Map sending both boundary curvature circles (chord frame) to concentric circles.
// Throws invalid_data when Q >= 0.
MobiusMap mobius_concentric(const G2ChordData& d, Branch branch = Branch::plus, double eps = kDefaultEps);

struct ConcentricImage {
    Point center{0.0, 0.0};
    double r1 = 0.0; // image of the k1 circle
    double r2 = 0.0; // image of the k2 circle
    double center_gap = 0.0;
};

// Images of the boundary circles, each refitted through three mapped points.
ConcentricImage concentric_image(const G2ChordData& d, const MobiusMap& m);

struct Triarc {
    Pose start;
    std::array<Segment, 3> segments{};
    ChordData chord;
    double t = 0.0;
    Branch branch = Branch::plus;

    PiecewiseConstCurve curve() const { return {start, {segments[0], segments[1], segments[2]}}; }
    double length() const { return segments[0].l + segments[1].l + segments[2].l; }
    bool convex() const;
    bool monotone() const;
};

// Spiral triarc inscribed into the bilens; t = 0 gives B(p2), t = 1 gives B(p1).
Triarc inscribed_triarc(const G2ChordData& d, double t, std::optional<Branch> branch = std::nullopt,
                        double eps = kDefaultEps);

// Triarc with the given G2 data and length L0 in [S(p2), S(p1)].
Triarc solve_length_triarc(const G2ChordData& d, double L0, double eps = kDefaultEps);

} // namespace arclen

#pragma once

#include "arclen/biarc_family.hpp"

#include <vector>

namespace arclen {

struct Bilens {
    G2ChordData data;
    double p1 = 0.0;
    double p2 = 0.0;
    // Decreasing-curvature input was handled through the x-axis mirror.
    bool reflected = false;

    ChordData chord() const { return data.chord; }
    Biarc first_boundary() const { return make_biarc({data.chord, p1}); }
    Biarc second_boundary() const { return make_biarc({data.chord, p2}); }
    // Closed chain: B(p1) from A to B, then B(p2) back to A.
    std::vector<ArcPiece> outline() const;
};

// Throws invalid_data unless is_short_spiral_data(d); degenerate_lens when sin(omega) = 0.
Bilens bilens_from_g2(const G2ChordData& d, double eps = kDefaultEps);

// Maximal inscribed-circle diameter (convex spirals).
double bilens_width(const Bilens& bl);

// Closed region test; points within rel_tol * c of the boundary count as inside.
bool encloses_point(const Bilens& bl, Point pt, double rel_tol = 1e-9);

} // namespace arclen

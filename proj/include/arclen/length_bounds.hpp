#pragma once

#include "arclen/geom_core.hpp"

#include <optional>

namespace arclen {

// Symmetry bringing data to increasing non-negative curvature with |alpha| < |beta|.
enum class Symmetry { identity, reflect_x, reflect_y, reversal };

const char* to_string(Symmetry s);

struct NormalizedBounds {
    double tau1 = 0.0;
    double tau2 = 0.0;
    double a1 = 0.0;
    double b2 = 0.0;
    double b1 = 0.0;
    double a2 = 0.0;
    double omega = 0.0;
    double gamma = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
};

struct NormalizedCase {
    NormalizedBounds bounds;
    Symmetry symmetry = Symmetry::identity;
    G2ChordData data; // normalized data (alpha = tau1, beta = tau2, k = a1/c, b2/c)
};

// Throws non_convex when the data match none of the four convex sign cases.
NormalizedCase normalize_case(const G2ChordData& d, double eps = kDefaultEps);

struct LengthBounds {
    double lower = 0.0;
    double upper = 0.0;
    double outer_lower = 0.0; // strict
    double outer_upper = 0.0;
    double c = 1.0;
    bool upper_is_outer = false; // a1 = 0 substitution applied

    // Same bounds as length / (2c).
    double lower_ratio() const { return lower / (2.0 * c); }
    double upper_ratio() const { return upper / (2.0 * c); }
    double outer_lower_ratio() const { return outer_lower / (2.0 * c); }
    double outer_upper_ratio() const { return outer_upper / (2.0 * c); }
};

LengthBounds length_bounds(const G2ChordData& d, double eps = kDefaultEps);
// Angle-only bounds: lower, upper equal the outer ones.
LengthBounds length_bounds(const ChordData& d, double eps = kDefaultEps);

} // namespace arclen

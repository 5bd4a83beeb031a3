#pragma once

#include "arclen/bilens.hpp"

#include <optional>

namespace arclen {

enum class RootMethod { bisection, secant };

struct ApproxResult {
    Biarc biarc;            // chord frame
    double p0 = 1.0;
    double q1 = 0.0;        // first arc curvature a(p0)/c
    double q2 = 0.0;        // second arc curvature b(p0)/c
    std::optional<double> width_bound; // bilens width, G2 input only
    bool ill_conditioned = false;      // |alpha - beta| tiny: S(p) nearly constant
    double residual = 0.0;             // S(p0) - L
};

// Acceptance tolerance on |S(p0) - L|.
double length_tolerance(double c, double L);

// S(p) - L.
double length_residual(const ChordData& d, double L, double p);

// Unique length-preserving biarc for convex spiral data. Throws length_out_of_range
// (LengthRangeError), invalid_data for Q >= 0 non-biarc data, non_convex for inflected data.
ApproxResult solve_length_biarc(const G2ChordData& d, double L, RootMethod method = RootMethod::secant,
                                double eps = kDefaultEps);
ApproxResult solve_length_biarc(const ChordData& d, double L, RootMethod method = RootMethod::secant,
                                double eps = kDefaultEps);

} // namespace arclen

#include "arclen/bilens.hpp"

#include "arclen/error.hpp"
#include "arclen/region.hpp"

#include <cmath>

namespace arclen {

std::vector<ArcPiece> Bilens::outline() const
{
    std::vector<ArcPiece> out = first_boundary().curve().pieces();
    const auto back = second_boundary().curve().reversed().pieces();
    out.insert(out.end(), back.begin(), back.end());
    return out;
}

Bilens bilens_from_g2(const G2ChordData& d, double eps)
{
    const bool reflected = d.k1 > d.k2;
    const G2ChordData n = reflected ? reflect_x(d) : d;
    // |Q| <= eps is biarc data: the bilens collapses to one biarc.
    const bool collapsed = std::abs(q_invariant(n)) <= eps;
    if (collapsed ? !(n.alpha() + n.beta() > eps) : !is_short_spiral_data(n, eps))
        throw Error(ErrorCode::invalid_data, "bilens needs short-spiral G2 data");
    const double c = n.c();
    const double sw = std::sin(n.omega());
    if (std::abs(sw) <= eps)
        throw Error(ErrorCode::degenerate_lens, "bilens undefined for sin(omega) = 0");
    Bilens bl;
    bl.data = d;
    bl.reflected = reflected;
    // p1, p2 are invariant under the mirror, so they serve the original data directly.
    bl.p1 = -sw / (n.k1 * c + std::sin(n.alpha()));
    bl.p2 = (n.k2 * c - std::sin(n.beta())) / sw;
    if (collapsed) bl.p1 = bl.p2 = 0.5 * (bl.p1 + bl.p2);
    if (!(bl.p1 > 0.0 && bl.p1 <= bl.p2))
        throw Error(ErrorCode::invalid_data, "bilens parameters out of order");
    return bl;
}

double bilens_width(const Bilens& bl)
{
    const ChordData& d = bl.data.chord;
    const double p1 = bl.p1;
    const double p2 = bl.p2;
    const double a2 = family_curvatures({d, p2}).a;
    const double b1 = family_curvatures({d, p1}).b;
    const double P = 1.0 + 2.0 * p2 * std::cos(d.gamma()) + p1 * p2;
    const double num = 4.0 * d.c * (p2 - p1) * std::abs(std::sin(d.omega()));
    return num / (P + std::sqrt(P * P + 4.0 * p2 * (p2 - p1) * a2 * b1));
}

bool encloses_point(const Bilens& bl, Point pt, double rel_tol)
{
    const auto loop = bl.outline();
    if (distance_to_chain(loop, pt) <= rel_tol * bl.data.c()) return true;
    return winding_number(loop, pt) != 0;
}

} // namespace arclen

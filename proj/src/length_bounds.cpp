#include "arclen/length_bounds.hpp"

#include "arclen/biarc_family.hpp"
#include "arclen/error.hpp"

#include <algorithm>
#include <cmath>

namespace arclen {

namespace {

// arccot(num / den) in (0, pi).
double arccot(double num, double den)
{
    return den >= 0.0 ? std::atan2(den, num) : std::atan2(-den, -num);
}

// Below this |a2| the lower bound is read from the biarc length directly.
constexpr double kSmallA2 = 1e-6;

double outer_lower_ratio(double tau1) { return tau1 / std::sin(tau1); }

double outer_upper_ratio(double tau1, double omega, double gamma)
{
    const double sg = std::sin(gamma);
    return (gamma * std::sin(tau1) - std::sin(omega) * sg) / (sg * sg);
}

} // namespace

const char* to_string(Symmetry s)
{
    switch (s) {
    case Symmetry::identity: return "identity";
    case Symmetry::reflect_x: return "reflect_x";
    case Symmetry::reflect_y: return "reflect_y";
    case Symmetry::reversal: return "reversal";
    }
    return "unknown";
}

NormalizedCase normalize_case(const G2ChordData& d, double eps)
{
    const double a = d.alpha(), b = d.beta();
    const double k1 = d.k1 * d.c(), k2 = d.k2 * d.c();
    const double ma = std::abs(a), mb = std::abs(b);
    Symmetry sym;
    if (ma < mb - eps && k1 >= -eps && k2 > k1 + eps && b > -a + eps && -a > eps)
        sym = Symmetry::identity;
    else if (ma < mb - eps && k1 <= eps && k2 < k1 - eps && b < -a - eps && -a < -eps)
        sym = Symmetry::reflect_x;
    else if (ma > mb + eps && k2 <= eps && k1 < k2 - eps && a > -b + eps && -b > eps)
        sym = Symmetry::reversal;
    else if (ma > mb + eps && k2 >= -eps && k1 > k2 + eps && a < -b - eps && -b < -eps)
        sym = Symmetry::reflect_y;
    else
        throw Error(ErrorCode::non_convex, "data match none of the convex spiral cases");

    NormalizedBounds n;
    n.tau1 = -std::min(ma, mb);
    n.tau2 = std::max(ma, mb);
    n.a1 = std::min(std::abs(k1), std::abs(k2));
    n.b2 = std::max(std::abs(k1), std::abs(k2));
    n.omega = 0.5 * (n.tau1 + n.tau2);
    n.gamma = 0.5 * (n.tau1 - n.tau2);
    const double sg2 = std::sin(n.gamma) * std::sin(n.gamma);
    n.b1 = (n.a1 * std::sin(n.tau2) - sg2) / (n.a1 + std::sin(n.tau1));
    n.a2 = -(n.b2 * std::sin(n.tau1) + sg2) / (n.b2 - std::sin(n.tau2));
    const double sw = std::sin(n.omega), cw = std::cos(n.omega), sg = std::sin(n.gamma);
    n.xi1 = arccot(n.a1 * cw + sg, -n.a1 * sw);
    n.xi2 = arccot(n.b2 * cw + sg, n.b2 * sw);

    NormalizedCase out;
    out.bounds = n;
    out.symmetry = sym;
    out.data = G2ChordData(d.c(), n.tau1, n.tau2, n.a1 / d.c(), n.b2 / d.c());
    return out;
}

LengthBounds length_bounds(const G2ChordData& d, double eps)
{
    const NormalizedCase nc = normalize_case(d, eps);
    const NormalizedBounds& n = nc.bounds;
    const double c = d.c();
    LengthBounds r;
    r.c = c;
    r.outer_lower = 2.0 * c * outer_lower_ratio(n.tau1);
    r.outer_upper = 2.0 * c * outer_upper_ratio(n.tau1, n.omega, n.gamma);
    if (std::abs(n.a2) < kSmallA2) {
        const ChordData ch = nc.data.chord;
        const double p2 = (n.b2 - std::sin(n.tau2)) / std::sin(n.omega);
        r.lower = biarc_length({ch, p2}).S;
    } else {
        r.lower = 2.0 * c * (-(n.gamma + n.xi2) / n.a2 + n.xi2 / n.b2);
    }
    if (n.a1 <= eps) {
        r.upper = r.outer_upper;
        r.upper_is_outer = true;
    } else {
        r.upper = 2.0 * c * (n.xi1 / n.a1 - (n.gamma + n.xi1) / n.b1);
    }
    return r;
}

LengthBounds length_bounds(const ChordData& d, double eps)
{
    const double a = d.alpha, b = d.beta;
    if (!(a * b < 0.0) || std::abs(std::abs(a) - std::abs(b)) <= eps)
        throw Error(ErrorCode::non_convex, "angles admit no convex spiral");
    const double tau1 = -std::min(std::abs(a), std::abs(b));
    const double tau2 = std::max(std::abs(a), std::abs(b));
    LengthBounds r;
    r.c = d.c;
    r.outer_lower = 2.0 * d.c * outer_lower_ratio(tau1);
    r.outer_upper = 2.0 * d.c * outer_upper_ratio(tau1, 0.5 * (tau1 + tau2), 0.5 * (tau1 - tau2));
    r.lower = r.outer_lower;
    r.upper = r.outer_upper;
    r.upper_is_outer = true;
    return r;
}

} // namespace arclen

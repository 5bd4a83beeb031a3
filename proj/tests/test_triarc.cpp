#include "support.hpp"

#include "arclen/approx_solver.hpp"
#include "arclen/triarc.hpp"

#include <gtest/gtest.h>

using namespace arclen;
using namespace arclen::test;

namespace {

const G2ChordData kWorked(1.0, -0.3, 0.9, 0.05, 1.4);

Circle mapped_circle(const MobiusMap& m, Point center, double radius)
{
    return circle_through(m.apply(center + radius * unit(0.3)), m.apply(center + radius * unit(2.2)),
                          m.apply(center + radius * unit(4.4)));
}

// Max distance of further mapped points from the circle refitted through three of them.
double circle_residual(const MobiusMap& m, Point center, double radius)
{
    const Circle c = mapped_circle(m, center, radius);
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
        const Point w = m.apply(center + radius * unit(kTwoPi * (i + 0.17) / 32.0));
        worst = std::max(worst, std::abs(std::abs(w - c.center) - c.radius));
    }
    return worst;
}

void expect_same_curve(const PiecewiseConstCurve& a, const PiecewiseConstCurve& b, double tol)
{
    EXPECT_NEAR(a.length(), b.length(), tol);
    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0})
        EXPECT_NEAR(std::abs(a.point_at(f * a.length()) - b.point_at(f * b.length())), 0.0, tol);
}

} // namespace

TEST(MobiusConcentric, WorkedInstanceConcentric)
{
    for (Branch br : {Branch::plus, Branch::minus}) {
        const MobiusMap m = mobius_concentric(kWorked, br);
        const ConcentricImage img = concentric_image(kWorked, m);
        EXPECT_LT(img.center_gap, 1e-9);
        EXPECT_NEAR(std::abs(m.apply(Point(-1.0, 0.0)) - Point(-1.0, 0.0)), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(m.apply(Point(1.0, 0.0)) - Point(1.0, 0.0)), 0.0, 1e-14);
    }
}

TEST(MobiusConcentric, PreservesQ)
{
    const ConcentricImage img = concentric_image(kWorked, mobius_concentric(kWorked));
    const double q = circle_pair_q(img.center, img.r1, img.center, img.r2);
    EXPECT_NEAR(q, q_invariant(kWorked), 1e-10);
}

TEST(MobiusConcentric, TangentCirclesLimit)
{
    const ChordData ch(1.0, -0.3, 0.9);
    const FamilyCurvatures fc = family_curvatures({ch, 1.3});
    double prev = 0.0;
    for (double e : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const MobiusMap m = mobius_concentric(G2ChordData(ch, fc.a - e, fc.b + e));
        const double dev = std::abs(m.kappa - 1.0);
        if (prev > 0.0) EXPECT_LT(dev, prev);
        prev = dev;
    }
    EXPECT_LT(prev, 0.05);
}

TEST(MobiusConcentric, RejectsTangentOrCrossingCircles)
{
    EXPECT_THROW(mobius_concentric(G2ChordData(1.0, 0.5, 0.5, 0.0, 2.0)), Error);
}

TEST(MobiusMap, InverseAndDerivative)
{
    const MobiusMap m = mobius_concentric(kWorked);
    Rng rng(kSeed);
    for (int i = 0; i < 100; ++i) {
        const Point z(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
        EXPECT_NEAR(std::abs(m.inverse(m.apply(z)) - z), 0.0, 1e-11);
        const double h = 1e-6;
        const Point fd = (m.apply(z + h) - m.apply(z - h)) / (2.0 * h);
        EXPECT_NEAR(std::abs(fd - m.derivative(z)), 0.0, 1e-6 * std::abs(m.derivative(z)));
    }
}

TEST(MobiusMap, CirclesStayCircles)
{
    const MobiusMap m = mobius_concentric(kWorked);
    const Bilens bl = bilens_from_g2(kWorked);
    std::vector<ArcPiece> arcs = bl.first_boundary().curve().pieces();
    for (const ArcPiece& a : bl.second_boundary().curve().pieces()) arcs.push_back(a);
    for (const ArcPiece& a : arcs) {
        if (std::abs(a.k) < 1e-9) continue;
        EXPECT_LT(circle_residual(m, curvature_center(a.start, a.tau, a.k), 1.0 / std::abs(a.k)), 1e-10);
    }
}

TEST(InscribedTriarc, EndsOfTheFamilyAreBoundaryBiarcs)
{
    const Bilens bl = bilens_from_g2(kWorked);
    expect_same_curve(inscribed_triarc(kWorked, 0.0).curve(), bl.second_boundary().curve(), 1e-9);
    expect_same_curve(inscribed_triarc(kWorked, 1.0).curve(), bl.first_boundary().curve(), 1e-9);
}

TEST(InscribedTriarc, MidParameterIsAnInscribedSpiral)
{
    const Triarc t = inscribed_triarc(kWorked, 0.5);
    const Pose e = t.curve().end_raw();
    EXPECT_NEAR(std::abs(t.curve().start.point - Point(-1.0, 0.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(e.point - Point(1.0, 0.0)), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(unit(e.tau) - unit(kWorked.beta())), 0.0, 1e-9);
    EXPECT_NEAR(t.segments[0].k, kWorked.k1, 1e-9);
    EXPECT_NEAR(t.segments[2].k, kWorked.k2, 1e-9);
    EXPECT_TRUE(t.monotone());
    const Bilens bl = bilens_from_g2(kWorked);
    for (const Point& q : t.curve().sample(0.01)) EXPECT_TRUE(encloses_point(bl, q));
}

TEST(InscribedTriarc, RandomDataEndPosesAndMonotoneCurvature)
{
    Rng rng(kSeed + 1);
    for (int i = 0; i < 200; ++i) {
        const ModelSpiral m = random_spiral_any(rng, i);
        const G2ChordData& d = m.data();
        const Triarc t = inscribed_triarc(d, uniform(rng, 0.02, 0.98));
        const Pose e = t.curve().end_raw();
        EXPECT_NEAR(std::abs(e.point - Point(d.c(), 0.0)), 0.0, 1e-9 * d.c());
        EXPECT_NEAR(std::abs(unit(e.tau) - unit(d.beta())), 0.0, 1e-9);
        EXPECT_TRUE(t.monotone());
        // Consecutive arcs meet with a common tangent.
        const auto pieces = t.curve().pieces();
        for (std::size_t j = 1; j < pieces.size(); ++j) {
            EXPECT_NEAR(std::abs(pieces[j].start - pieces[j - 1].end()), 0.0, 1e-9 * d.c());
            EXPECT_NEAR(std::abs(unit(pieces[j].tau) - unit(pieces[j - 1].end_tau())), 0.0, 1e-9);
        }
    }
}

TEST(InscribedTriarc, LengthIsContinuousInT)
{
    const Bilens bl = bilens_from_g2(kWorked);
    const int n = 1000;
    std::vector<double> L(n + 1);
    for (int i = 0; i <= n; ++i) L[static_cast<std::size_t>(i)] = inscribed_triarc(kWorked, static_cast<double>(i) / n).length();
    double slope = 0.0;
    for (int i = 1; i <= n; ++i) slope = std::max(slope, std::abs(L[i] - L[i - 1]) * n);
    for (int i = 1; i <= n; ++i) EXPECT_LE(std::abs(L[i] - L[i - 1]), 10.0 * slope / n);
    EXPECT_NEAR(L.front(), biarc_length({kWorked.chord, bl.p2}).S, 1e-9);
    EXPECT_NEAR(L.back(), biarc_length({kWorked.chord, bl.p1}).S, 1e-9);
}

TEST(SolveLengthTriarc, BoundaryLengthGivesBoundaryBiarc)
{
    const Bilens bl = bilens_from_g2(kWorked);
    const Triarc t = solve_length_triarc(kWorked, biarc_length({kWorked.chord, bl.p1}).S);
    expect_same_curve(t.curve(), bl.first_boundary().curve(), 1e-8);
}

TEST(SolveLengthTriarc, MatchesBiarcSolutionLength)
{
    Rng rng(kSeed + 2);
    for (int i = 0; i < 50; ++i) {
        const ModelSpiral m = random_spiral_any(rng, i);
        const double L0 = solve_length_biarc(m.data(), m.length).biarc.length();
        const Triarc t = solve_length_triarc(m.data(), L0);
        double polyline = 0.0;
        const auto pts = t.curve().sample(1e-4);
        for (std::size_t j = 1; j < pts.size(); ++j) polyline += std::abs(pts[j] - pts[j - 1]);
        EXPECT_NEAR(t.length(), L0, 1e-9 * L0);
        EXPECT_NEAR(polyline, L0, 1e-6 * L0);
        EXPECT_GT(std::min({t.segments[0].l, t.segments[1].l, t.segments[2].l}), 0.0);
    }
}

TEST(SolveLengthTriarc, RandomTargets)
{
    Rng rng(kSeed + 3);
    for (int i = 0; i < 100; ++i) {
        const G2ChordData d = random_spiral_any(rng, i).data();
        const Bilens bl = bilens_from_g2(d);
        const double lo = biarc_length({bl.chord(), bl.p2}).S, hi = biarc_length({bl.chord(), bl.p1}).S;
        const double L0 = lo + (hi - lo) * uniform(rng, 0.0, 1.0);
        EXPECT_NEAR(solve_length_triarc(d, L0).length(), L0, 1e-9 * L0);
    }
}

TEST(SolveLengthTriarc, RejectsOutOfRange)
{
    const Bilens bl = bilens_from_g2(kWorked);
    EXPECT_THROW(solve_length_triarc(kWorked, 1.01 * biarc_length({kWorked.chord, bl.p1}).S), LengthRangeError);
}

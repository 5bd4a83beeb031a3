#include "support.hpp"

#include "arclen/biarc_family.hpp"

#include <gtest/gtest.h>

using namespace arclen;
using namespace arclen::test;

namespace {

const G2ChordData kWorked(1.0, -0.3, 0.9, 0.1, 1.3);

} // namespace

TEST(BilensFromG2, CollapsesOnBiarcData)
{
    const ChordData ch(1.0, -0.3, 0.9);
    const double p = 1.7;
    const FamilyCurvatures fc = family_curvatures({ch, p});
    const Bilens bl = bilens_from_g2(G2ChordData(ch, fc.a / ch.c, fc.b / ch.c));
    EXPECT_NEAR(bl.p1, p, 1e-12);
    EXPECT_NEAR(bl.p2, p, 1e-12);
    EXPECT_NEAR(bilens_width(bl), 0.0, 1e-12);
}

TEST(BilensFromG2, WorkedInstanceRoundTrip)
{
    const Bilens bl = bilens_from_g2(kWorked);
    EXPECT_LT(0.0, bl.p1);
    EXPECT_LT(bl.p1, bl.p2);
    EXPECT_NEAR(family_curvatures({kWorked.chord, bl.p1}).a, kWorked.k1 * kWorked.c(), 1e-12);
    EXPECT_NEAR(family_curvatures({kWorked.chord, bl.p2}).b, kWorked.k2 * kWorked.c(), 1e-12);
}

TEST(BilensFromG2, TendsToTheLens)
{
    const Bilens wide = bilens_from_g2(G2ChordData(1.0, -0.3, 0.9, -1e6, 1e6));
    EXPECT_LT(wide.p1, 1e-5);
    EXPECT_GT(wide.p2, 1e5);
}

TEST(BilensFromG2, RejectsNonShortData)
{
    EXPECT_THROW(bilens_from_g2(G2ChordData(1.0, 0.5, 0.5, 0.0, 2.0)), Error);
}

TEST(BilensWidth, WorkedInstanceAgainstSearch)
{
    const Bilens bl = bilens_from_g2(kWorked);
    EXPECT_NEAR(bilens_width(bl), inscribed_diameter_search(bl), 1e-4 * kWorked.c());
}

TEST(BilensWidth, ScalesWithChord)
{
    const G2ChordData big(2.0 * kWorked.c(), kWorked.alpha(), kWorked.beta(), kWorked.k1 / 2.0, kWorked.k2 / 2.0);
    EXPECT_NEAR(bilens_width(bilens_from_g2(big)), 2.0 * bilens_width(bilens_from_g2(kWorked)), 1e-14);
}

TEST(BilensWidth, InvariantUnderSymmetries)
{
    Rng rng(kSeed);
    for (int i = 0; i < 100; ++i) {
        const G2ChordData d = random_spiral_any(rng, i).data();
        const double w = bilens_width(bilens_from_g2(d));
        EXPECT_NEAR(bilens_width(bilens_from_g2(reflect_x(d))), w, 1e-12);
        EXPECT_NEAR(bilens_width(bilens_from_g2(reflect_y(d))), w, 1e-12);
        EXPECT_NEAR(bilens_width(bilens_from_g2(reversed(d))), w, 1e-12);
    }
}

TEST(EnclosesPoint, FamilyMembersInsideChordOutside)
{
    const Bilens bl = bilens_from_g2(kWorked);
    for (double f : {0.1, 0.5, 0.9}) {
        const double p = bl.p1 + f * (bl.p2 - bl.p1);
        EXPECT_TRUE(encloses_point(bl, join_point(kWorked.chord, p)));
        for (const Point& q : make_biarc({kWorked.chord, p}).curve().sample(0.01)) EXPECT_TRUE(encloses_point(bl, q));
    }
    EXPECT_FALSE(encloses_point(bl, Point(0.0, -0.5)));
    EXPECT_FALSE(encloses_point(bl, Point(5.0, 0.0)));
}

TEST(EnclosesPoint, DenseSamplesOfASpiral)
{
    Rng rng(kSeed + 1);
    const ModelSpiral m = random_spiral(rng);
    const Bilens bl = bilens_from_g2(m.data());
    const auto pts = m.in_frame().sample(m.length / 1000.0);
    ASSERT_GE(pts.size(), 1000u);
    for (const Point& q : pts) EXPECT_TRUE(encloses_point(bl, q));
}

TEST(EnclosesPoint, ModelSpiralsStayInsideTheirBilens)
{
    Rng rng(kSeed + 2);
    for (int i = 0; i < 300; ++i) {
        const ModelSpiral m = random_spiral_any(rng, i);
        const Bilens bl = bilens_from_g2(m.data());
        for (const Point& v : m.in_frame().vertices()) EXPECT_TRUE(encloses_point(bl, v));
    }
}

TEST(Outline, ClosedLoopThroughChordEnds)
{
    const Bilens bl = bilens_from_g2(kWorked);
    const auto loop = bl.outline();
    ASSERT_FALSE(loop.empty());
    EXPECT_NEAR(std::abs(loop.front().start - Point(-1.0, 0.0)), 0.0, 1e-12);
    for (std::size_t i = 1; i < loop.size(); ++i) EXPECT_NEAR(std::abs(loop[i].start - loop[i - 1].end()), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(loop.back().end() - loop.front().start), 0.0, 1e-9);
}

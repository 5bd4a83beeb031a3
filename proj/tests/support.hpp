#pragma once

// Shared generators and independent oracles for the test suites.

#include "arclen/bilens.hpp"
#include "arclen/curve.hpp"
#include "arclen/error.hpp"
#include "arclen/region.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace arclen::test {

inline constexpr std::uint64_t kSeed = 42;

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

struct ModelSpiral {
    PiecewiseConstCurve curve;
    ChordFrame frame;
    double length = 0.0;

    const G2ChordData& data() const { return frame.data; }
    // The curve expressed in its chord frame.
    PiecewiseConstCurve in_frame() const { return curve.transformed(frame.to_frame); }
};

// Three-level monotone convex spiral with turning at most 1.9 pi. `sign` picks the curvature
// sign, `decreasing` the direction of monotonicity. Draws are repeated until the chord-frame
// data pass the short-spiral test.
inline ModelSpiral random_spiral(Rng& rng, double sign = 1.0, bool decreasing = false)
{
    for (;;) {
        std::vector<double> k{uniform(rng, 0.0, 2.0), uniform(rng, 0.0, 2.0), uniform(rng, 0.0, 2.0)};
        std::sort(k.begin(), k.end());
        if (k[2] - k[0] < 0.05) continue;
        std::vector<Segment> segs;
        double turning = 0.0;
        for (int i = 0; i < 3; ++i) {
            segs.push_back({k[static_cast<std::size_t>(i)], uniform(rng, 0.2, 1.5)});
            turning += segs.back().k * segs.back().l;
        }
        const double cap = uniform(rng, 0.1, 1.9) * kPi;
        if (turning > cap)
            for (auto& s : segs) s.l *= cap / turning;
        if (decreasing) std::reverse(segs.begin(), segs.end());
        for (auto& s : segs) s.k *= sign;
        const Pose start{Point(uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)), uniform(rng, -kPi, kPi)};
        ModelSpiral m;
        m.curve = PiecewiseConstCurve(start, segs);
        try {
            m.frame = chord_frame(m.curve);
            if (!is_short_spiral_data(m.frame.data)) continue;
        } catch (const Error&) {
            continue;
        }
        m.length = m.curve.length();
        return m;
    }
}

// Both curvature signs and both monotonicity directions, cycled by index.
inline ModelSpiral random_spiral_any(Rng& rng, int i)
{
    return random_spiral(rng, (i & 1) ? -1.0 : 1.0, (i & 2) != 0);
}

// Oriented-circle inversive invariant from centers and signed radii.
inline double circle_pair_q(Point c1, double r1, Point c2, double r2)
{
    const double d2 = std::norm(c1 - c2);
    return (d2 - (r1 - r2) * (r1 - r2)) / (4.0 * r1 * r2);
}

// Hausdorff distance between two arc chains, sampled on each side with exact point-to-arc distances.
inline double sampled_hausdorff(const PiecewiseConstCurve& a, const PiecewiseConstCurve& b, double step)
{
    const auto pa = a.pieces(), pb = b.pieces();
    double h = 0.0;
    for (const Point& p : a.sample(step)) h = std::max(h, distance_to_chain(pb, p));
    for (const Point& p : b.sample(step)) h = std::max(h, distance_to_chain(pa, p));
    return h;
}

// Largest circle inside the bilens: grid search over the bounding box followed by a shrinking
// pattern search. The pattern has one direction per degree so the search follows the
// medial-axis ridge instead of stalling on it.
inline double inscribed_diameter_search(const Bilens& bl)
{
    const auto outline = bl.outline();
    BoundingBox box = BoundingBox::none();
    for (const auto& piece : outline)
        for (int i = 0; i <= 64; ++i) box.add(piece.point_at(piece.l * i / 64.0));
    auto value = [&](Point p) {
        if (winding_number(outline, p) == 0) return -1.0;
        return distance_to_chain(outline, p);
    };
    const int n = 160, seeds = 4, dirs = 360;
    std::vector<std::pair<double, Point>> best;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const Point p(box.x0 + (box.x1 - box.x0) * i / n, box.y0 + (box.y1 - box.y0) * j / n);
            best.emplace_back(value(p), p);
        }
    std::partial_sort(best.begin(), best.begin() + seeds, best.end(),
                      [](const auto& x, const auto& y) { return x.first > y.first; });
    double top = 0.0;
    for (int s = 0; s < seeds; ++s) {
        auto [v, p] = best[static_cast<std::size_t>(s)];
        double h = std::max(box.x1 - box.x0, box.y1 - box.y0) / n;
        while (h > 1e-12) {
            bool improved = false;
            for (int k = 0; k < dirs; ++k) {
                const Point d = h * unit(kTwoPi * k / dirs);
                const double w = value(p + d);
                if (w > v) {
                    v = w;
                    p += d;
                    improved = true;
                }
            }
            if (!improved) h *= 0.5;
        }
        top = std::max(top, v);
    }
    return 2.0 * top;
}

} // namespace arclen::test

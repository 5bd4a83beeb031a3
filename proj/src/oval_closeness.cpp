#include "arclen/oval_closeness.hpp"

#include "arclen/error.hpp"
#include "arclen/parallel.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace arclen {

namespace {

bool between(double x, double a, double b, double tol)
{
    return x >= std::min(a, b) - tol && x <= std::max(a, b) + tol;
}

// Turning range of a one-vertex arc with levels a -> b -> c over (la, lb).
AngleRange arc_turning_range(double a, double b, double c, double la, double lb)
{
    const double extreme = b * (la + lb);
    const double flat = a * la + c * lb;
    return {std::min(extreme, flat), std::max(extreme, flat)};
}

AngleRange range_of(const OvalSpec& s)
{
    const AngleRange first = arc_turning_range(s.k[0], s.k[1], s.k[2], s.L[0], s.L[1]);
    const AngleRange rest = arc_turning_range(s.k[2], s.k[3], s.k[0], s.L[2], s.L[3]);
    return {std::max(first.lo, kTwoPi - rest.hi), std::min(first.hi, kTwoPi - rest.lo)};
}

// {v : lo <= c0 + c1 v <= hi} intersected into r.
void restrict(AngleRange& r, double c0, double c1, double lo, double hi)
{
    if (c1 == 0.0) {
        if (c0 < lo || c0 > hi) r = {1.0, 0.0};
        return;
    }
    double a = (lo - c0) / c1, b = (hi - c0) / c1;
    if (a > b) std::swap(a, b);
    r.lo = std::max(r.lo, a);
    r.hi = std::min(r.hi, b);
}

std::optional<AngleRange> closed_range(const AngleRange& r)
{
    if (!(r.lo <= r.hi)) return std::nullopt;
    return r;
}

std::vector<Point> sample_range(const AngleRange& r, int n, const std::function<Point(double)>& f)
{
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out.push_back(f(i == n ? r.hi : r.lo + (r.hi - r.lo) * i / n));
    return out;
}

struct RowBuffer {
    std::vector<Point> points;
    std::vector<double> params;
};

bool is_infeasible(const Error& e) { return e.code() == ErrorCode::infeasible; }

BoundingBox joint_box(const EndpointSet& a, const EndpointSet& b)
{
    BoundingBox box = BoundingBox::none();
    for (const EndpointSet* s : {&a, &b}) {
        for (const Point& p : s->points) box.add(p);
        for (const auto& c : s->bounds)
            for (const Point& p : c.points) box.add(p);
    }
    return box;
}

Raster occupancy(const EndpointSet& s, const BoundingBox& box, const OvalOptions& opt)
{
    Raster r(box, opt.raster_cells);
    r.mark_all(s.points);
    for (const auto& c : s.bounds) r.mark_all(c.points);
    r.close(opt.closing);
    r.fill_holes();
    return r;
}

SetOverlap overlap_of(const OvalSpec& spec, double mu, const OvalOptions& opt)
{
    SetOverlap out;
    try {
        const EndpointSet a = one_vertex_endpoint_set(one_vertex_model(spec, mu, SetOrientation::first), opt);
        const EndpointSet b = one_vertex_endpoint_set(one_vertex_model(spec, mu, SetOrientation::second), opt);
        return set_overlap(a, b, opt);
    } catch (const Error& e) {
        if (!is_infeasible(e)) throw;
    }
    return out;
}

std::array<double, 5> free_params(const EndpointSet& s, std::size_t i)
{
    const double* p = s.params_of(i);
    return {p[0], p[1], p[2], p[3], p[5]};
}

// Min-norm Gauss-Newton on the 10 free parameters driving the two endpoints together.
bool close_gap(const OneVertexModel& m1, const OneVertexModel& m2, std::array<double, 5>& x1,
               std::array<double, 5>& x2, double scale)
{
    auto residual = [&](const std::array<double, 5>& a, const std::array<double, 5>& b) {
        return m1.endpoint(a) - m2.endpoint(b);
    };
    Point r = residual(x1, x2);
    for (int iter = 0; iter < 60 && std::abs(r) > 1e-13 * scale; ++iter) {
        double J[2][10];
        for (int j = 0; j < 10; ++j) {
            auto a = x1;
            auto b = x2;
            double& v = j < 5 ? a[static_cast<std::size_t>(j)] : b[static_cast<std::size_t>(j - 5)];
            const double h = 1e-7 * std::max(1.0, std::abs(v));
            const double v0 = v;
            v = v0 + h;
            const Point fp = residual(a, b);
            v = v0 - h;
            const Point fm = residual(a, b);
            const Point d = (fp - fm) / (2.0 * h);
            J[0][j] = d.real();
            J[1][j] = d.imag();
        }
        double G[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
        for (int j = 0; j < 10; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) G[a][b] += J[a][j] * J[b][j];
        const double det = G[0][0] * G[1][1] - G[0][1] * G[1][0];
        if (!(std::abs(det) > 0.0)) return false;
        const double y0 = (G[1][1] * r.real() - G[0][1] * r.imag()) / det;
        const double y1 = (-G[1][0] * r.real() + G[0][0] * r.imag()) / det;
        double step[10];
        for (int j = 0; j < 10; ++j) step[j] = -(J[0][j] * y0 + J[1][j] * y1);

        bool moved = false;
        for (double t = 1.0; t > 1e-10; t *= 0.5) {
            auto a = x1;
            auto b = x2;
            for (int j = 0; j < 5; ++j) {
                a[static_cast<std::size_t>(j)] += t * step[j];
                b[static_cast<std::size_t>(j)] += t * step[j + 5];
            }
            if (!m1.feasible(a) || !m2.feasible(b)) continue;
            const Point rn = residual(a, b);
            if (std::abs(rn) < std::abs(r)) {
                x1 = a;
                x2 = b;
                r = rn;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return std::abs(r) <= 1e-10 * scale;
}

} // namespace

// ---- spec ----

void OvalSpec::validate() const
{
    for (int i = 0; i < 4; ++i) {
        if (!std::isfinite(k[i]) || !std::isfinite(L[i]))
            throw Error(ErrorCode::invalid_data, "oval spec values must be finite");
        if (!(L[i] > 0.0)) throw Error(ErrorCode::invalid_data, "oval lengths must be positive");
        if (k[i] < 0.0) throw Error(ErrorCode::invalid_data, "oval curvatures must be non-negative");
    }
    if (!(k[0] < k[1] && k[1] > k[2] && k[2] < k[3] && k[3] > k[0]))
        throw Error(ErrorCode::invalid_data, "oval curvatures must satisfy k1 < k2 > k3 < k4 > k1");
}

OvalSpec OvalSpec::rotated() const
{
    return {{k[1], k[2], k[3], k[0]}, {L[1], L[2], L[3], L[0]}};
}

AngleRange natural_mu_range(const OvalSpec& spec)
{
    spec.validate();
    return range_of(spec);
}

AngleRange natural_nu_range(const OvalSpec& spec)
{
    spec.validate();
    return range_of(spec.rotated());
}

AngleRange natural_symmetric_range(double kappa1, double kappa2)
{
    if (kappa1 + kappa2 <= kPi) return {kTwoPi - 2.0 * kappa2, 2.0 * kappa2};
    return {2.0 * kappa1, kTwoPi - 2.0 * kappa1};
}

// ---- one-vertex model ----

std::optional<double> OneVertexModel::last_level(const std::array<double, 5>& x) const
{
    const double rest = fall - x[4];
    if (!(rest > 0.0)) return std::nullopt;
    return (turning - x[0] * x[2] - x[1] * (rise - x[2]) - x[3] * x[4]) / rest;
}

bool OneVertexModel::feasible(const std::array<double, 5>& x, double tol) const
{
    if (!between(x[0], start_level, peak, tol) || !between(x[1], x[0], peak, tol)) return false;
    if (!(x[2] >= -tol * rise && x[2] <= rise * (1.0 + tol))) return false;
    if (!between(x[3], peak, end_level, tol)) return false;
    if (!(x[4] >= -tol * fall && x[4] < fall)) return false;
    const auto q4 = last_level(x);
    return q4 && between(*q4, x[3], end_level, tol);
}

PiecewiseConstCurve OneVertexModel::curve(const std::array<double, 5>& x) const
{
    const auto q4 = last_level(x);
    if (!q4) throw Error(ErrorCode::invalid_data, "one-vertex parameters leave no last segment");
    const Segment all[4] = {{x[0], x[2]}, {x[1], rise - x[2]}, {x[3], x[4]}, {*q4, fall - x[4]}};
    PiecewiseConstCurve c;
    c.start = start;
    for (const auto& s : all)
        if (s.l > 0.0) c.segments.push_back(s);
    return c;
}

Point OneVertexModel::endpoint(const std::array<double, 5>& x) const
{
    const double q4 = last_level(x).value_or(x[3]);
    const double l1 = std::clamp(x[2], 0.0, rise);
    const double l3 = std::clamp(x[4], 0.0, fall);
    const Point z = z2(x[0], l1, x[1], rise - l1) +
                    unit(x[0] * l1 + x[1] * (rise - l1)) * z2(x[3], l3, q4, fall - l3);
    return start.point + unit(start.tau) * z;
}

std::optional<AngleRange> OneVertexModel::ab_range() const
{
    const double total = rise + fall;
    AngleRange r{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    restrict(r, turning / total, -2.0 * fall / total, std::min(start_level, peak), std::max(start_level, peak));
    restrict(r, turning / total, 2.0 * rise / total, std::min(end_level, peak), std::max(end_level, peak));
    return closed_range(r);
}

Point OneVertexModel::ab_point(double u) const
{
    const double total = rise + fall;
    const double q1 = (turning - 2.0 * u * fall) / total;
    const double q2 = (turning + 2.0 * u * rise) / total;
    return start.point + unit(start.tau) * z2(q1, rise, q2, fall);
}

std::array<double, 3> OneVertexModel::cd_lengths(double v) const
{
    const double a = start_level, b = peak, c = end_level;
    const double den = a + c - 2.0 * b;
    if (den == 0.0) throw Error(ErrorCode::degenerate_lens, "three-level bound is degenerate");
    const double l1 = (turning - b * (rise + fall) + 2.0 * v * (b - c)) / den;
    const double l3 = l1 + 2.0 * v;
    return {l1, rise + fall - l1 - l3, l3};
}

std::optional<AngleRange> OneVertexModel::cd_range() const
{
    const double a = start_level, b = peak, c = end_level;
    const double den = a + c - 2.0 * b;
    if (den == 0.0) return std::nullopt;
    const double c0 = (turning - b * (rise + fall)) / den;
    const double c1 = 2.0 * (b - c) / den;
    AngleRange r{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    restrict(r, c0, c1, 0.0, rise);
    restrict(r, c0, c1 + 2.0, 0.0, fall);
    return closed_range(r);
}

Point OneVertexModel::cd_point(double v) const
{
    const auto l = cd_lengths(v);
    return start.point + unit(start.tau) * z3(start_level, std::max(l[0], 0.0), peak, std::max(l[1], 0.0),
                                               end_level, std::max(l[2], 0.0));
}

OneVertexModel one_vertex_model(const OvalSpec& s, double mu, SetOrientation orientation)
{
    OneVertexModel m;
    if (orientation == SetOrientation::first) {
        m.start_level = s.k[0];
        m.peak = s.k[1];
        m.end_level = s.k[2];
        m.rise = s.L[0];
        m.fall = s.L[1];
        m.turning = mu;
        m.start = {Point(0.0, 0.0), -0.5 * kPi};
    } else {
        m.start_level = -s.k[0];
        m.peak = -s.k[3];
        m.end_level = -s.k[2];
        m.rise = s.L[3];
        m.fall = s.L[2];
        m.turning = mu - kTwoPi;
        m.start = {Point(0.0, 0.0), 0.5 * kPi};
    }
    return m;
}

EndpointSet one_vertex_endpoint_set(const OneVertexModel& m, const OvalOptions& opt)
{
    if (opt.grid < 1 || opt.bound_samples < 2)
        throw Error(ErrorCode::invalid_data, "grid and bound_samples must be positive");
    if (!(m.rise > 0.0) || !(m.fall > 0.0)) throw Error(ErrorCode::invalid_data, "model lengths must be positive");
    const int N = opt.grid;
    auto g = [N](int i) { return static_cast<double>(i) / N; };
    const double a = m.start_level, b = m.peak, c = m.end_level;
    const Point dir = unit(m.start.tau);

    EndpointSet set;
    set.param_names = {"q1", "q2", "l1", "q3", "q4", "l3"};
    std::vector<RowBuffer> rows(static_cast<std::size_t>(N) + 1);
    parallel_for(rows.size(), [&](std::size_t iu) {
        const int i = static_cast<int>(iu);
        RowBuffer& row = rows[iu];
        const double q1 = a + (b - a) * g(i);
        for (int j = i; j <= N; ++j) {
            const double q2 = a + (b - a) * g(j);
            for (int mm = 0; mm <= N; ++mm) {
                const double l1 = m.rise * g(mm);
                const double t12 = q1 * l1 + q2 * (m.rise - l1);
                const Point z12 = z2(q1, l1, q2, m.rise - l1);
                for (int n = 0; n <= N; ++n) {
                    const double q3 = b + (c - b) * g(n);
                    for (int r = 0; r < N; ++r) {
                        const double l3 = m.fall * g(r);
                        const double q4 = (m.turning - t12 - q3 * l3) / (m.fall - l3);
                        if (!between(q4, q3, c, 1e-12)) continue;
                        const Point z = z12 + unit(t12) * z2(q3, l3, q4, m.fall - l3);
                        row.points.push_back(m.start.point + dir * z);
                        row.params.insert(row.params.end(), {q1, q2, l1, q3, q4, l3});
                    }
                }
            }
        }
    });
    for (auto& r : rows) {
        set.points.insert(set.points.end(), r.points.begin(), r.points.end());
        set.params.insert(set.params.end(), r.params.begin(), r.params.end());
    }
    if (set.points.empty()) throw Error(ErrorCode::infeasible, "no one-vertex profile meets the turning constraint");

    if (const auto r = m.ab_range())
        set.bounds.push_back({"AB", sample_range(*r, opt.bound_samples, [&](double u) { return m.ab_point(u); })});
    if (const auto r = m.cd_range())
        set.bounds.push_back({"CD", sample_range(*r, opt.bound_samples, [&](double v) { return m.cd_point(v); })});
    return set;
}

EndpointSet one_vertex_endpoint_set(const OvalSpec& spec, double mu, SetOrientation orientation,
                                    const OvalOptions& opt)
{
    spec.validate();
    return one_vertex_endpoint_set(one_vertex_model(spec, mu, orientation), opt);
}

// ---- overlap and sweep ----

SetOverlap set_overlap(const EndpointSet& a, const EndpointSet& b, const OvalOptions& opt)
{
    SetOverlap out;
    out.points_first = a.points.size();
    out.points_second = b.points.size();
    if (a.points.empty() || b.points.empty()) return out;
    const BoundingBox box = joint_box(a, b);
    const double scale = std::max(box.x1 - box.x0, box.y1 - box.y0);
    const Raster ra = occupancy(a, box, opt);
    const Raster rb = occupancy(b, box, opt);
    out.area = static_cast<double>(ra.overlap_count(rb)) * ra.cell() * ra.cell();
    out.threshold = 1e-6 * scale * scale;
    out.intersects = out.area > out.threshold;
    return out;
}

SetOverlap overlap_at(const OvalSpec& spec, double mu, const OvalOptions& opt)
{
    spec.validate();
    return overlap_of(spec, mu, opt);
}

const char* to_string(Verdict v) { return v == Verdict::intersects ? "intersects" : "never"; }

const char* to_string(SweepParameter p) { return p == SweepParameter::mu ? "mu" : "nu"; }

ClosenessReport closeness_sweep(const OvalSpec& spec, const OvalOptions& opt, SweepParameter parameter)
{
    spec.validate();
    if (!(opt.mu_step > 0.0) || !(opt.contact_resolution > 0.0))
        throw Error(ErrorCode::invalid_data, "mu step and contact resolution must be positive");
    const OvalSpec work = parameter == SweepParameter::mu ? spec : spec.rotated();
    ClosenessReport rep;
    rep.parameter = parameter;
    rep.range = range_of(work);
    if (rep.range.empty()) return rep;

    std::vector<double> mus;
    for (auto k = static_cast<long>(std::floor(rep.range.lo / opt.mu_step)) + 1;; ++k) {
        const double mu = static_cast<double>(k) * opt.mu_step;
        if (!(mu < rep.range.hi)) break;
        if (mu > rep.range.lo) mus.push_back(mu);
    }
    rep.mu_grid.resize(mus.size());
    parallel_for(mus.size(), [&](std::size_t i) {
        const SetOverlap o = overlap_of(work, mus[i], opt);
        rep.mu_grid[i] = {mus[i], o.intersects, o.area};
    });

    auto status = [&](double mu) { return overlap_of(work, mu, opt).intersects; };
    auto bisect = [&](double lo, bool s_lo, double hi) {
        while (hi - lo > opt.contact_resolution) {
            const double mid = 0.5 * (lo + hi);
            if (status(mid) == s_lo) lo = mid;
            else hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    const auto& g = rep.mu_grid;
    // Sets vanish at the range ends, so intersection there counts as absent.
    if (!g.empty() && g.front().intersects) rep.contacts.push_back(bisect(rep.range.lo, false, g.front().mu));
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g[i].intersects != g[i - 1].intersects)
            rep.contacts.push_back(bisect(g[i - 1].mu, g[i - 1].intersects, g[i].mu));
    if (!g.empty() && g.back().intersects) rep.contacts.push_back(bisect(g.back().mu, true, rep.range.hi));

    rep.verdict = std::any_of(g.begin(), g.end(), [](const MuSample& s) { return s.intersects; })
                      ? Verdict::intersects
                      : Verdict::never;
    return rep;
}

std::optional<ClosedOval> extract_closed_oval(const OvalSpec& spec, double mu, const OvalOptions& opt)
{
    spec.validate();
    const OneVertexModel m1 = one_vertex_model(spec, mu, SetOrientation::first);
    const OneVertexModel m2 = one_vertex_model(spec, mu, SetOrientation::second);
    EndpointSet s1, s2;
    try {
        s1 = one_vertex_endpoint_set(m1, opt);
        s2 = one_vertex_endpoint_set(m2, opt);
    } catch (const Error& e) {
        if (!is_infeasible(e)) throw;
        return std::nullopt;
    }
    const BoundingBox box = joint_box(s1, s2);
    const double scale = std::max(box.x1 - box.x0, box.y1 - box.y0);
    const double h = scale / std::max(1, opt.raster_cells);

    // Bucket the second cloud, then collect nearest neighbours of the first.
    auto key = [&](Point p) {
        const auto i = static_cast<std::int64_t>(std::floor((p.real() - box.x0) / h));
        const auto j = static_cast<std::int64_t>(std::floor((p.imag() - box.y0) / h));
        return std::make_pair(i, j);
    };
    auto hash = [](std::int64_t i, std::int64_t j) { return (i << 32) ^ (j & 0xffffffff); };
    std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < s2.points.size(); ++i) {
        const auto [a, b] = key(s2.points[i]);
        buckets[hash(a, b)].push_back(i);
    }
    struct Pair {
        double d;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < s1.points.size(); ++i) {
        const auto [a, b] = key(s1.points[i]);
        Pair best{std::numeric_limits<double>::infinity(), i, 0};
        for (std::int64_t da = -1; da <= 1; ++da)
            for (std::int64_t db = -1; db <= 1; ++db) {
                const auto it = buckets.find(hash(a + da, b + db));
                if (it == buckets.end()) continue;
                for (std::size_t j : it->second) {
                    const double d = std::abs(s1.points[i] - s2.points[j]);
                    if (d < best.d) best = {d, i, j};
                }
            }
        if (std::isfinite(best.d)) pairs.push_back(best);
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.d < y.d; });

    const std::size_t tries = std::min<std::size_t>(pairs.size(), 200);
    for (std::size_t k = 0; k < tries; ++k) {
        auto x1 = free_params(s1, pairs[k].i);
        auto x2 = free_params(s2, pairs[k].j);
        if (!close_gap(m1, m2, x1, x2, scale)) continue;
        ClosedOval out;
        out.first = x1;
        out.second = x2;
        const PiecewiseConstCurve c1 = m1.curve(x1);
        const PiecewiseConstCurve c2 = m2.curve(x2).reversed();
        out.curve.start = c1.start;
        out.curve.segments = c1.segments;
        out.curve.segments.insert(out.curve.segments.end(), c2.segments.begin(), c2.segments.end());
        out.gap = std::abs(out.curve.end_raw().point - out.curve.start.point);
        out.turning = out.curve.turning();
        return out;
    }
    return std::nullopt;
}

// ---- symmetric case ----

double phi_printed(double x, double p, double q)
{
    return q * (x + 2.0 * p) * std::sin(0.5 * x) -
           x * (q - p) * std::sin(q * (2.0 * p + x - kTwoPi) / (2.0 * (q - p)));
}

double phi(double x, double p, double q)
{
    return q * (2.0 * p - x) * std::sin(0.5 * x) -
           x * (q - p) * std::sin(q * (2.0 * p + x - kTwoPi) / (2.0 * (q - p)));
}

double contact_gap(double x, double p, double q)
{
    const double h = kPi - 0.5 * x;
    const double l = (q - h) / (q - p);
    const Point z = z3(p, l, q, 2.0 - 2.0 * l, p, l);
    return std::abs(z1(0.5 * x, 2.0)) - (unit(-h) * z).real();
}

int count_sign_changes(double kappa1, double kappa2, double p, double q, int scan)
{
    const AngleRange r = natural_symmetric_range(kappa1, kappa2);
    int changes = 0;
    double prev = 0.0;
    for (int i = 1; i < scan; ++i) {
        const double g = contact_gap(r.lo + (r.hi - r.lo) * i / scan, p, q);
        if (i > 1 && (g < 0.0) != (prev < 0.0)) ++changes;
        prev = g;
    }
    return changes;
}

SymmetricLimits solve_symmetric_limits(double kappa1, double kappa2, int scan)
{
    if (!(kappa1 >= 0.0 && kappa1 < 0.5 * kPi && kappa2 > 0.5 * kPi) || !std::isfinite(kappa2))
        throw Error(ErrorCode::invalid_data, "symmetric case needs 0 <= kappa1 < pi/2 < kappa2");
    if (scan < 3) throw Error(ErrorCode::invalid_data, "scan needs at least 3 points");
    const AngleRange r = natural_symmetric_range(kappa1, kappa2);

    auto root = [&](double p, double q) {
        auto f = [&](double x) { return contact_gap(x, p, q); };
        double x_prev = r.lo + (r.hi - r.lo) / scan;
        double f_prev = f(x_prev);
        double fmin = f_prev, fmax = f_prev;
        for (int i = 2; i < scan; ++i) {
            const double x = r.lo + (r.hi - r.lo) * i / scan;
            const double fx = f(x);
            fmin = std::min(fmin, fx);
            fmax = std::max(fmax, fx);
            if (fx == 0.0) return x;
            if ((fx < 0.0) != (f_prev < 0.0)) {
                std::uintmax_t iters = 200;
                auto tol = [](double a, double b) { return std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(a); };
                const auto br = boost::math::tools::toms748_solve(f, x_prev, x, f_prev, fx, tol, iters);
                return 0.5 * (br.first + br.second);
            }
            x_prev = x;
            f_prev = fx;
        }
        std::ostringstream msg;
        msg << "no sign change of the contact function in (" << r.lo << ", " << r.hi << "); scanned values in ["
            << fmin << ", " << fmax << "]";
        throw Error(ErrorCode::no_root, msg.str());
    };

    SymmetricLimits s;
    s.mu2 = root(kappa1, kappa2);
    s.mu1 = kTwoPi - s.mu2;
    s.nu1 = root(kappa2, kappa1);
    s.nu2 = kTwoPi - s.nu1;
    return s;
}

} // namespace arclen

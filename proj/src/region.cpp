#include "arclen/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arclen {

namespace {

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Point a, Point b) { return a.real() * b.real() + a.imag() * b.imag(); }

double segment_distance(Point a, Point b, Point p)
{
    const Point d = b - a;
    const double n = std::norm(d);
    if (n == 0.0) return std::abs(p - a);
    const double t = std::clamp(dot(p - a, d) / n, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

// |k|(|p-C|^2 - r^2), stable as k -> 0 (C the curvature center at a.start).
double power_scaled(const ArcPiece& a, Point p)
{
    const Point v = p - a.start;
    const Point n = Point(0.0, 1.0) * unit(a.tau);
    const double s = a.k > 0.0 ? 1.0 : (a.k < 0.0 ? -1.0 : 0.0);
    return std::abs(a.k) * std::norm(v) - 2.0 * s * dot(v, n);
}

constexpr double kStraightTurn = 1e-12;

} // namespace

double winding_angle(const ArcPiece& a, Point p)
{
    const Point s = a.start - p;
    const Point e = a.end() - p;
    double w = std::arg(e / s);
    const double th = a.turning();
    if (std::abs(th) < kStraightTurn) return w;
    if (power_scaled(a, p) < 0.0) {
        const Point chord = a.end() - a.start;
        const Point mid = a.point_at(0.5 * a.l);
        if (cross(chord, p - a.start) * cross(chord, mid - a.start) > 0.0)
            w += th > 0.0 ? kTwoPi : -kTwoPi;
    }
    return w;
}

double distance_to_piece(const ArcPiece& a, Point p)
{
    const Point e = a.end();
    const double th = a.turning();
    if (std::abs(th) < kStraightTurn) return segment_distance(a.start, e, p);
    const Point n = Point(0.0, 1.0) * unit(a.tau);
    const Point v = p - a.start;
    const double den = std::abs(a.k * v - n) + 1.0;
    const double to_circle = std::abs(power_scaled(a, p)) / den;
    // Angular position of the nearest circle point, measured from start in the turning sense.
    const Point c = a.start + n / a.k;
    double phi = std::arg((p - c) / (a.start - c));
    if (th < 0.0) phi = -phi;
    if (phi < 0.0) phi += kTwoPi;
    if (std::abs(p - c) > 0.0 && phi <= std::abs(th)) return to_circle;
    return std::min(std::abs(p - a.start), std::abs(p - e));
}

int winding_number(const std::vector<ArcPiece>& loop, Point p)
{
    double w = 0.0;
    for (const auto& a : loop) w += winding_angle(a, p);
    return static_cast<int>(std::lround(w / kTwoPi));
}

double distance_to_chain(const std::vector<ArcPiece>& chain, Point p)
{
    double d = std::numeric_limits<double>::infinity();
    for (const auto& a : chain) d = std::min(d, distance_to_piece(a, p));
    return d;
}

bool RegionBoundary::contains(Point p) const
{
    bool in = false;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = vertices[i];
        const Point b = vertices[j];
        if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
            const double x = a.real() + (p.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
            if (p.real() < x) in = !in;
        }
    }
    return in;
}

double RegionBoundary::distance(Point p) const
{
    double d = std::numeric_limits<double>::infinity();
    const std::size_t n = vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++)
        d = std::min(d, segment_distance(vertices[j], vertices[i], p));
    return d;
}

double RegionBoundary::signed_area() const
{
    double s = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) s += cross(vertices[j], vertices[i]);
    return 0.5 * s;
}

bool polyline_self_intersects(const std::vector<Point>& v)
{
    const std::size_t n = v.size();
    if (n < 4) return false;
    auto proper = [](Point a, Point b, Point c, Point d) {
        const double d1 = cross(b - a, c - a);
        const double d2 = cross(b - a, d - a);
        const double d3 = cross(d - c, a - c);
        const double d4 = cross(d - c, b - c);
        return d1 * d2 < 0.0 && d3 * d4 < 0.0;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n];
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (proper(a, b, v[j], v[(j + 1) % n])) return true;
        }
    }
    return false;
}

RegionBoundary make_boundary(const std::vector<std::vector<Point>>& pieces)
{
    RegionBoundary r;
    for (const auto& piece : pieces)
        for (const auto& p : piece)
            if (r.vertices.empty() || p != r.vertices.back()) r.vertices.push_back(p);
    if (r.vertices.size() > 1 && r.vertices.front() == r.vertices.back()) r.vertices.pop_back();
    r.self_intersecting = polyline_self_intersects(r.vertices);
    return r;
}

void BoundingBox::add(Point p)
{
    x0 = std::min(x0, p.real());
    y0 = std::min(y0, p.imag());
    x1 = std::max(x1, p.real());
    y1 = std::max(y1, p.imag());
}

BoundingBox BoundingBox::none()
{
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf, -inf, -inf};
}

Raster::Raster(const BoundingBox& box, int cells, int pad)
{
    const double w = std::max(box.x1 - box.x0, 0.0);
    const double hgt = std::max(box.y1 - box.y0, 0.0);
    h_ = std::max(std::max(w, hgt) / cells, 1e-12);
    nx_ = static_cast<int>(w / h_) + 1 + 2 * pad;
    ny_ = static_cast<int>(hgt / h_) + 1 + 2 * pad;
    x0_ = box.x0 - pad * h_;
    y0_ = box.y0 - pad * h_;
    bits_.assign(static_cast<std::size_t>(nx_) * ny_, 0);
}

void Raster::mark(Point p)
{
    const int i = static_cast<int>(std::floor((p.real() - x0_) / h_));
    const int j = static_cast<int>(std::floor((p.imag() - y0_) / h_));
    if (i >= 0 && i < nx_ && j >= 0 && j < ny_) bits_[index(i, j)] = 1;
}

void Raster::mark_all(const std::vector<Point>& pts)
{
    for (const auto& p : pts) mark(p);
}

void Raster::dilate()
{
    std::vector<std::uint8_t> out(bits_.size(), 0);
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i) {
            bool v = at(i, j) || (i > 0 && at(i - 1, j)) || (i + 1 < nx_ && at(i + 1, j)) ||
                     (j > 0 && at(i, j - 1)) || (j + 1 < ny_ && at(i, j + 1));
            out[index(i, j)] = v ? 1 : 0;
        }
    bits_.swap(out);
}

void Raster::erode()
{
    std::vector<std::uint8_t> out(bits_.size(), 0);
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i) {
            bool v = at(i, j) && i > 0 && at(i - 1, j) && i + 1 < nx_ && at(i + 1, j) && j > 0 &&
                     at(i, j - 1) && j + 1 < ny_ && at(i, j + 1);
            out[index(i, j)] = v ? 1 : 0;
        }
    bits_.swap(out);
}

void Raster::close(int iterations)
{
    for (int k = 0; k < iterations; ++k) dilate();
    for (int k = 0; k < iterations; ++k) erode();
}

void Raster::fill_holes()
{
    std::vector<std::uint8_t> outside(bits_.size(), 0);
    std::vector<std::pair<int, int>> stack;
    auto push = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return;
        const auto k = index(i, j);
        if (bits_[k] || outside[k]) return;
        outside[k] = 1;
        stack.emplace_back(i, j);
    };
    for (int i = 0; i < nx_; ++i) {
        push(i, 0);
        push(i, ny_ - 1);
    }
    for (int j = 0; j < ny_; ++j) {
        push(0, j);
        push(nx_ - 1, j);
    }
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        push(i - 1, j);
        push(i + 1, j);
        push(i, j - 1);
        push(i, j + 1);
    }
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] = outside[k] ? 0 : 1;
}

std::size_t Raster::count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::size_t Raster::overlap_count(const Raster& other) const
{
    std::size_t n = 0;
    const std::size_t m = std::min(bits_.size(), other.bits_.size());
    for (std::size_t k = 0; k < m; ++k) n += (bits_[k] & other.bits_[k]);
    return n;
}

Point Raster::cell_center(int i, int j) const
{
    return {x0_ + (i + 0.5) * h_, y0_ + (j + 0.5) * h_};
}

} // namespace arclen

#pragma once

#include "arclen/curve.hpp"

#include <cstdint>
#include <vector>

namespace arclen {

// ---- exact arc chains ----

// Continuous change of arg(z - p) as z runs along the piece (|turning| < 2 pi).
double winding_angle(const ArcPiece& a, Point p);
double distance_to_piece(const ArcPiece& a, Point p);

// Winding number of a closed chain of pieces around p.
int winding_number(const std::vector<ArcPiece>& loop, Point p);
double distance_to_chain(const std::vector<ArcPiece>& chain, Point p);

// ---- sampled boundaries ----

// Closed polyline; the last point connects back to the first.
struct RegionBoundary {
    std::vector<Point> vertices;
    bool self_intersecting = false;

    // Even-odd rule.
    bool contains(Point p) const;
    double distance(Point p) const;
    // Shoelace area (signed by orientation).
    double signed_area() const;
};

// Closed polyline from concatenated open pieces; flags self-intersection.
RegionBoundary make_boundary(const std::vector<std::vector<Point>>& pieces);

bool polyline_self_intersects(const std::vector<Point>& closed);

// ---- raster occupancy ----

struct BoundingBox {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    void add(Point p);
    bool empty() const { return !(x1 >= x0 && y1 >= y0); }
    static BoundingBox none();
};

// Occupancy grid over a fixed frame; cells are square.
class Raster {
public:
    Raster(const BoundingBox& box, int cells_on_long_side, int pad = 3);

    void mark(Point p);
    void mark_all(const std::vector<Point>& pts);
    // Binary closing with a 4-neighbour structuring element.
    void close(int iterations);
    // Fills background components not connected to the border.
    void fill_holes();

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double cell() const { return h_; }
    bool at(int i, int j) const { return bits_[index(i, j)] != 0; }
    std::size_t count() const;

    // Cells set in both rasters (same frame required).
    std::size_t overlap_count(const Raster& other) const;
    Point cell_center(int i, int j) const;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }
    void dilate();
    void erode();

    double x0_, y0_, h_;
    int nx_, ny_;
    std::vector<std::uint8_t> bits_;
};

} // namespace arclen

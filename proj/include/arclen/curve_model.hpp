#pragma once

#include "arclen/curve.hpp"
#include "arclen/region.hpp"

#include <string>
#include <vector>

namespace arclen {

struct NamedCurve {
    std::string name;
    std::vector<Point> points;
};

// Endpoint cloud with generating parameters (flattened, `stride` values per point)
// and named sampled boundary curves.
struct EndpointSet {
    std::vector<Point> points;
    std::vector<std::string> param_names;
    std::vector<double> params;
    std::vector<NamedCurve> bounds;
    // Closed test polygon assembled from the bounds (spiral and fixed-turning sets).
    RegionBoundary region;

    std::size_t stride() const { return param_names.size(); }
    const double* params_of(std::size_t i) const { return params.data() + i * stride(); }
    const NamedCurve* bound(const std::string& name) const;
};

struct ModelOptions {
    int grid = 64;            // steps per parameter
    int bound_samples = 2048; // samples per boundary curve; the spiral set rounds up to a multiple of grid
};

// Endpoints Z2(q1, l1; q2, L - l1), k1 <= q1 <= q2 <= k2 (or mirrored), with bounds
// Gamma1(q) = Z1(q; L) and Gamma2(t) = Z2(k1, L - t; k2, t).
EndpointSet endpoint_set_spiral(double k1, double k2, double L, const ModelOptions& opt = {},
                                const Pose& start = {});

// Subset with fixed turning theta, k1 L < theta < k2 L, bounded by the two q(t) families.
EndpointSet fixed_turning_subset(double k1, double k2, double L, double theta, const ModelOptions& opt = {},
                                 const Pose& start = {});

// Parameter value where the two fixed-turning families meet.
double fixed_turning_meet(double k1, double k2, double L, double theta);

// Max deviation of Gamma1 samples from the cochleoid p(phi) = L sin(phi) / phi, taken in
// the frame of the start pose (branch of phi followed continuously from q = k1).
double cochleoid_residual(const EndpointSet& set, double L, const Pose& start = {});

enum class CycloidClass { hypocycloid, epicycloid, involute };

const char* to_string(CycloidClass c);

struct Gamma2Diagnostic {
    CycloidClass cls = CycloidClass::hypocycloid;
    double R = 0.0;       // fixed circle radius
    double r = 0.0;       // rolling circle radius (0 for the involute)
    double speed = 0.0;   // d(phi)/dt of the fitted parametrization
    double residual = 0.0; // max distance between samples and the fitted curve
    double hypo_residual = 0.0;
    double epi_residual = 0.0;
    double involute_residual = 0.0;
};

// Gamma2 samples in the canonical frame: origin moved to the k1 curvature center, rotated
// by pi/2 - k1 L. Requires k1 != 0.
std::vector<Point> gamma2_canonical(double k1, double k2, double L, int samples);

// Least-squares fit of the canonical Gamma2 against hypocycloid, epicycloid and circle-involute
// models; the best fit decides the class.
Gamma2Diagnostic gamma2_canonical_check(double k1, double k2, double L, int samples = 400);

} // namespace arclen

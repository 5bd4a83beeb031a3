#pragma once

#include "arclen/curve_model.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace arclen {

// Periodic curvature profile with extrema k1 < k2 > k3 < k4 > k1 at s = 0, s1, s2, s3.
struct OvalSpec {
    std::array<double, 4> k{};
    std::array<double, 4> L{};

    // Throws invalid_data on non-positive lengths, negative levels or a broken vertex pattern.
    void validate() const;
    // Spec starting at the second vertex; its mu is the nu of the original.
    OvalSpec rotated() const;
    double perimeter() const { return L[0] + L[1] + L[2] + L[3]; }
};

struct AngleRange {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return !(lo < hi); }
    bool contains(double x) const { return x > lo && x < hi; }
};

AngleRange natural_mu_range(const OvalSpec& spec);
AngleRange natural_nu_range(const OvalSpec& spec);

// Symmetric case L1 = L2 = L3 = L4, k1 = k3, k2 = k4 with kappa = k L.
AngleRange natural_symmetric_range(double kappa1, double kappa2);

// Curve with one curvature extremum: levels start -> peak -> end over lengths (rise, fall),
// fixed turning, traced from `start`. The peak may be a maximum or a minimum.
struct OneVertexModel {
    double start_level = 0.0;
    double peak = 0.0;
    double end_level = 0.0;
    double rise = 0.0;
    double fall = 0.0;
    double turning = 0.0;
    Pose start;

    // Free parameters (q1, q2, l1, q3, l3); q4 follows from the turning.
    static constexpr int kFree = 5;

    // q4 for the given free parameters; nullopt when l3 = fall.
    std::optional<double> last_level(const std::array<double, 5>& x) const;
    // Level and segment constraints with tolerance tol.
    bool feasible(const std::array<double, 5>& x, double tol = 1e-12) const;
    // Four-segment curve; zero-length segments are dropped.
    PiecewiseConstCurve curve(const std::array<double, 5>& x) const;
    Point endpoint(const std::array<double, 5>& x) const;

    // Single-level halves: q1(u) on rise, q2(u) on fall.
    std::optional<AngleRange> ab_range() const;
    Point ab_point(double u) const;
    // Three-level curve start -> peak -> end with l3 - l1 = 2v.
    std::optional<AngleRange> cd_range() const;
    Point cd_point(double v) const;
    std::array<double, 3> cd_lengths(double v) const;
};

enum class SetOrientation { first, second };

// First: (k1, k2, k3; L1, L2; mu) along n(-pi/2). Second: the reversed, negated profile
// (-k1, -k4, -k3; L4, L3; mu - 2 pi) along n(pi/2).
OneVertexModel one_vertex_model(const OvalSpec& spec, double mu, SetOrientation orientation);

struct OvalOptions {
    int grid = 12;            // steps per enumerated parameter
    int bound_samples = 2000; // samples per closed-form bound
    int raster_cells = 400;   // cells on the long side of the joint bounding box
    int closing = 2;          // binary closing iterations
    double mu_step = 0.01 * kPi;
    double contact_resolution = 1e-3 * kPi;
};

// Enumerated endpoints (params q1, q2, l1, q3, q4, l3) with bounds "AB" and "CD".
// Throws infeasible when no grid point satisfies the constraints.
EndpointSet one_vertex_endpoint_set(const OneVertexModel& model, const OvalOptions& opt = {});
EndpointSet one_vertex_endpoint_set(const OvalSpec& spec, double mu, SetOrientation orientation,
                                    const OvalOptions& opt = {});

struct SetOverlap {
    bool intersects = false;
    double area = 0.0;
    double threshold = 0.0;
    std::size_t points_first = 0;
    std::size_t points_second = 0;
};

// Raster overlap of two endpoint sets (cloud plus bounds, closed and hole-filled).
SetOverlap set_overlap(const EndpointSet& a, const EndpointSet& b, const OvalOptions& opt = {});
// Both sets of the spec at mu; empty sets never intersect.
SetOverlap overlap_at(const OvalSpec& spec, double mu, const OvalOptions& opt = {});

enum class Verdict { intersects, never };
enum class SweepParameter { mu, nu };

const char* to_string(Verdict v);
const char* to_string(SweepParameter p);

struct MuSample {
    double mu = 0.0;
    bool intersects = false;
    double area = 0.0;
};

struct ClosenessReport {
    SweepParameter parameter = SweepParameter::mu;
    AngleRange range;
    std::vector<MuSample> mu_grid;
    std::vector<double> contacts;
    Verdict verdict = Verdict::never;
};

// Sweep over multiples of opt.mu_step inside the natural range; contacts bisected to
// opt.contact_resolution between status changes.
ClosenessReport closeness_sweep(const OvalSpec& spec, const OvalOptions& opt = {},
                                SweepParameter parameter = SweepParameter::mu);

struct ClosedOval {
    PiecewiseConstCurve curve;
    std::array<double, 5> first{};
    std::array<double, 5> second{};
    double gap = 0.0;
    double turning = 0.0;
};

// Common endpoint of both sets refined to closure; nullopt when no nearby pair converges.
std::optional<ClosedOval> extract_closed_oval(const OvalSpec& spec, double mu, const OvalOptions& opt = {});

// ---- symmetric case ----

// Uncorrected contact function, kept for comparison.
double phi_printed(double x, double p, double q);
// Re-derived contact function; equals p q x contact_gap / 2.
double phi(double x, double p, double q);
// Signed gap along the symmetry axis between the single-arc bound at u = 0 and the
// three-arc bound at v = 0 (unit lengths).
double contact_gap(double x, double p, double q);

struct SymmetricLimits {
    double mu1 = 0.0; // mu'
    double mu2 = 0.0; // mu''
    double nu1 = 0.0; // nu'
    double nu2 = 0.0; // nu''
};

// Roots of the contact function in the natural range; throws no_root when the scan finds no
// sign change, invalid_data outside 0 <= kappa1 < pi/2 < kappa2.
SymmetricLimits solve_symmetric_limits(double kappa1, double kappa2, int scan = 4000);

// Number of sign changes of contact_gap(., p, q) on a uniform scan of the natural range.
int count_sign_changes(double kappa1, double kappa2, double p, double q, int scan = 4000);

} // namespace arclen

#include "arclen/curve_model.hpp"

#include "arclen/error.hpp"
#include "arclen/parallel.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace arclen {

namespace {

RigidMotion motion_of(const Pose& start) { return {start.tau, start.point}; }

void check_levels(double k1, double k2, double L)
{
    if (!std::isfinite(k1) || !std::isfinite(k2) || !std::isfinite(L))
        throw Error(ErrorCode::invalid_data, "model parameters must be finite");
    if (!(L > 0.0)) throw Error(ErrorCode::invalid_data, "model length must be positive");
    if (k1 == k2) throw Error(ErrorCode::invalid_data, "model needs k1 != k2");
}

void check_options(const ModelOptions& opt)
{
    if (opt.grid < 1) throw Error(ErrorCode::invalid_data, "grid must be at least 1");
    if (opt.bound_samples < 2) throw Error(ErrorCode::invalid_data, "bound_samples must be at least 2");
}

// Samples f on [a, b] at n + 1 uniform nodes, mapped through m.
std::vector<Point> sample_curve(const std::function<Point(double)>& f, double a, double b, int n,
                                const RigidMotion& m)
{
    std::vector<Point> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double s = i == n ? b : a + (b - a) * static_cast<double>(i) / n;
        out[static_cast<std::size_t>(i)] = m.apply(f(s));
    }
    return out;
}

std::vector<Point> reversed(std::vector<Point> v)
{
    std::reverse(v.begin(), v.end());
    return v;
}

// Per-row buffers merged in row order.
struct RowBuffer {
    std::vector<Point> points;
    std::vector<double> params;
};

void merge(EndpointSet& set, std::vector<RowBuffer>& rows)
{
    for (auto& r : rows) {
        set.points.insert(set.points.end(), r.points.begin(), r.points.end());
        set.params.insert(set.params.end(), r.params.begin(), r.params.end());
    }
}

// ---- cycloid models in the canonical frame; phi = s t ----

enum class Model { hypo, epi, involute };

Point model_point(Model m, double R, double r, double phi)
{
    switch (m) {
    case Model::hypo: return (R - r) * unit(phi) + r * unit(-(R - r) / r * phi);
    case Model::epi: return (R + r) * unit(phi) - r * unit((R + r) / r * phi);
    case Model::involute: return R * unit(phi) * Point(1.0, -phi);
    }
    return {};
}

// A hypocycloid with r > R traces an epicycloid (double generation), so the hypocycloid model
// keeps r < R to make the two classes disjoint.
double rolling_radius(Model m, double R, const Eigen::VectorXd& x)
{
    switch (m) {
    case Model::hypo: return R / (1.0 + std::exp(-x[1]));
    case Model::epi: return std::exp(x[1]);
    case Model::involute: return 0.0;
    }
    return 0.0;
}

struct FitFunctor {
    using Scalar = double;
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

    Model model;
    const std::vector<double>* t;
    const std::vector<Point>* z;

    int inputs() const { return model == Model::involute ? 2 : 3; }
    int values() const { return static_cast<int>(2 * z->size()); }

    // x = (log R, s), (log R, logit(r/R), s) for the hypocycloid, (log R, log r, s) otherwise.
    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const
    {
        const double R = std::exp(x[0]);
        const double r = rolling_radius(model, R, x);
        const double s = x[inputs() - 1];
        for (std::size_t i = 0; i < z->size(); ++i) {
            const Point d = model_point(model, R, r, s * (*t)[i]) - (*z)[i];
            f[static_cast<Eigen::Index>(2 * i)] = d.real();
            f[static_cast<Eigen::Index>(2 * i + 1)] = d.imag();
        }
        return 0;
    }
};

double max_residual(Model m, double R, double r, double s, const std::vector<double>& t,
                    const std::vector<Point>& z)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double d = std::abs(model_point(m, R, r, s * t[i]) - z[i]);
        if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, d);
    }
    return worst;
}

struct Fit {
    double R = 0.0, r = 0.0, s = 0.0;
    double residual = std::numeric_limits<double>::infinity();
};

Fit fit_model(Model m, const std::vector<double>& t, const std::vector<Point>& z, double L)
{
    // Every model starts at distance R from the origin.
    const double R0 = std::abs(z.front());
    std::vector<double> ratios{0.0};
    if (m != Model::involute) {
        ratios.clear();
        for (int e = -30; e <= 30; ++e) {
            const double q = std::pow(10.0, e / 10.0);
            if (m != Model::hypo || q < 1.0) ratios.push_back(q);
        }
        if (m == Model::hypo)
            for (double q : {0.5, 0.6, 0.7, 0.75, 0.85, 0.9, 0.95}) ratios.push_back(q);
    }
    struct Seed {
        double res, r, s;
    };
    std::vector<Seed> seeds;
    // Coarse scan over speed and radius ratio on a subsample.
    std::vector<double> ts;
    std::vector<Point> zs;
    for (std::size_t i = 0; i < z.size(); i += std::max<std::size_t>(1, z.size() / 40)) {
        ts.push_back(t[i]);
        zs.push_back(z[i]);
    }
    for (int e = -60; e <= 60; ++e) {
        for (double sign : {-1.0, 1.0}) {
            const double s = sign * std::pow(10.0, e / 20.0) / L;
            for (double q : ratios) {
                const double r = q * R0;
                seeds.push_back({max_residual(m, R0, r, s, ts, zs), r, s});
            }
        }
    }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.res < b.res; });

    Fit best;
    const std::size_t tries = std::min<std::size_t>(6, seeds.size());
    for (std::size_t k = 0; k < tries; ++k) {
        FitFunctor fn{m, &t, &z};
        Eigen::NumericalDiff<FitFunctor, Eigen::Central> nd(fn);
        Eigen::LevenbergMarquardt<Eigen::NumericalDiff<FitFunctor, Eigen::Central>> lm(nd);
        Eigen::VectorXd x(fn.inputs());
        x[0] = std::log(R0);
        if (m == Model::hypo) {
            const double q = seeds[k].r / R0;
            x[1] = std::log(q / (1.0 - q));
        } else if (m == Model::epi) {
            x[1] = std::log(seeds[k].r);
        }
        x[fn.inputs() - 1] = seeds[k].s;
        lm.parameters.xtol = 1e-15;
        lm.parameters.ftol = 1e-15;
        lm.parameters.maxfev = 4000;
        lm.minimize(x);
        Fit f;
        f.R = std::exp(x[0]);
        f.r = rolling_radius(m, f.R, x);
        f.s = x[fn.inputs() - 1];
        f.residual = max_residual(m, f.R, f.r, f.s, t, z);
        if (f.residual < best.residual) best = f;
    }
    return best;
}

} // namespace

const NamedCurve* EndpointSet::bound(const std::string& name) const
{
    for (const auto& b : bounds)
        if (b.name == name) return &b;
    return nullptr;
}

EndpointSet endpoint_set_spiral(double k1, double k2, double L, const ModelOptions& opt, const Pose& start)
{
    check_levels(k1, k2, L);
    check_options(opt);
    const RigidMotion m = motion_of(start);
    const int N = opt.grid;
    const double dk = k2 - k1;

    EndpointSet set;
    set.param_names = {"q1", "q2", "l1"};
    std::vector<RowBuffer> rows(static_cast<std::size_t>(N) + 1);
    parallel_for(rows.size(), [&](std::size_t i) {
        RowBuffer& row = rows[i];
        const double q1 = k1 + dk * static_cast<double>(i) / N;
        for (int j = static_cast<int>(i); j <= N; ++j) {
            const double q2 = j == N ? k2 : k1 + dk * static_cast<double>(j) / N;
            for (int mm = 0; mm <= N; ++mm) {
                const double l1 = mm == N ? L : L * static_cast<double>(mm) / N;
                row.points.push_back(m.apply(z2(q1, l1, q2, L - l1)));
                row.params.insert(row.params.end(), {q1, q2, l1});
            }
        }
    });
    merge(set, rows);

    // Multiple of the grid so cloud members lying on a bound are polygon vertices.
    const int n = (opt.bound_samples + N - 1) / N * N;
    auto gamma1 = sample_curve([&](double q) { return z1(q, L); }, k1, k2, n, m);
    auto gamma2 = sample_curve([&](double t) { return z2(k1, L - t, k2, t); }, 0.0, L, n, m);
    set.region = make_boundary({gamma1, reversed(gamma2)});
    set.bounds.push_back({"gamma1", std::move(gamma1)});
    set.bounds.push_back({"gamma2", std::move(gamma2)});
    return set;
}

double fixed_turning_meet(double k1, double k2, double L, double theta)
{
    check_levels(k1, k2, L);
    const double lo = std::min(k1, k2) * L, hi = std::max(k1, k2) * L;
    if (!(theta > lo && theta < hi))
        throw Error(ErrorCode::invalid_data, "fixed turning must lie strictly between k1 L and k2 L");
    return (theta - k1 * L) / (k2 - k1);
}

EndpointSet fixed_turning_subset(double k1, double k2, double L, double theta, const ModelOptions& opt,
                                 const Pose& start)
{
    const double ts = fixed_turning_meet(k1, k2, L, theta);
    check_options(opt);
    const RigidMotion m = motion_of(start);
    const int N = opt.grid;
    const double dk = k2 - k1;

    EndpointSet set;
    set.param_names = {"q1", "q2", "l1"};
    std::vector<RowBuffer> rows(static_cast<std::size_t>(N) + 1);
    parallel_for(rows.size(), [&](std::size_t i) {
        RowBuffer& row = rows[i];
        const double q1 = k1 + dk * static_cast<double>(i) / N;
        for (int j = static_cast<int>(i) + 1; j <= N; ++j) {
            const double q2 = j == N ? k2 : k1 + dk * static_cast<double>(j) / N;
            const double l1 = (q2 * L - theta) / (q2 - q1);
            if (!(l1 >= 0.0 && l1 <= L)) continue;
            row.points.push_back(m.apply(z2(q1, l1, q2, L - l1)));
            row.params.insert(row.params.end(), {q1, q2, l1});
        }
    });
    merge(set, rows);

    const int n = opt.bound_samples;
    auto first = sample_curve(
        [&](double t) {
            const double q = (theta - k2 * t) / (L - t);
            return z2(q, L - t, k2, t);
        },
        0.0, ts, n, m);
    auto second = sample_curve(
        [&](double t) {
            if (t <= 0.0) return z1(k1, L);
            const double q = (theta - k1 * (L - t)) / t;
            return z2(k1, L - t, q, t);
        },
        ts, L, n, m);
    set.region = make_boundary({first, second});
    set.bounds.push_back({"first_family", std::move(first)});
    set.bounds.push_back({"second_family", std::move(second)});
    return set;
}

double cochleoid_residual(const EndpointSet& set, double L, const Pose& start)
{
    const NamedCurve* g = set.bound("gamma1");
    if (!g || g->points.empty()) throw Error(ErrorCode::invalid_data, "endpoint set carries no gamma1 bound");
    const RigidMotion back = motion_of(start).inverse();
    auto polar = [L](double phi) { return std::abs(phi) < 1e-8 ? L * (1.0 - phi * phi / 6.0) : L * std::sin(phi) / phi; };

    // Direction of the line through the origin, continued modulo pi along the samples.
    double phi = 0.0;
    double worst = 0.0;
    bool first = true;
    for (const Point& p : g->points) {
        const Point z = back.apply(p);
        const double a = std::arg(z);
        if (first) {
            // Pick the branch a + j pi that best fits at the first sample.
            double best = std::numeric_limits<double>::infinity();
            for (int j = -8; j <= 8; ++j) {
                const double cand = a + j * kPi;
                const double e = std::abs(polar(cand) * unit(cand) - z);
                if (e < best) {
                    best = e;
                    phi = cand;
                }
            }
            first = false;
        } else if (std::abs(z) > 0.0) {
            phi += std::remainder(a - phi, kPi);
        }
        worst = std::max(worst, std::abs(polar(phi) * unit(phi) - z));
    }
    return worst;
}

const char* to_string(CycloidClass c)
{
    switch (c) {
    case CycloidClass::hypocycloid: return "hypocycloid";
    case CycloidClass::epicycloid: return "epicycloid";
    case CycloidClass::involute: return "involute";
    }
    return "unknown";
}

std::vector<Point> gamma2_canonical(double k1, double k2, double L, int samples)
{
    check_levels(k1, k2, L);
    if (!(k1 > 0.0) || k2 < 0.0) throw Error(ErrorCode::invalid_data, "canonical frame needs k1 > 0 and k2 >= 0");
    if (samples < 2) throw Error(ErrorCode::invalid_data, "need at least two samples");
    const RigidMotion to_canonical{0.5 * kPi - k1 * L, Point(0.0, -1.0 / k1) * unit(0.5 * kPi - k1 * L)};
    return sample_curve([&](double t) { return z2(k1, L - t, k2, t); }, 0.0, L, samples - 1, to_canonical);
}

Gamma2Diagnostic gamma2_canonical_check(double k1, double k2, double L, int samples)
{
    const std::vector<Point> z = gamma2_canonical(k1, k2, L, samples);
    std::vector<double> t(z.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = i + 1 == t.size() ? L : L * static_cast<double>(i) / static_cast<double>(t.size() - 1);

    const Fit hypo = fit_model(Model::hypo, t, z, L);
    const Fit epi = fit_model(Model::epi, t, z, L);
    const Fit inv = fit_model(Model::involute, t, z, L);

    Gamma2Diagnostic d;
    d.hypo_residual = hypo.residual;
    d.epi_residual = epi.residual;
    d.involute_residual = inv.residual;
    const Fit* best = &hypo;
    d.cls = CycloidClass::hypocycloid;
    if (epi.residual < best->residual) {
        best = &epi;
        d.cls = CycloidClass::epicycloid;
    }
    if (inv.residual < best->residual) {
        best = &inv;
        d.cls = CycloidClass::involute;
    }
    d.R = best->R;
    d.r = best->r;
    d.speed = best->s;
    d.residual = best->residual;
    return d;
}

} // namespace arclen

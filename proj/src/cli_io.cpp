#include "arclen/cli_io.hpp"

#include "arclen/approx_solver.hpp"
#include "arclen/curve_model.hpp"
#include "arclen/length_bounds.hpp"
#include "arclen/oval_closeness.hpp"
#include "arclen/region.hpp"
#include "arclen/triarc.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

namespace arclen {

namespace {

// ---- field access ----

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::invalid_data, msg); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

double num(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number()) bad(std::string("field '") + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) bad(std::string("field '") + key + "' must be finite");
    return x;
}

std::optional<double> opt_num(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) return std::nullopt;
    return num(j, key);
}

std::string str(const Json& j, const char* key, const std::string& fallback)
{
    if (!j.is_object() || !j.contains(key)) return fallback;
    const Json& v = j.at(key);
    if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<double> num_list(const Json& j, const char* key, std::size_t n)
{
    const Json& v = field(j, key);
    if (!v.is_array() || (n && v.size() != n))
        bad(std::string("field '") + key + "' must be an array" + (n ? " of " + std::to_string(n) + " numbers" : ""));
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) bad(std::string("field '") + key + "' must hold numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

// ---- shared input: chord data or a segment curve ----

struct DataInput {
    G2ChordData data;
    bool has_curvatures = false;
    std::optional<PiecewiseConstCurve> curve;
    RigidMotion to_world; // chord frame -> input frame
    std::optional<double> length;
};

DataInput read_data(const Json& in)
{
    DataInput d;
    const bool has_chord = in.contains("chord"), has_curve = in.contains("curve");
    if (has_chord == has_curve) bad("exactly one of 'chord' or 'curve' is required");
    if (has_chord) {
        const Json& c = in.at("chord");
        const ChordData ch(num(c, "c"), num(c, "alpha"), num(c, "beta"));
        const auto k1 = opt_num(c, "k1"), k2 = opt_num(c, "k2");
        if (k1.has_value() != k2.has_value()) bad("chord needs both 'k1' and 'k2' or neither");
        d.data = G2ChordData(ch, k1.value_or(0.0), k2.value_or(0.0));
        d.has_curvatures = k1.has_value();
        d.length = opt_num(in, "length");
    } else {
        d.curve = curve_from_json(in.at("curve"));
        const ChordFrame f = chord_frame(*d.curve);
        d.data = f.data;
        d.to_world = f.to_frame.inverse();
        d.has_curvatures = str(in, "mode", "g2") != "g1";
        d.length = d.curve->length();
        if (const auto L = opt_num(in, "length")) d.length = L;
    }
    return d;
}

double eps_of(const JobOptions& opt) { return opt.tol.value_or(kDefaultEps); }

// ---- drawing helpers ----

std::vector<Point> sample_piece(const ArcPiece& a, int n = 96)
{
    std::vector<Point> out;
    for (int i = 0; i <= n; ++i) out.push_back(a.point_at(a.l * i / n));
    return out;
}

std::vector<Point> sample_curve(const PiecewiseConstCurve& c)
{
    return c.sample(std::max(c.length(), 1e-12) / 512.0);
}

std::vector<Point> map_points(const std::vector<Point>& pts, const RigidMotion& m)
{
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(m.apply(p));
    return out;
}

void draw_bilens(SvgCanvas& svg, const G2ChordData& d, const RigidMotion& m, double eps)
{
    try {
        const Bilens bl = bilens_from_g2(d, eps);
        std::vector<Point> pts;
        for (const auto& piece : bl.outline()) {
            const auto s = sample_piece(piece);
            pts.insert(pts.end(), s.begin(), s.end());
        }
        svg.polyline(map_points(pts, m), "#3060c0", 1.0, true);
    } catch (const Error&) {
        // No bilens for these data; nothing to draw.
    }
}

void draw_lens(SvgCanvas& svg, const ChordData& d, const RigidMotion& m)
{
    svg.polyline(map_points(sample_piece(lens_arc_at_zero(d)), m), "#a0a0a0", 0.8);
    svg.polyline(map_points(sample_piece(lens_arc_at_infinity(d)), m), "#a0a0a0", 0.8);
}

CsvTable segment_table(const PiecewiseConstCurve& c)
{
    CsvTable t;
    t.header = {"index", "k", "l", "x", "y", "tau"};
    const auto pieces = c.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const ArcPiece& p = pieces[i];
        t.rows.push_back({static_cast<double>(i), p.k, p.l, p.start.real(), p.start.imag(), p.tau});
    }
    return t;
}

ModelOptions model_options(const JobOptions& opt)
{
    ModelOptions m;
    if (opt.grid) m.grid = *opt.grid;
    return m;
}

OvalOptions oval_options(const Json& in, const JobOptions& opt)
{
    OvalOptions o;
    if (opt.grid) o.grid = *opt.grid;
    if (opt.mu_resolution) o.contact_resolution = *opt.mu_resolution;
    if (const auto step = opt_num(in, "mu_step")) o.mu_step = *step * kPi;
    return o;
}

void draw_set(SvgCanvas& svg, const EndpointSet& s, const std::string& cloud, const std::string& bound, double r)
{
    svg.dots(s.points, cloud, r);
    for (const auto& b : s.bounds) svg.polyline(b.points, bound, 1.2);
}

} // namespace

// ---- CSV ----

std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_number(const std::string& s)
{
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(s, &used);
    } catch (const std::exception&) {
        bad("not a number: '" + s + "'");
    }
    if (used != s.size()) bad("not a number: '" + s + "'");
    return x;
}

std::string CsvTable::str() const
{
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
        out += '\n';
    }
    return out;
}

CsvTable parse_csv(const std::string& text)
{
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    auto split = [](const std::string& l) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(l);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!l.empty() && l.back() == ',') cells.emplace_back();
        return cells;
    };
    if (!std::getline(in, line)) return t;
    t.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != t.header.size()) bad("ragged CSV row");
        std::vector<double> row;
        for (const auto& c : cells) row.push_back(parse_number(c));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---- SVG ----

void SvgCanvas::polyline(const std::vector<Point>& pts, const std::string& stroke, double width, bool closed)
{
    if (!pts.empty()) items_.push_back({Item::line, pts, stroke, width, closed});
}

void SvgCanvas::dots(const std::vector<Point>& pts, const std::string& fill, double radius)
{
    if (!pts.empty()) items_.push_back({Item::dot, pts, fill, radius, false});
}

std::string SvgCanvas::str() const
{
    BoundingBox box = BoundingBox::none();
    for (const auto& it : items_)
        for (const Point& p : it.pts) box.add(p);
    if (box.empty()) box = {0.0, 0.0, 1.0, 1.0};
    const double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-12});
    const double margin = 0.05 * span;
    const double x0 = box.x0 - margin, y0 = box.y0 - margin;
    const double w = box.x1 - box.x0 + 2.0 * margin, h = box.y1 - box.y0 + 2.0 * margin;
    const double unit_px = span / 600.0; // one nominal pixel in drawing units

    auto f = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return std::string(buf);
    };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << f(x0) << ' ' << f(-(y0 + h)) << ' ' << f(w)
      << ' ' << f(h) << "\" width=\"" << f(600.0 * w / span) << "\" height=\"" << f(600.0 * h / span) << "\">\n";
    s << "<g transform=\"scale(1,-1)\">\n";
    for (const auto& it : items_) {
        if (it.kind == Item::line) {
            s << (it.closed ? "<polygon" : "<polyline") << " fill=\"none\" stroke=\"" << it.color
              << "\" stroke-width=\"" << f(it.size * unit_px) << "\" points=\"";
            for (std::size_t i = 0; i < it.pts.size(); ++i)
                s << (i ? " " : "") << f(it.pts[i].real()) << ',' << f(it.pts[i].imag());
            s << "\"/>\n";
        } else {
            for (const Point& p : it.pts)
                s << "<circle cx=\"" << f(p.real()) << "\" cy=\"" << f(p.imag()) << "\" r=\""
                  << f(it.size * unit_px) << "\" fill=\"" << it.color << "\"/>\n";
        }
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

// ---- documents ----

Json pose_to_json(const Pose& p) { return {{"x", p.point.real()}, {"y", p.point.imag()}, {"tau", p.tau}}; }

Pose pose_from_json(const Json& j) { return {Point(num(j, "x"), num(j, "y")), num(j, "tau")}; }

Json curve_to_json(const PiecewiseConstCurve& c)
{
    Json segs = Json::array();
    for (const auto& s : c.segments) segs.push_back({{"k", s.k}, {"l", s.l}});
    return {{"start", pose_to_json(c.start)}, {"segments", segs}};
}

PiecewiseConstCurve curve_from_json(const Json& j)
{
    PiecewiseConstCurve c;
    c.start = pose_from_json(field(j, "start"));
    const Json& segs = field(j, "segments");
    if (!segs.is_array() || segs.empty()) bad("'segments' must be a non-empty array");
    for (const auto& s : segs) {
        const double l = num(s, "l");
        if (!(l > 0.0)) bad("segment lengths must be positive");
        c.segments.push_back({num(s, "k"), l});
    }
    return c;
}

void JobOptions::apply_config(const Json& config)
{
    if (!config.is_object()) bad("config must be an object");
    if (config.contains("grid")) {
        if (!config.at("grid").is_number_integer()) bad("config 'grid' must be an integer");
        grid = config.at("grid").get<int>();
    }
    if (config.contains("tol")) tol = num(config, "tol");
    if (config.contains("mu_resolution")) mu_resolution = num(config, "mu_resolution");
    if (config.contains("out_csv")) out_csv = str(config, "out_csv", out_csv);
    if (config.contains("out_svg")) out_svg = str(config, "out_svg", out_svg);
}

void validate_input(const std::string& command, const Json& in)
{
    if (!in.is_object()) bad("input must be an object");
    const Json& v = field(in, "version");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
        bad("unsupported input version (expected " + std::to_string(kSchemaVersion) + ")");
    if (command == "approx" || command == "bounds" || command == "triarc") {
        if (in.contains("chord") == in.contains("curve")) bad("exactly one of 'chord' or 'curve' is required");
        if (in.contains("chord")) {
            const Json& c = in.at("chord");
            num(c, "c"), num(c, "alpha"), num(c, "beta");
            if (command == "triarc") num(c, "k1"), num(c, "k2");
            if (command == "approx") num(in, "length");
            if (command == "triarc" && !in.contains("t")) num(in, "length");
        } else {
            curve_from_json(in.at("curve"));
        }
        const std::string method = str(in, "method", "secant");
        if (method != "secant" && method != "bisection") bad("'method' must be 'secant' or 'bisection'");
        const std::string mode = str(in, "mode", "g2");
        if (mode != "g1" && mode != "g2") bad("'mode' must be 'g1' or 'g2'");
    } else if (command == "model") {
        const std::string mode = str(in, "mode", "endpoints");
        if (mode != "endpoints" && mode != "fixed_turning") bad("'mode' must be 'endpoints' or 'fixed_turning'");
        num(in, "k1"), num(in, "k2"), num(in, "L");
        if (mode == "fixed_turning") num(in, "theta");
    } else if (command == "oval") {
        num_list(in, "k", 4);
        num_list(in, "L", 4);
        const std::string p = str(in, "parameter", "mu");
        if (p != "mu" && p != "nu") bad("'parameter' must be 'mu' or 'nu'");
        if (in.contains("frames")) num_list(in, "frames", 0);
    } else {
        bad("unknown subcommand '" + command + "'");
    }
}

JobResult cmd_approx(const Json& in, const JobOptions& opt)
{
    const DataInput d = read_data(in);
    if (!d.length) bad("'length' is required");
    const double eps = eps_of(opt);
    const RootMethod method = str(in, "method", "secant") == "bisection" ? RootMethod::bisection : RootMethod::secant;
    const ApproxResult r = d.has_curvatures ? solve_length_biarc(d.data, *d.length, method, eps)
                                            : solve_length_biarc(d.data.chord, *d.length, method, eps);
    const PiecewiseConstCurve out = r.biarc.curve().transformed(d.to_world);

    JobResult res;
    res.document = {{"version", kSchemaVersion},
                    {"command", "approx"},
                    {"p0", r.p0},
                    {"q1", r.q1},
                    {"q2", r.q2},
                    {"length", r.biarc.length()},
                    {"residual", r.residual},
                    {"ill_conditioned", r.ill_conditioned},
                    {"biarc", curve_to_json(out)}};
    if (r.width_bound) res.document["width_bound"] = *r.width_bound;
    res.csv = segment_table(out).str();

    SvgCanvas svg;
    draw_lens(svg, d.data.chord, d.to_world);
    if (d.has_curvatures) draw_bilens(svg, d.data, d.to_world, eps);
    if (d.curve) svg.polyline(sample_curve(*d.curve), "#000000", 1.5);
    svg.polyline(sample_curve(out), "#d02020", 1.2);
    res.svgs.push_back(svg.str());
    return res;
}

JobResult cmd_bounds(const Json& in, const JobOptions& opt)
{
    const DataInput d = read_data(in);
    const double eps = eps_of(opt);
    const LengthBounds b = d.has_curvatures ? length_bounds(d.data, eps) : length_bounds(d.data.chord, eps);
    JobResult res;
    res.document = {{"version", kSchemaVersion},
                    {"command", "bounds"},
                    {"lower", b.lower},
                    {"upper", b.upper},
                    {"outer_lower", b.outer_lower},
                    {"outer_upper", b.outer_upper},
                    {"upper_is_outer", b.upper_is_outer}};
    CsvTable t;
    t.header = {"lower", "upper", "outer_lower", "outer_upper"};
    t.rows.push_back({b.lower, b.upper, b.outer_lower, b.outer_upper});
    if (d.has_curvatures) res.document["symmetry"] = to_string(normalize_case(d.data, eps).symmetry);
    if (d.length) {
        res.document["length"] = *d.length;
        res.document["within"] = b.lower <= *d.length && *d.length <= b.upper;
        t.header.push_back("length");
        t.rows.back().push_back(*d.length);
    }
    res.csv = t.str();
    return res;
}

JobResult cmd_triarc(const Json& in, const JobOptions& opt)
{
    const DataInput d = read_data(in);
    if (!d.has_curvatures) bad("triarc needs G2 data");
    const double eps = eps_of(opt);
    const auto t = opt_num(in, "t");
    if (!t && !d.length) bad("either 't' or 'length' is required");
    const Triarc tr = t ? inscribed_triarc(d.data, *t, std::nullopt, eps) : solve_length_triarc(d.data, *d.length, eps);
    const PiecewiseConstCurve out = tr.curve().transformed(d.to_world);

    JobResult res;
    res.document = {{"version", kSchemaVersion},
                    {"command", "triarc"},
                    {"t", tr.t},
                    {"branch", tr.branch == Branch::plus ? "plus" : "minus"},
                    {"length", tr.length()},
                    {"convex", tr.convex()},
                    {"monotone", tr.monotone()},
                    {"triarc", curve_to_json(out)}};
    res.csv = segment_table(out).str();
    SvgCanvas svg;
    draw_bilens(svg, d.data, d.to_world, eps);
    if (d.curve) svg.polyline(sample_curve(*d.curve), "#000000", 1.5);
    svg.polyline(sample_curve(out), "#d02020", 1.2);
    res.svgs.push_back(svg.str());
    return res;
}

JobResult cmd_model(const Json& in, const JobOptions& opt)
{
    const std::string mode = str(in, "mode", "endpoints");
    const double k1 = num(in, "k1"), k2 = num(in, "k2"), L = num(in, "L");
    const ModelOptions mo = model_options(opt);
    EndpointSet s;
    JobResult res;
    res.document = {{"version", kSchemaVersion}, {"command", "model"}, {"mode", mode}, {"k1", k1}, {"k2", k2}, {"L", L}};
    if (mode == "fixed_turning") {
        const double theta = num(in, "theta");
        s = fixed_turning_subset(k1, k2, L, theta, mo);
        res.document["theta"] = theta;
        res.document["meet"] = fixed_turning_meet(k1, k2, L, theta);
    } else {
        s = endpoint_set_spiral(k1, k2, L, mo);
    }
    // Enclosure is reported as data; the bounds are empirical.
    const double tol = opt.tol.value_or(1e-6) * L;
    std::size_t outside = 0;
    for (const Point& p : s.points)
        if (!s.region.contains(p) && s.region.distance(p) > tol) ++outside;
    Json names = Json::array();
    for (const auto& b : s.bounds) names.push_back(b.name);
    res.document["count"] = s.points.size();
    res.document["bounds"] = names;
    res.document["self_intersecting"] = s.region.self_intersecting;
    res.document["outside"] = outside;

    CsvTable t;
    t.header = {"x", "y"};
    t.header.insert(t.header.end(), s.param_names.begin(), s.param_names.end());
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        std::vector<double> row{s.points[i].real(), s.points[i].imag()};
        row.insert(row.end(), s.params_of(i), s.params_of(i) + s.stride());
        t.rows.push_back(std::move(row));
    }
    res.csv = t.str();
    SvgCanvas svg;
    svg.dots(s.points, "#4080c0", 0.6);
    const char* colors[] = {"#d02020", "#20a020"};
    for (std::size_t i = 0; i < s.bounds.size(); ++i) svg.polyline(s.bounds[i].points, colors[i % 2], 1.2);
    res.svgs.push_back(svg.str());
    return res;
}

JobResult cmd_oval(const Json& in, const JobOptions& opt)
{
    const auto k = num_list(in, "k", 4), L = num_list(in, "L", 4);
    OvalSpec spec{{k[0], k[1], k[2], k[3]}, {L[0], L[1], L[2], L[3]}};
    const SweepParameter param = str(in, "parameter", "mu") == "nu" ? SweepParameter::nu : SweepParameter::mu;
    const OvalOptions oo = oval_options(in, opt);
    const ClosenessReport rep = closeness_sweep(spec, oo, param);

    JobResult res;
    Json grid = Json::array();
    CsvTable t;
    t.header = {"mu", "intersects", "area"};
    for (const auto& s : rep.mu_grid) {
        grid.push_back({{"mu", s.mu}, {"intersects", s.intersects}, {"area", s.area}});
        t.rows.push_back({s.mu, s.intersects ? 1.0 : 0.0, s.area});
    }
    res.document = {{"version", kSchemaVersion},
                    {"command", "oval"},
                    {"parameter", to_string(param)},
                    {"k", k},
                    {"L", L},
                    {"range", {{"lo", rep.range.lo}, {"hi", rep.range.hi}}},
                    {"verdict", to_string(rep.verdict)},
                    {"contacts", rep.contacts},
                    {"mu_grid", grid}};
    res.csv = t.str();

    // Frames in units of pi; default is one frame between the contacts or mid-range.
    std::vector<double> frames;
    if (in.contains("frames")) {
        for (double f : num_list(in, "frames", 0)) frames.push_back(f * kPi);
    } else if (rep.contacts.size() >= 2) {
        frames.push_back(0.5 * (rep.contacts[0] + rep.contacts[1]));
    } else if (!rep.range.empty()) {
        frames.push_back(0.5 * (rep.range.lo + rep.range.hi));
    }
    const OvalSpec work = param == SweepParameter::mu ? spec : spec.rotated();
    for (double mu : frames) {
        SvgCanvas svg;
        for (auto o : {SetOrientation::first, SetOrientation::second}) {
            try {
                const EndpointSet s = one_vertex_endpoint_set(one_vertex_model(work, mu, o), oo);
                draw_set(svg, s, o == SetOrientation::first ? "#80a0e0" : "#e0a080",
                         o == SetOrientation::first ? "#2040a0" : "#a04020", 0.5);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::infeasible) throw;
            }
        }
        res.svgs.push_back(svg.str());
    }
    return res;
}

JobResult run_job(const std::string& command, const Json& input, const JobOptions& opt)
{
    try {
        validate_input(command, input);
        if (command == "approx") return cmd_approx(input, opt);
        if (command == "bounds") return cmd_bounds(input, opt);
        if (command == "triarc") return cmd_triarc(input, opt);
        if (command == "model") return cmd_model(input, opt);
        return cmd_oval(input, opt);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::invalid_data, std::string("malformed input: ") + e.what());
    }
}

int exit_code(const Error& e) { return is_numerical(e.code()) ? 3 : 2; }

std::string error_line(const Error& e)
{
    Json j = {{"error", to_string(e.code())}, {"message", e.what()}, {"exit", exit_code(e)}};
    if (const auto* lr = dynamic_cast<const LengthRangeError*>(&e)) {
        j["bound"] = lr->which() == LengthBound::below_lower ? "below_lower" : "above_upper";
        j["bound_value"] = lr->bound();
        j["length"] = lr->length();
    }
    return j.dump();
}

std::vector<std::string> frame_paths(const std::string& path, std::size_t frames)
{
    if (frames == 1) return {path};
    const std::filesystem::path p(path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < frames; ++i) {
        std::filesystem::path q = p.parent_path() / (p.stem().string() + "_" + std::to_string(i) + p.extension().string());
        out.push_back(q.string());
    }
    return out;
}

} // namespace arclen

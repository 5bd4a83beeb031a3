#pragma once

#include "arclen/curve.hpp"
#include "arclen/error.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace arclen {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// ---- CSV ----

// Fixed 17-significant-digit form; round-trips through parse_number.
std::string format_number(double x);
double parse_number(const std::string& s);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string str() const;
    bool operator==(const CsvTable&) const = default;
};

// Throws invalid_data on ragged rows or non-numeric cells.
CsvTable parse_csv(const std::string& text);

// ---- SVG ----

// y-up drawing; the emitted group flips y so figures keep their orientation.
class SvgCanvas {
public:
    void polyline(const std::vector<Point>& pts, const std::string& stroke, double width = 1.0,
                  bool closed = false);
    void dots(const std::vector<Point>& pts, const std::string& fill, double radius = 1.0);
    std::string str() const;

private:
    struct Item {
        enum Kind { line, dot } kind;
        std::vector<Point> pts;
        std::string color;
        double size;
        bool closed;
    };
    std::vector<Item> items_;
};

// ---- documents ----

Json pose_to_json(const Pose& p);
Pose pose_from_json(const Json& j);
Json curve_to_json(const PiecewiseConstCurve& c);
PiecewiseConstCurve curve_from_json(const Json& j);

struct JobOptions {
    std::optional<int> grid;
    std::optional<double> tol;
    std::optional<double> mu_resolution; // radians
    std::string out_csv;
    std::string out_svg;

    // Keys grid, tol, mu_resolution, out_csv, out_svg override the current values.
    void apply_config(const Json& config);
};

struct JobResult {
    Json document;
    std::string csv;
    std::vector<std::string> svgs;
};

// Checks version and required fields for the subcommand; throws invalid_data.
void validate_input(const std::string& command, const Json& input);

JobResult cmd_approx(const Json& input, const JobOptions& opt);
JobResult cmd_bounds(const Json& input, const JobOptions& opt);
JobResult cmd_triarc(const Json& input, const JobOptions& opt);
JobResult cmd_model(const Json& input, const JobOptions& opt);
JobResult cmd_oval(const Json& input, const JobOptions& opt);

// Validates, then dispatches by name.
JobResult run_job(const std::string& command, const Json& input, const JobOptions& opt);

// 2 for validation errors, 3 for numerical failures.
int exit_code(const Error& e);
// Single-line machine-readable error record.
std::string error_line(const Error& e);

// Output file names: the path itself for one frame, stem_i.ext for several.
std::vector<std::string> frame_paths(const std::string& path, std::size_t frames);

} // namespace arclen

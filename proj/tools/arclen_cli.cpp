#include "arclen/cli_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw arclen::Error(arclen::ErrorCode::invalid_data, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw arclen::Error(arclen::ErrorCode::invalid_data, "cannot write '" + path + "'");
    out << text;
}

arclen::Json parse_json(const std::string& text, const std::string& what)
{
    try {
        return arclen::Json::parse(text);
    } catch (const arclen::Json::exception& e) {
        throw arclen::Error(arclen::ErrorCode::invalid_data, what + " is not valid JSON: " + e.what());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Length-preserving arc spline approximation and oval modelling"};
    app.require_subcommand(1);

    std::string input_path, config_path, out_csv, out_svg;
    int grid = 0;
    double tol = 0.0, mu_resolution = 0.0;
    std::vector<CLI::App*> subs;
    for (const char* name : {"approx", "bounds", "triarc", "model", "oval"}) {
        CLI::App* s = app.add_subcommand(name);
        s->add_option("--input", input_path, "JSON input document (- for stdin)")->required();
        s->add_option("--out-csv", out_csv, "CSV output path");
        s->add_option("--out-svg", out_svg, "SVG output path");
        s->add_option("--grid", grid, "grid steps per parameter")->check(CLI::PositiveNumber);
        s->add_option("--tol", tol, "numerical tolerance")->check(CLI::PositiveNumber);
        s->add_option("--mu-resolution", mu_resolution, "contact resolution in radians")->check(CLI::PositiveNumber);
        s->add_option("--config", config_path, "JSON config; its keys override flags");
        subs.push_back(s);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string command;
        for (auto* s : subs)
            if (s->parsed()) command = s->get_name();

        arclen::JobOptions opt;
        opt.out_csv = out_csv;
        opt.out_svg = out_svg;
        if (grid > 0) opt.grid = grid;
        if (tol > 0.0) opt.tol = tol;
        if (mu_resolution > 0.0) opt.mu_resolution = mu_resolution;
        if (!config_path.empty()) opt.apply_config(parse_json(read_file(config_path), "config"));

        std::string text;
        if (input_path == "-") {
            std::ostringstream s;
            s << std::cin.rdbuf();
            text = s.str();
        } else {
            text = read_file(input_path);
        }
        const arclen::JobResult r = arclen::run_job(command, parse_json(text, "input"), opt);
        if (!opt.out_csv.empty() && !r.csv.empty()) write_file(opt.out_csv, r.csv);
        if (!opt.out_svg.empty() && !r.svgs.empty()) {
            const auto paths = arclen::frame_paths(opt.out_svg, r.svgs.size());
            for (std::size_t i = 0; i < paths.size(); ++i) write_file(paths[i], r.svgs[i]);
        }
        std::cout << r.document.dump(2) << '\n';
        return 0;
    } catch (const arclen::Error& e) {
        std::cerr << arclen::error_line(e) << '\n';
        return arclen::exit_code(e);
    } catch (const std::exception& e) {
        const arclen::Error wrapped(arclen::ErrorCode::numerical, e.what());
        std::cerr << arclen::error_line(wrapped) << '\n';
        return 3;
    }
}

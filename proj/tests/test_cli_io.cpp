#include "support.hpp"

#include "arclen/approx_solver.hpp"
#include "arclen/cli_io.hpp"
#include "arclen/curve_model.hpp"
#include "arclen/oval_closeness.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace arclen;
using namespace arclen::test;

namespace {

namespace fs = std::filesystem;

std::string read_text(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json read_fixture(const std::string& name) { return Json::parse(read_text(fs::path(ARCLEN_TEST_DATA) / name)); }

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the CLI binary; stderr is redirected to err_path when given.
RunResult run_cli(const std::string& args, const std::string& err_path = "/dev/null")
{
    const std::string cmd = std::string(ARCLEN_CLI_PATH) + " " + args + " 2>" + err_path;
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

fs::path scratch_dir()
{
    const fs::path d = fs::temp_directory_path() / ("arclen_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

const Json kWorkedChord = {{"c", 1.0}, {"alpha", -0.3}, {"beta", 0.9}, {"k1", 0.05}, {"k2", 1.4}};

} // namespace

// ==== CSV ====

TEST(CsvFormat, NumbersRoundTrip)
{
    Rng rng(kSeed);
    for (int i = 0; i < 2000; ++i) {
        const double x = std::ldexp(uniform(rng, -1.0, 1.0), static_cast<int>(uniform(rng, -60.0, 60.0)));
        EXPECT_EQ(parse_number(format_number(x)), x);
    }
    EXPECT_EQ(parse_number(format_number(0.1)), 0.1);
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
}

TEST(CsvFormat, TableRoundTrip)
{
    CsvTable t;
    t.header = {"a", "b", "c"};
    t.rows = {{1.0, -2.5, 1e-300}, {kPi, std::sqrt(2.0), 0.0}};
    EXPECT_EQ(parse_csv(t.str()), t);
}

TEST(CsvFormat, RejectsRaggedAndNonNumeric)
{
    EXPECT_THROW(parse_csv("a,b\n1,2\n3\n"), Error);
    EXPECT_THROW(parse_csv("a,b\n1,x\n"), Error);
    EXPECT_THROW(parse_number("1.5abc"), Error);
}

// ==== documents ====

TEST(Documents, CurveRoundTrip)
{
    const PiecewiseConstCurve c({Point(0.5, -0.25), 0.3}, {{0.2, 1.0}, {0.6, 0.8}, {1.1, 0.7}});
    const PiecewiseConstCurve back = curve_from_json(Json::parse(curve_to_json(c).dump()));
    EXPECT_EQ(back.start.point, c.start.point);
    EXPECT_EQ(back.start.tau, c.start.tau);
    ASSERT_EQ(back.segments.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(back.segments[i].k, c.segments[i].k);
        EXPECT_EQ(back.segments[i].l, c.segments[i].l);
    }
    EXPECT_THROW(curve_from_json(Json::parse(R"({"start":{"x":0,"y":0,"tau":0},"segments":[]})")), Error);
    EXPECT_THROW(curve_from_json(Json::parse(R"({"start":{"x":0,"y":0,"tau":0},"segments":[{"k":1,"l":-1}]})")),
                 Error);
}

TEST(Documents, EmittedDocumentsReparseEqual)
{
    const JobOptions opt;
    for (const char* name : {"approx_g2", "approx_g1", "approx_curve", "bounds_g2", "triarc_mid"}) {
        const std::string cmd = std::string(name).substr(0, std::string(name).find('_'));
        const JobResult r = run_job(cmd, read_fixture(std::string(name) + ".json"), opt);
        EXPECT_EQ(Json::parse(r.document.dump()), r.document) << name;
        EXPECT_EQ(parse_csv(r.csv).str(), r.csv) << name;
        EXPECT_EQ(r.document.at("version"), kSchemaVersion);
    }
}

// ==== golden fixtures ====

TEST(Golden, CsvMatchesFixtures)
{
    for (const char* name : {"approx_g2", "approx_g1", "approx_curve", "bounds_g2", "triarc_mid"}) {
        const std::string cmd = std::string(name).substr(0, std::string(name).find('_'));
        const JobResult r = run_job(cmd, read_fixture(std::string(name) + ".json"), {});
        EXPECT_EQ(r.csv, read_text(fs::path(ARCLEN_TEST_DATA) / (std::string(name) + ".csv"))) << name;
    }
}

TEST(Golden, ApproxDocumentsAgreeWithTheLibrary)
{
    const JobResult r = run_job("approx", read_fixture("approx_g2.json"), {});
    const ApproxResult a = solve_length_biarc(G2ChordData(1.0, -0.3, 0.9, 0.05, 1.4), 2.13);
    EXPECT_EQ(r.document.at("p0").get<double>(), a.p0);
    EXPECT_EQ(r.document.at("width_bound").get<double>(), *a.width_bound);
    const PiecewiseConstCurve c = curve_from_json(r.document.at("biarc"));
    EXPECT_NEAR(c.length(), 2.13, 1e-12);
    EXPECT_NEAR(c.turning(), 1.2, 1e-12);
}

TEST(Determinism, IdenticalInputsGiveIdenticalCsv)
{
    const Json model = {{"version", 1}, {"mode", "endpoints"}, {"k1", 0.2}, {"k2", 1.3}, {"L", 4.0}};
    JobOptions opt;
    opt.grid = 10;
    EXPECT_EQ(run_job("model", model, opt).csv, run_job("model", model, opt).csv);
    const Json approx = read_fixture("approx_curve.json");
    EXPECT_EQ(run_job("approx", approx, {}).csv, run_job("approx", approx, {}).csv);
}

// ==== validation ====

TEST(Validation, VersionAndFields)
{
    Json in = read_fixture("approx_g2.json");
    in["version"] = 2;
    EXPECT_THROW(validate_input("approx", in), Error);
    in.erase("version");
    EXPECT_THROW(validate_input("approx", in), Error);
    EXPECT_THROW(validate_input("approx", Json{{"version", 1}, {"chord", kWorkedChord}}), Error);
    EXPECT_THROW(validate_input("frobnicate", Json{{"version", 1}}), Error);
    EXPECT_THROW(validate_input("oval", Json{{"version", 1}, {"k", {1, 2, 3}}, {"L", {1, 1, 1, 1}}}), Error);
    EXPECT_THROW(validate_input("model", Json{{"version", 1}, {"mode", "fixed_turning"}, {"k1", 0.2}, {"k2", 1.3},
                                              {"L", 4.0}}),
                 Error);
    EXPECT_NO_THROW(validate_input("approx", read_fixture("approx_g2.json")));
}

TEST(Validation, ExitCodesAndErrorLine)
{
    const Error bad(ErrorCode::invalid_data, "broken");
    EXPECT_EQ(exit_code(bad), 2);
    EXPECT_EQ(exit_code(Error(ErrorCode::no_root, "none")), 3);
    const Json j = Json::parse(error_line(bad));
    EXPECT_EQ(j.at("error"), "invalid_data");
    EXPECT_EQ(j.at("exit"), 2);
    EXPECT_EQ(error_line(bad).find('\n'), std::string::npos);
    try {
        run_job("approx", Json{{"version", 1}, {"chord", kWorkedChord}, {"length", 2.3}}, {});
        FAIL() << "expected a length range error";
    } catch (const Error& e) {
        const Json k = Json::parse(error_line(e));
        EXPECT_EQ(k.at("bound"), "above_upper");
        EXPECT_NEAR(k.at("bound_value").get<double>(), 2.1465217311346105, 1e-12);
    }
}

TEST(Validation, ConfigOverrides)
{
    JobOptions opt;
    opt.grid = 5;
    opt.apply_config(Json{{"grid", 9}, {"tol", 1e-8}, {"out_csv", "x.csv"}});
    EXPECT_EQ(opt.grid, 9);
    EXPECT_EQ(opt.tol, 1e-8);
    EXPECT_EQ(opt.out_csv, "x.csv");
    EXPECT_THROW(opt.apply_config(Json{{"grid", 1.5}}), Error);
    EXPECT_THROW(opt.apply_config(Json::array()), Error);
}

TEST(FramePaths, SingleAndNumbered)
{
    EXPECT_EQ(frame_paths("out/f.svg", 1), std::vector<std::string>{"out/f.svg"});
    EXPECT_EQ(frame_paths("out/f.svg", 3), (std::vector<std::string>{"out/f_0.svg", "out/f_1.svg", "out/f_2.svg"}));
}

// ==== commands ====

TEST(Commands, ModelReportsCloudAndBounds)
{
    JobOptions opt;
    opt.grid = 12;
    const JobResult r =
        run_job("model", Json{{"version", 1}, {"mode", "endpoints"}, {"k1", 0.2}, {"k2", 1.3}, {"L", 4.0}}, opt);
    EXPECT_EQ(r.document.at("outside"), 0);
    EXPECT_EQ(r.document.at("bounds"), Json({"gamma1", "gamma2"}));
    const CsvTable t = parse_csv(r.csv);
    EXPECT_EQ(t.header, (std::vector<std::string>{"x", "y", "q1", "q2", "l1"}));
    EXPECT_EQ(t.rows.size(), r.document.at("count").get<std::size_t>());
    ASSERT_EQ(r.svgs.size(), 1u);
    EXPECT_NE(r.svgs[0].find("<svg"), std::string::npos);

    const JobResult f = run_job("model",
                                Json{{"version", 1}, {"mode", "fixed_turning"}, {"k1", 0.2}, {"k2", 1.3}, {"L", 4.0},
                                     {"theta", 2.5}},
                                opt);
    EXPECT_NEAR(f.document.at("meet").get<double>(), fixed_turning_meet(0.2, 1.3, 4.0, 2.5), 0.0);
}

TEST(Commands, OvalOnTheSymmetricCase)
{
    JobOptions opt;
    opt.grid = 6;
    const Json in = {{"version", 1},  {"k", {0.3, 2.0, 0.3, 2.0}}, {"L", {1, 1, 1, 1}}, {"mu_step", 0.05},
                     {"frames", {1.0}}};
    const JobResult r = run_job("oval", in, opt);
    const AngleRange want = natural_symmetric_range(0.3, 2.0);
    EXPECT_NEAR(r.document.at("range").at("lo").get<double>(), want.lo, 1e-15);
    EXPECT_NEAR(r.document.at("range").at("hi").get<double>(), want.hi, 1e-15);
    EXPECT_EQ(r.svgs.size(), 1u);
    const CsvTable t = parse_csv(r.csv);
    EXPECT_EQ(t.rows.size(), r.document.at("mu_grid").size());
    for (const auto& row : t.rows) EXPECT_TRUE(want.contains(row[0]));
}

TEST(Commands, TriarcByLength)
{
    Json in = {{"version", 1}, {"chord", kWorkedChord}, {"length", 2.13}};
    const JobResult r = run_job("triarc", in, {});
    EXPECT_NEAR(r.document.at("length").get<double>(), 2.13, 1e-9);
    EXPECT_TRUE(r.document.at("monotone").get<bool>());
}

// ==== binary ====

TEST(Binary, SuccessWritesOutputs)
{
    const fs::path dir = scratch_dir();
    const fs::path csv = dir / "a.csv", svg = dir / "a.svg";
    const RunResult r = run_cli("approx --input " + (fs::path(ARCLEN_TEST_DATA) / "approx_g2.json").string() +
                                " --out-csv " + csv.string() + " --out-svg " + svg.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(Json::parse(r.out).at("command"), "approx");
    EXPECT_EQ(read_text(csv), read_text(fs::path(ARCLEN_TEST_DATA) / "approx_g2.csv"));
    EXPECT_NE(read_text(svg).find("<svg"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Binary, ValidationFailureExitsTwoWithErrorLine)
{
    const fs::path dir = scratch_dir();
    const fs::path in = dir / "bad.json", err = dir / "err.txt";
    std::ofstream(in) << R"({"version":7,"chord":{"c":1,"alpha":0,"beta":0.5},"length":2})";
    const RunResult r = run_cli("approx --input " + in.string(), err.string());
    EXPECT_EQ(r.status, 2);
    const Json e = Json::parse(read_text(err));
    EXPECT_EQ(e.at("error"), "invalid_data");
    EXPECT_EQ(e.at("exit"), 2);
    EXPECT_EQ(run_cli("approx").status, 2);
    fs::remove_all(dir);
}

TEST(Binary, ConfigOverridesFlags)
{
    const fs::path dir = scratch_dir();
    const fs::path cfg = dir / "cfg.json", flag_csv = dir / "flag.csv", cfg_csv = dir / "cfg.csv";
    std::ofstream(cfg) << Json{{"out_csv", cfg_csv.string()}}.dump();
    const RunResult r = run_cli("bounds --input " + (fs::path(ARCLEN_TEST_DATA) / "bounds_g2.json").string() +
                                " --out-csv " + flag_csv.string() + " --config " + cfg.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(fs::exists(cfg_csv));
    EXPECT_FALSE(fs::exists(flag_csv));
    fs::remove_all(dir);
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "gaugewheel/commands.hpp"
#include "gaugewheel/io.hpp"
#include "gaugewheel/sampler.hpp"
#include "gaugewheel/scenario.hpp"

namespace gaugewheel {
namespace {

namespace fs = std::filesystem;

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("gaugewheel_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

/// CSV text with the t_s column (fourth) removed.
std::string without_time(const std::string& csv) {
    std::stringstream in(csv);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) start = line.find(',', start) + 1;
        const std::size_t end = line.find(',', start);
        out += line.substr(0, start) + line.substr(end + 1) + "\n";
    }
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// fig1 on a coarse grid, saved to a scenario file.
fs::path small_scenario(const fs::path& dir, const std::string& name = "fig1-rotating") {
    Scenario s = preset(name);
    s.grid.r.count = 12;
    s.grid.phi.count = 10;
    const fs::path p = dir / "scenario.json";
    save_scenario(s, p);
    return p;
}

struct CmdResult {
    int code;
    std::string out;
    std::string err;
};

template <typename F>
CmdResult run(F cmd, const CommandOptions& o) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cmd(o, out, err);
    return {code, out.str(), err.str()};
}

TEST(CmdValidate, Fig1PassesAndWritesReports) {
    const fs::path dir = temp_dir("validate");
    CommandOptions o;
    o.preset = "fig1";
    o.out = dir;
    const CmdResult r = run(cmd_validate, o);
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_NE(r.out.find("closed_b_vs_general"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "validation_report.kv"));
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
    const std::string kv = read_file(dir / "validation_report.kv");
    EXPECT_NE(kv.find("closed_b_vs_general.passed=1"), std::string::npos);
    EXPECT_NE(kv.find("overall.passed=1"), std::string::npos);
}

TEST(CmdValidate, CorruptedClosedFormFails) {
    CommandOptions o;
    o.preset = "fig1";
    o.n_points = 200;
    o.closed_form_corruption = 1e-6;
    const CmdResult r = run(cmd_validate, o);
    EXPECT_EQ(r.code, kExitTolerance);
    EXPECT_NE(r.out.find("[FAIL] closed_b_vs_general"), std::string::npos);
}

TEST(CmdValidate, ConfigErrors) {
    CommandOptions o;
    o.scenario = "/nonexistent/scenario.json";
    EXPECT_EQ(run(cmd_validate, o).code, kExitConfig);
    CommandOptions none;
    EXPECT_EQ(run(cmd_validate, none).code, kExitConfig);
    CommandOptions both;
    both.preset = "fig1";
    both.scenario = "x.json";
    EXPECT_EQ(run(cmd_validate, both).code, kExitConfig);
    CommandOptions bad;
    bad.preset = "nope";
    EXPECT_EQ(run(cmd_info, bad).code, kExitConfig);
}

TEST(CmdSample, WritesDeterministicCsvAndManifest) {
    const fs::path dir = temp_dir("sample");
    CommandOptions o;
    o.scenario = small_scenario(dir);
    o.field = "E";
    o.time = 1e-9;
    o.out = dir / "a.csv";
    o.workers = 1;
    ASSERT_EQ(run(cmd_sample, o).code, kExitOk);
    o.out = dir / "b.csv";
    o.workers = 16;
    ASSERT_EQ(run(cmd_sample, o).code, kExitOk);
    const std::string a = read_file(dir / "a.csv");
    EXPECT_EQ(a, read_file(dir / "b.csv"));
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 121);
    const auto manifest = nlohmann::json::parse(read_file(dir / "a.csv.manifest.json"));
    EXPECT_EQ(manifest["outputs"][0]["sha256"], sha256_hex(a));
    EXPECT_EQ(manifest["scenario"]["beam"]["winding"], 1);
    EXPECT_EQ(manifest["tool_version"], kToolVersion);
}

TEST(CmdSample, Errors) {
    const fs::path dir = temp_dir("sample_err");
    CommandOptions o;
    o.preset = "fig1";
    o.field = "Q";
    o.out = dir / "x.csv";
    EXPECT_EQ(run(cmd_sample, o).code, kExitConfig);
    o.field = "B";
    o.out.reset();
    EXPECT_EQ(run(cmd_sample, o).code, kExitConfig);
    o.scenario = small_scenario(dir);
    o.preset.reset();
    o.out = "/proc/forbidden/x.csv";
    const CmdResult r = run(cmd_sample, o);
    EXPECT_EQ(r.code, kExitConfig);
    EXPECT_NE(r.err.find("/proc/forbidden"), std::string::npos);
}

TEST(CmdLines, SeedsAndWarnings) {
    const fs::path dir = temp_dir("lines");
    CommandOptions o;
    o.scenario = small_scenario(dir, "fig1");
    o.out = dir / "lines.csv";
    o.seeds = "0.6,0.3;1.5,2.0";
    o.max_steps = 200;
    CmdResult r = run(cmd_lines, o);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const std::string csv = read_file(dir / "lines.csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "line_id,point_index,r_m,phi_rad,z_m");
    EXPECT_NE(csv.find("\n1,200,"), std::string::npos);

    o.seeds = "none";
    r = run(cmd_lines, o);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_EQ(read_file(dir / "lines.csv"), "line_id,point_index,r_m,phi_rad,z_m\n");

    // B vanishes at φ = 0 on the zero circle r = w0/√2.
    o.seeds = "1.5,2.0;0.7071067811865476,0";
    r = run(cmd_lines, o);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("null field"), std::string::npos);

    o.seeds = "0,1";
    EXPECT_EQ(run(cmd_lines, o).code, kExitConfig);
    o.seeds = "auto:3";
    o.field = "V";
    EXPECT_EQ(run(cmd_lines, o).code, kExitConfig);
}

TEST(CmdAnimate, FramesMatchSampleAndPeriod) {
    const fs::path dir = temp_dir("animate");
    const fs::path scenario = small_scenario(dir);
    const Scenario s = load_scenario(scenario);
    CommandOptions o;
    o.scenario = scenario;
    o.field = "B";
    o.out = dir / "frames";
    o.frames = 3;
    o.t_start = 0.0;
    o.t_end = 2.0 * rotation_period(s.beam);
    ASSERT_EQ(run(cmd_animate, o).code, kExitOk);
    EXPECT_TRUE(fs::exists(dir / "frames" / "frame_0002.csv"));
    EXPECT_TRUE(fs::exists(dir / "frames" / "manifest.json"));
    // 0, T, 2T: field columns repeat bit-for-bit after each rotation period.
    const std::string f0 = read_file(dir / "frames" / "frame_0000.csv");
    EXPECT_EQ(without_time(f0), without_time(read_file(dir / "frames" / "frame_0001.csv")));
    EXPECT_EQ(without_time(f0), without_time(read_file(dir / "frames" / "frame_0002.csv")));
    EXPECT_NE(f0, read_file(dir / "frames" / "frame_0001.csv"));

    CommandOptions single = o;
    single.out = dir / "single";
    single.frames = 1;
    single.t_start = 3e-9;
    ASSERT_EQ(run(cmd_animate, single).code, kExitOk);
    CommandOptions sample;
    sample.scenario = scenario;
    sample.field = "B";
    sample.time = 3e-9;
    sample.out = dir / "sample.csv";
    ASSERT_EQ(run(cmd_sample, sample).code, kExitOk);
    EXPECT_EQ(read_file(dir / "single" / "frame_0000.csv"), read_file(dir / "sample.csv"));
}

TEST(CmdAnimate, WarnsWhenStatic) {
    const fs::path dir = temp_dir("animate_static");
    CommandOptions o;
    o.scenario = small_scenario(dir, "fig1");
    o.out = dir / "frames";
    o.frames = 2;
    const CmdResult r = run(cmd_animate, o);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("static"), std::string::npos);
    o.frames = 0;
    EXPECT_EQ(run(cmd_animate, o).code, kExitConfig);
}

TEST(CmdInfo, ReportsDerivedQuantities) {
    CommandOptions o;
    o.preset = "fig1";
    CmdResult r = run(cmd_info, o);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("0 (static)"), std::string::npos);
    EXPECT_NE(r.out.find("(1/Gamma)"), std::string::npos);
    o.preset = "fig1-rotating";
    r = run(cmd_info, o);
    EXPECT_NE(r.out.find("(2 Gamma)"), std::string::npos);
}

}  // namespace
}  // namespace gaugewheel

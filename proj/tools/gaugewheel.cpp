#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gaugewheel/commands.hpp"
#include "gaugewheel/io.hpp"
#include "gaugewheel/parallel.hpp"
#include "gaugewheel/scenario.hpp"

namespace gw = gaugewheel;

namespace {

void add_scenario_options(CLI::App* cmd, gw::CommandOptions& o) {
    cmd->add_option("--scenario", o.scenario, "scenario JSON file");
    std::string names;
    for (const auto& n : gw::preset_names()) names += (names.empty() ? "" : ", ") + n;
    cmd->add_option("--preset", o.preset, "named preset (" + names + ")");
    cmd->add_option("--seed", o.seed, "override the scenario seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artificial gauge fields of an optical Ferris wheel"};
    app.set_version_flag("--version", std::string(gw::kToolVersion));
    app.require_subcommand(1);

    gw::CommandOptions o;

    auto* validate = app.add_subcommand("validate", "run the comparison suite; exit 1 on tolerance failure");
    add_scenario_options(validate, o);
    validate->add_option("--out", o.out, "directory for report files");
    validate->add_option("--points", o.n_points, "points per comparison")->check(CLI::PositiveNumber);

    auto* sample = app.add_subcommand("sample", "sample a field on the scenario grid to CSV");
    add_scenario_options(sample, o);
    sample->add_option("--field", o.field, "B, E, A, V or rabi")->capture_default_str();
    sample->add_option("--time", o.time, "time in seconds")->capture_default_str();
    sample->add_option("--out", o.out, "output CSV path")->required();

    auto* lines = app.add_subcommand("lines", "trace field lines to CSV");
    add_scenario_options(lines, o);
    lines->add_option("--field", o.field, "B or E")->capture_default_str();
    lines->add_option("--time", o.time, "time in seconds")->capture_default_str();
    lines->add_option("--seeds", o.seeds, "auto:N, none, or r/w0,phi[,z/w0];...")->capture_default_str();
    lines->add_option("--step", o.step, "step length in waists (default 0.005)");
    lines->add_option("--max-steps", o.max_steps, "steps per line")->capture_default_str();
    lines->add_option("--out", o.out, "output CSV path")->required();

    auto* animate = app.add_subcommand("animate", "export a sequence of frames over time");
    add_scenario_options(animate, o);
    animate->add_option("--field", o.field, "B, E, A, V or rabi")->capture_default_str();
    animate->add_option("--frames", o.frames, "number of frames (default: scenario time grid)");
    animate->add_option("--t-start", o.t_start, "first frame time in seconds");
    animate->add_option("--t-end", o.t_end, "last frame time in seconds");
    animate->add_option("--out", o.out, "output directory")->required();

    auto* info = app.add_subcommand("info", "print derived quantities and validity checks");
    add_scenario_options(info, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : gw::kExitConfig;
    }

    o.workers = gw::default_worker_count();
    if (*validate) return gw::cmd_validate(o, std::cout, std::cerr);
    if (*sample) return gw::cmd_sample(o, std::cout, std::cerr);
    if (*lines) return gw::cmd_lines(o, std::cout, std::cerr);
    if (*animate) return gw::cmd_animate(o, std::cout, std::cerr);
    if (*info) return gw::cmd_info(o, std::cout, std::cerr);
    return gw::kExitConfig;
}

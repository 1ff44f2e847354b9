#include "gaugewheel/scenario.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"

namespace gaugewheel {

using nlohmann::json;

double AxisRange::at(std::size_t i) const {
    if (count <= 1) return min;
    return min + (max - min) * (static_cast<double>(i) / static_cast<double>(count - 1));
}

double GridSpec::phi_at(std::size_t j) const {
    return phi.min + (phi.max - phi.min) * (static_cast<double>(j) / static_cast<double>(phi.count));
}

void GridSpec::validate() const {
    auto fail = [](const std::string& what) { throw InvalidConfig("grid: " + what); };
    for (const AxisRange* axis : {&r, &phi, &z, &t}) {
        if (axis->count < 1) fail("every axis needs at least one point");
        if (!std::isfinite(axis->min) || !std::isfinite(axis->max)) fail("axis bounds must be finite");
        if (axis->max < axis->min) fail("axis max must be >= min");
    }
    if (!(r.min > 0.0)) fail("r_min must be > 0 (fields are singular-free but undefined on the axis)");
}

void Scenario::validate() const {
    beam.validate();
    atom.validate();
    grid.validate();
}

namespace {

Scenario base_scenario(std::string label, int winding) {
    Scenario s;
    s.label = std::move(label);
    s.beam.wavelength = cs133::wavelength;
    s.beam.waist = 5e-6;
    s.beam.winding = winding;
    s.beam.radial_index = 0;
    s.beam.peak_rabi = 10.0 * cs133::linewidth;
    s.beam.freq_shift = 0.0;
    s.atom.transition = cs133::transition;
    s.atom.linewidth = cs133::linewidth;
    s.atom.detuning = 100.0 * cs133::linewidth;
    s.atom.mass = cs133::mass;
    s.atom.charge = constants::elementary_charge;
    s.atom.saturation_intensity = cs133::saturation_intensity;
    s.atom.transition_frequency = cs133::transition_frequency;
    s.grid.r = {0.05 * s.beam.waist, 3.0 * s.beam.waist, 200};
    s.grid.phi = {0.0, constants::two_pi, 200};
    s.grid.z = {0.0, 0.0, 1};
    s.grid.t = {0.0, 0.0, 1};
    return s;
}

Scenario rotating(Scenario s) {
    s.label += "-rotating";
    s.beam.freq_shift = 4.0 * s.beam.abs_winding() * s.atom.linewidth;
    s.grid.t = {0.0, rotation_period(s.beam), 25};
    return s;
}

const char* to_string(LgNormalization n) { return n == LgNormalization::standard ? "standard" : "as_printed"; }
const char* to_string(FieldConvention c) { return c == FieldConvention::standard ? "standard" : "as_printed"; }

LgNormalization parse_normalization(const std::string& s) {
    if (s == "as_printed") return LgNormalization::as_printed;
    if (s == "standard") return LgNormalization::standard;
    throw InvalidConfig("beam.normalization must be \"as_printed\" or \"standard\", got \"" + s + "\"");
}

FieldConvention parse_convention(const std::string& s) {
    if (s == "standard") return FieldConvention::standard;
    if (s == "as_printed") return FieldConvention::as_printed;
    throw InvalidConfig("convention must be \"standard\" or \"as_printed\", got \"" + s + "\"");
}

/// Reads `<stem>_<si_suffix>` or `<stem>_<relative_suffix>` × scale; exactly one must be present
/// unless a fallback is supplied.
double read_quantity(const json& section, const std::string& section_name, const std::string& stem,
                     const std::string& si_suffix, const std::string& relative_suffix, double scale,
                     std::optional<double> fallback = std::nullopt) {
    const std::string si_key = stem + "_" + si_suffix;
    const std::string rel_key = stem + "_" + relative_suffix;
    const bool has_si = section.contains(si_key);
    const bool has_rel = !relative_suffix.empty() && section.contains(rel_key);
    if (has_si && has_rel) {
        throw InvalidConfig(fmt::format("{}: give either {} or {}, not both", section_name, si_key, rel_key));
    }
    if (has_si) return section.at(si_key).get<double>();
    if (has_rel) return section.at(rel_key).get<double>() * scale;
    if (fallback) return *fallback;
    throw InvalidConfig(fmt::format("{}: missing {}{}", section_name, si_key,
                                    relative_suffix.empty() ? "" : " (or " + rel_key + ")"));
}

AxisRange read_axis(const json& grid, const std::string& name, const std::string& unit, const std::string& rel,
                    double scale, AxisRange fallback) {
    AxisRange a;
    a.min = read_quantity(grid, "grid", name + "_min", unit, rel, scale, fallback.min);
    a.max = read_quantity(grid, "grid", name + "_max", unit, rel, scale, fallback.max);
    a.count = grid.value("n_" + name, fallback.count);
    return a;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig1", "fig3", "fig1-rotating", "fig3-rotating", "custom-template"};
}

Scenario preset(std::string_view name) {
    if (name == "fig1") return base_scenario("fig1", 1);
    if (name == "fig3") return base_scenario("fig3", 2);
    if (name == "fig1-rotating") return rotating(base_scenario("fig1", 1));
    if (name == "fig3-rotating") return rotating(base_scenario("fig3", 2));
    if (name == "custom-template") return base_scenario("custom", 1);
    throw UnknownPreset(fmt::format("unknown preset \"{}\" (known: fig1, fig3, fig1-rotating, fig3-rotating, "
                                    "custom-template)",
                                    name));
}

ValidityReport validate_scenario(const Scenario& s, bool large_detuning_requested) {
    ValidityReport report;
    const double gamma = s.atom.linewidth;
    report.interaction_time_limit = gamma > 0.0 ? 1.0 / gamma : 0.0;
    report.rotating = s.beam.freq_shift != 0.0 && s.beam.winding != 0;
    if (report.rotating) {
        report.rotation_frequency = rotation_frequency(s.beam);
        const double rot = std::abs(report.rotation_frequency);
        const double l = s.beam.abs_winding();
        const double shift = std::abs(s.beam.freq_shift);
        if (rot <= gamma) {
            report.adiabatic_window_ok = false;
            report.warnings.push_back(fmt::format(
                "rotation frequency {:.4g} Gamma does not exceed Gamma: the pattern completes less than a radian "
                "within the coherence time 1/Gamma",
                rot / gamma));
        }
        if (rot >= s.beam.peak_rabi) {
            report.adiabatic_window_ok = false;
            report.warnings.push_back(fmt::format(
                "rotation frequency {:.4g} Gamma is not below the peak Rabi frequency {:.4g} Gamma: adiabatic "
                "following is not guaranteed",
                rot / gamma, s.beam.peak_rabi / gamma));
        }
        if (!(shift > 2.0 * l * gamma && shift < 20.0 * l * gamma)) {
            report.freq_shift_window_ok = false;
            report.warnings.push_back(fmt::format(
                "frequency shift {:.4g} Gamma lies outside ({:g}, {:g}) Gamma", shift / gamma, 2.0 * l, 20.0 * l));
        }
    }
    if (large_detuning_requested && std::abs(s.atom.detuning) < kLargeDetuningRatio * s.beam.peak_rabi) {
        report.large_detuning_ok = false;
        report.warnings.push_back(fmt::format("|delta| = {:.4g} Omega0 is below {:g} Omega0; large-detuning "
                                              "closed forms are inaccurate",
                                              std::abs(s.atom.detuning) / s.beam.peak_rabi, kLargeDetuningRatio));
    }
    return report;
}

json to_json(const Scenario& s) {
    auto axis = [](json& j, const std::string& name, const std::string& unit, const AxisRange& a) {
        j[name + "_min_" + unit] = a.min;
        j[name + "_max_" + unit] = a.max;
        j["n_" + name] = a.count;
    };
    json grid;
    axis(grid, "r", "m", s.grid.r);
    axis(grid, "phi", "rad", s.grid.phi);
    axis(grid, "z", "m", s.grid.z);
    axis(grid, "t", "s", s.grid.t);
    return json{
        {"label", s.label},
        {"seed", s.seed},
        {"convention", to_string(s.convention)},
        {"beam",
         {{"wavelength_m", s.beam.wavelength},
          {"waist_m", s.beam.waist},
          {"winding", s.beam.winding},
          {"radial_index", s.beam.radial_index},
          {"peak_rabi_rad_per_s", s.beam.peak_rabi},
          {"freq_shift_rad_per_s", s.beam.freq_shift},
          {"normalization", to_string(s.beam.normalization)}}},
        {"atom",
         {{"transition", s.atom.transition},
          {"linewidth_rad_per_s", s.atom.linewidth},
          {"detuning_rad_per_s", s.atom.detuning},
          {"mass_kg", s.atom.mass},
          {"charge_c", s.atom.charge},
          {"saturation_intensity_w_per_m2", s.atom.saturation_intensity},
          {"transition_frequency_rad_per_s", s.atom.transition_frequency}}},
        {"grid", grid},
    };
}

Scenario scenario_from_json(const json& j) {
    try {
        Scenario s;
        s.label = j.value("label", std::string("custom"));
        s.seed = j.value("seed", s.seed);
        s.convention = parse_convention(j.value("convention", std::string("standard")));

        const json& atom = j.at("atom");
        s.atom.transition = atom.value("transition", std::string());
        s.atom.linewidth = atom.at("linewidth_rad_per_s").get<double>();
        const double gamma = s.atom.linewidth;
        s.atom.detuning = read_quantity(atom, "atom", "detuning", "rad_per_s", "in_linewidths", gamma);
        s.atom.mass = atom.at("mass_kg").get<double>();
        s.atom.charge = atom.value("charge_c", constants::elementary_charge);
        s.atom.saturation_intensity = atom.value("saturation_intensity_w_per_m2", 0.0);
        s.atom.transition_frequency = atom.value("transition_frequency_rad_per_s", 0.0);

        const json& beam = j.at("beam");
        s.beam.wavelength = beam.at("wavelength_m").get<double>();
        s.beam.waist = beam.at("waist_m").get<double>();
        s.beam.winding = beam.at("winding").get<int>();
        s.beam.radial_index = beam.value("radial_index", 0);
        s.beam.peak_rabi = read_quantity(beam, "beam", "peak_rabi", "rad_per_s", "in_linewidths", gamma);
        s.beam.freq_shift = read_quantity(beam, "beam", "freq_shift", "rad_per_s", "in_linewidths", gamma, 0.0);
        s.beam.normalization = parse_normalization(beam.value("normalization", std::string("as_printed")));

        const Scenario defaults = base_scenario("", 1);
        const double w0 = s.beam.waist;
        const json grid = j.value("grid", json::object());
        s.grid.r = read_axis(grid, "r", "m", "in_waists", w0, {0.05 * w0, 3.0 * w0, defaults.grid.r.count});
        s.grid.phi = read_axis(grid, "phi", "rad", "", 1.0, defaults.grid.phi);
        s.grid.z = read_axis(grid, "z", "m", "in_waists", w0, defaults.grid.z);
        s.grid.t = read_axis(grid, "t", "s", "", 1.0, defaults.grid.t);

        s.validate();
        return s;
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("cannot open scenario file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidConfig("scenario file " + path.string() + ": " + e.what());
    }
    return scenario_from_json(j);
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidConfig("cannot write scenario file " + path.string());
    out << to_json(s).dump(2) << '\n';
}

}  // namespace gaugewheel

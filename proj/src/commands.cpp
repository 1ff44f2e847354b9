#include "gaugewheel/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"
#include "gaugewheel/field_lines.hpp"
#include "gaugewheel/io.hpp"
#include "gaugewheel/sampler.hpp"
#include "gaugewheel/scenario.hpp"
#include "gaugewheel/validation.hpp"

namespace gaugewheel {

namespace fs = std::filesystem;

namespace {

Scenario resolve_scenario(const CommandOptions& o) {
    if (o.scenario && o.preset) throw InvalidConfig("give either --scenario or --preset, not both");
    if (!o.scenario && !o.preset) throw InvalidConfig("one of --scenario or --preset is required");
    Scenario s;
    if (o.scenario) {
        if (!fs::exists(*o.scenario)) throw InvalidConfig("scenario file not found: " + o.scenario->string());
        s = load_scenario(*o.scenario);
    } else {
        s = preset(*o.preset);
    }
    if (o.seed) s.seed = *o.seed;
    return s;
}

void print_warnings(const ValidityReport& report, std::ostream& err) {
    for (const std::string& w : report.warnings) err << "warning: " << w << '\n';
}

fs::path require_out(const CommandOptions& o) {
    if (!o.out) throw InvalidConfig("--out is required");
    return *o.out;
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

void ensure_parent(const fs::path& file) {
    if (file.has_parent_path()) ensure_directory(file.parent_path());
}

RunManifest make_manifest(const std::string& command, const Scenario& s) {
    RunManifest m;
    m.command = command;
    m.scenario = to_json(s);
    m.seed = s.seed;
    m.timestamp = utc_timestamp();
    return m;
}

void add_output(RunManifest& m, const fs::path& path, const std::string& content) {
    write_text(path, content);
    m.outputs.push_back({path.string(), sha256_hex(content)});
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw InvalidConfig("bad number \"" + text + "\" in " + what);
    return v;
}

std::vector<FieldPoint> parse_seeds(const std::string& spec, const Scenario& s, double t) {
    const double w0 = s.beam.waist;
    std::vector<FieldPoint> seeds;
    if (spec.empty() || spec == "none") return seeds;
    if (spec.rfind("auto:", 0) == 0) {
        const double n = parse_double(spec.substr(5), "--seeds");
        if (n < 0 || n != std::floor(n)) throw InvalidConfig("--seeds auto:N needs a non-negative integer");
        const auto count = static_cast<std::size_t>(n);
        for (std::size_t i = 0; i < count; ++i) {
            const double frac = count == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(count - 1);
            seeds.push_back({w0 * (0.2 + 2.6 * frac), 0.1, 0.0, t});
        }
        return seeds;
    }
    std::stringstream entries(spec);
    std::string entry;
    while (std::getline(entries, entry, ';')) {
        if (entry.empty()) continue;
        std::vector<double> parts;
        std::stringstream fields(entry);
        std::string field;
        while (std::getline(fields, field, ',')) parts.push_back(parse_double(field, "--seeds"));
        if (parts.size() < 2 || parts.size() > 3) {
            throw InvalidConfig("seed \"" + entry + "\" must be r/w0,phi[,z/w0]");
        }
        if (!(parts[0] > 0.0)) throw InvalidConfig("seed \"" + entry + "\" must be off-axis");
        seeds.push_back({parts[0] * w0, parts[1], parts.size() == 3 ? parts[2] * w0 : 0.0, t});
    }
    return seeds;
}

}  // namespace

int cmd_validate(const CommandOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Scenario s = resolve_scenario(o);
        print_warnings(validate_scenario(s, true), err);
        ValidationOptions vo;
        vo.n_points = o.n_points;
        vo.workers = o.workers;
        vo.closed_form_corruption = o.closed_form_corruption;
        const ValidationResult result = run_validation(s, vo);
        const std::string text = result.to_text();
        out << text;
        if (o.out) {
            ensure_directory(*o.out);
            RunManifest m = make_manifest("validate", s);
            add_output(m, *o.out / "validation_report.txt", text);
            add_output(m, *o.out / "validation_report.kv", result.to_key_value());
            write_text(*o.out / "manifest.json", m.to_json().dump(2) + "\n");
        }
        return result.hard_pass() ? kExitOk : kExitTolerance;
    });
}

int cmd_sample(const CommandOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Scenario s = resolve_scenario(o);
        const FieldKind kind = parse_field_kind(o.field);
        const fs::path path = require_out(o);
        print_warnings(validate_scenario(s), err);
        const FieldFrame frame = sample_grid(s, kind, o.time, o.workers);
        ensure_parent(path);
        RunManifest m = make_manifest("sample", s);
        add_output(m, path, frame_csv(frame));
        write_text(path.string() + ".manifest.json", m.to_json().dump(2) + "\n");
        out << fmt::format("wrote {} rows to {}\n", frame.rows.size(), path.string());
        return kExitOk;
    });
}

int cmd_lines(const CommandOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Scenario s = resolve_scenario(o);
        const FieldKind kind = parse_field_kind(o.field);
        if (kind != FieldKind::magnetic && kind != FieldKind::electric) {
            throw InvalidConfig("lines supports --field B or E");
        }
        const fs::path path = require_out(o);
        print_warnings(validate_scenario(s), err);
        const GaugeModel model = s.model();
        const VectorField field = [&](const FieldPoint& p) {
            return kind == FieldKind::magnetic ? model.magnetic_field(p) : model.electric_field(p);
        };
        const std::vector<FieldPoint> seeds = parse_seeds(o.seeds, s, o.time);
        if (seeds.empty()) err << "warning: no seeds given; writing an empty polyline file\n";

        const double w0 = s.beam.waist;
        TraceOptions opts;
        opts.step = o.step.value_or(0.005) * w0;
        opts.max_steps = o.max_steps;
        opts.r_min = 0.01 * w0;
        opts.r_max = 3.5 * w0;
        opts.z_max = 3.0 * w0;
        double scale = 0.0;
        for (const FieldPoint& p : seeds) scale = std::max(scale, norm(field(p)));
        opts.null_threshold = 1e-12 * scale;

        std::vector<Polyline> lines;
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            try {
                lines.push_back(trace_field_line(field, seeds[i], opts));
            } catch (const NullField&) {
                err << fmt::format("warning: seed {} (r = {:.4g} w0, phi = {:.4g}) sits on a null field; skipped\n", i,
                                   seeds[i].r / w0, seeds[i].phi);
            }
        }
        ensure_parent(path);
        RunManifest m = make_manifest("lines", s);
        add_output(m, path, polylines_csv(lines));
        write_text(path.string() + ".manifest.json", m.to_json().dump(2) + "\n");
        for (std::size_t i = 0; i < lines.size(); ++i) {
            out << fmt::format("line {}: {} points, length {:.4g} w0, {}\n", i, lines[i].points.size(),
                               lines[i].arc_length / w0, to_string(lines[i].termination));
        }
        return kExitOk;
    });
}

int cmd_animate(const CommandOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Scenario s = resolve_scenario(o);
        const FieldKind kind = parse_field_kind(o.field);
        const fs::path dir = require_out(o);
        print_warnings(validate_scenario(s), err);
        if (s.beam.freq_shift == 0.0) {
            err << "warning: frequency shift is zero; the pattern is static and every frame is identical\n";
        }
        const double t0 = o.t_start.value_or(s.grid.t.min);
        const double t1 = o.t_end.value_or(s.grid.t.max);
        const std::size_t n = o.frames.value_or(s.grid.t.count);
        if (n < 1) throw InvalidConfig("--frames must be >= 1");
        if (t1 < t0) throw InvalidConfig("--t-end must be >= --t-start");

        ensure_directory(dir);
        RunManifest m = make_manifest("animate", s);
        for (std::size_t k = 0; k < n; ++k) {
            const double t = n == 1 ? t0 : t0 + static_cast<double>(k) * (t1 - t0) / static_cast<double>(n - 1);
            const FieldFrame frame = sample_grid(s, kind, t, o.workers);
            add_output(m, dir / fmt::format("frame_{:04}.csv", k), frame_csv(frame));
        }
        write_text(dir / "manifest.json", m.to_json().dump(2) + "\n");
        out << fmt::format("wrote {} frames to {}\n", n, dir.string());
        return kExitOk;
    });
}

int cmd_info(const CommandOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Scenario s = resolve_scenario(o);
        const GaugeModel model = s.model();
        const BeamGeometry& geo = model.geometry();
        const ValidityReport report = validate_scenario(s, true);
        const double gamma = s.atom.linewidth;
        const double omega_max = peak_envelope(s.beam);

        out << fmt::format("scenario            {}\n", s.label);
        out << fmt::format("transition          {}\n", s.atom.transition);
        out << fmt::format("winding l           {}\n", s.beam.winding);
        out << fmt::format("radial index p      {}\n", s.beam.radial_index);
        out << fmt::format("waist w0            {:.6g} m\n", s.beam.waist);
        out << fmt::format("wavenumber k        {:.6g} rad/m\n", geo.k);
        out << fmt::format("Rayleigh range z_R  {:.6g} m\n", geo.rayleigh_range);
        out << fmt::format("peak Rabi Omega0    {:.6g} rad/s ({:.4g} Gamma)\n", s.beam.peak_rabi,
                           s.beam.peak_rabi / gamma);
        out << fmt::format("max envelope        {:.6g} rad/s ({:.4g} Gamma)\n", omega_max, omega_max / gamma);
        out << fmt::format("detuning delta      {:.6g} rad/s ({:.4g} Gamma)\n", s.atom.detuning,
                           s.atom.detuning / gamma);
        out << fmt::format("(Omega_max/delta)^2 {:.6g}\n", std::pow(omega_max / s.atom.detuning, 2));
        out << fmt::format("freq shift dw       {:.6g} rad/s ({:.4g} Gamma)\n", s.beam.freq_shift,
                           s.beam.freq_shift / gamma);
        if (report.rotating) {
            out << fmt::format("rotation Omega_rot  {:.6g} rad/s ({:.4g} Gamma)\n", report.rotation_frequency,
                               report.rotation_frequency / gamma);
            out << fmt::format("rotation period     {:.6g} s\n", rotation_period(s.beam));
        } else {
            out << "rotation Omega_rot  0 (static)\n";
        }
        out << fmt::format("interaction limit   {:.6g} s (1/Gamma)\n", report.interaction_time_limit);
        out << fmt::format("adiabatic window    {}\n", report.adiabatic_window_ok ? "ok" : "violated");
        out << fmt::format("freq shift window   {}\n", report.freq_shift_window_ok ? "ok" : "violated");
        out << fmt::format("large detuning      {}\n", report.large_detuning_ok ? "ok" : "violated");
        out << fmt::format("convention          {}\n",
                           s.convention == FieldConvention::standard ? "standard" : "as_printed");
        out << fmt::format("grid                {} x {} x {} (r, phi, z), {} times\n", s.grid.r.count,
                           s.grid.phi.count, s.grid.z.count, s.grid.t.count);
        print_warnings(report, err);
        return kExitOk;
    });
}

}  // namespace gaugewheel

#include "gaugewheel/compare.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"
#include "gaugewheel/parallel.hpp"

namespace gaugewheel {

namespace {

/// Uniform double in [0, 1) from the top 53 bits; independent of the
/// standard library's distribution implementation.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double lerp(double a, double b, double u) { return a + (b - a) * u; }

}  // namespace

SamplingRegion SamplingRegion::focal_plane(const BeamConfig& beam, std::size_t n, std::uint64_t seed) {
    SamplingRegion region;
    region.r_min = 0.05 * beam.waist;
    region.r_max = 3.0 * beam.waist;
    region.phi_max = constants::two_pi;
    region.n_points = n;
    region.seed = seed;
    return region;
}

std::vector<FieldPoint> sample_points(const SamplingRegion& region) {
    if (region.n_points == 0) throw EmptyRegion("sampling region: zero points requested");
    if (!(region.r_min > 0.0) || region.r_max < region.r_min) {
        throw EmptyRegion("sampling region: need 0 < r_min <= r_max");
    }
    if (region.phi_max < region.phi_min || region.z_max < region.z_min || region.t_max < region.t_min) {
        throw EmptyRegion("sampling region: inverted range");
    }

    std::mt19937_64 rng(region.seed);
    std::vector<FieldPoint> points;
    points.reserve(region.n_points);
    const std::size_t max_draws = 100 * region.n_points + 1000;
    for (std::size_t draw = 0; draw < max_draws && points.size() < region.n_points; ++draw) {
        FieldPoint p;
        p.r = lerp(region.r_min, region.r_max, unit_uniform(rng));
        p.phi = lerp(region.phi_min, region.phi_max, unit_uniform(rng));
        p.z = lerp(region.z_min, region.z_max, unit_uniform(rng));
        p.t = lerp(region.t_min, region.t_max, unit_uniform(rng));
        if (region.band_beam && region.min_abs_cos > 0.0) {
            const double c = std::cos(modulation_argument(*region.band_beam, p.phi, p.t));
            if (std::abs(c) < region.min_abs_cos) continue;
        }
        points.push_back(p);
    }
    if (points.size() < region.n_points) {
        throw EmptyRegion("sampling region: exclusion band rejects too many points");
    }
    return points;
}

ComparisonReport compare(const std::string& name, const VectorField& analytic, const VectorField& reference,
                         const std::vector<FieldPoint>& points, const CompareOptions& options) {
    if (points.empty()) throw EmptyRegion("compare: no points");
    std::vector<CylVec> a(points.size());
    std::vector<CylVec> b(points.size());
    parallel_for(points.size(), options.workers, [&](std::size_t i) {
        a[i] = analytic(points[i]);
        b[i] = reference(points[i]);
    });

    ComparisonReport report;
    report.name = name;
    report.n_points = points.size();
    for (const CylVec& v : b) report.reference_scale = std::max(report.reference_scale, norm(v));
    const double floor = options.floor_fraction * report.reference_scale;

    for (std::size_t i = 0; i < points.size(); ++i) {
        const CylVec diff = a[i] - b[i];
        const double abs_err = norm(diff);
        const double denom = std::max(norm(b[i]), floor);
        double rel_err = 0.0;
        if (denom > 0.0) {
            rel_err = abs_err / denom;
        } else if (abs_err > 0.0) {
            rel_err = std::numeric_limits<double>::infinity();
        }
        if (!std::isfinite(abs_err)) rel_err = std::numeric_limits<double>::infinity();
        if (i == 0 || rel_err > report.max_rel_error) {
            report.max_rel_error = rel_err;
            report.argmax_point = points[i];
        }
        report.max_abs_error = std::max(report.max_abs_error, abs_err);
        for (int c = 0; c < 3; ++c) {
            const double e = std::abs(diff[c]);
            auto& stats = report.components[static_cast<std::size_t>(c)];
            stats.max_abs_error = std::max(stats.max_abs_error, e);
            if (denom > 0.0) stats.max_rel_error = std::max(stats.max_rel_error, e / denom);
        }
    }
    return report;
}

ComparisonReport compare(const std::string& name, const VectorField& analytic, const VectorField& reference,
                         const SamplingRegion& region, const CompareOptions& options) {
    return compare(name, analytic, reference, sample_points(region), options);
}

std::string ComparisonReport::to_text() const {
    std::ostringstream out;
    out << fmt::format("{}\n", name);
    out << fmt::format("  points           {}\n", n_points);
    out << fmt::format("  max rel error    {:.6e}\n", max_rel_error);
    out << fmt::format("  max abs error    {:.6e}\n", max_abs_error);
    out << fmt::format("  reference scale  {:.6e}\n", reference_scale);
    out << fmt::format("  worst point      r={:.6e} m  phi={:.6f} rad  z={:.6e} m  t={:.6e} s\n",
                       argmax_point.r, argmax_point.phi, argmax_point.z, argmax_point.t);
    static constexpr const char* labels[] = {"r", "phi", "z"};
    for (std::size_t c = 0; c < 3; ++c) {
        out << fmt::format("  component {:<4}   abs {:.6e}  rel {:.6e}\n", labels[c], components[c].max_abs_error,
                           components[c].max_rel_error);
    }
    return out.str();
}

std::string ComparisonReport::to_key_value(const std::string& prefix) const {
    std::ostringstream out;
    auto kv = [&](const std::string& key, const std::string& value) { out << prefix << key << '=' << value << '\n'; };
    auto num = [](double v) { return fmt::format("{:.17g}", v); };
    kv("name", name);
    kv("n_points", std::to_string(n_points));
    kv("max_rel_error", num(max_rel_error));
    kv("max_abs_error", num(max_abs_error));
    kv("reference_scale", num(reference_scale));
    kv("argmax_r_m", num(argmax_point.r));
    kv("argmax_phi_rad", num(argmax_point.phi));
    kv("argmax_z_m", num(argmax_point.z));
    kv("argmax_t_s", num(argmax_point.t));
    static constexpr const char* labels[] = {"r", "phi", "z"};
    for (std::size_t c = 0; c < 3; ++c) {
        kv(fmt::format("component_{}_max_abs_error", labels[c]), num(components[c].max_abs_error));
        kv(fmt::format("component_{}_max_rel_error", labels[c]), num(components[c].max_rel_error));
    }
    return out.str();
}

}  // namespace gaugewheel

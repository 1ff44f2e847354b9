#include "gaugewheel/field_lines.hpp"

#include <array>
#include <cmath>
#include <optional>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"

namespace gaugewheel {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 axpy(const Vec3& x, double a, const Vec3& y) { return {x[0] + a * y[0], x[1] + a * y[1], x[2] + a * y[2]}; }

struct Cylindrical {
    double r;
    double phi;
    double z;
};

Cylindrical to_cylindrical(const Vec3& x) { return {std::hypot(x[0], x[1]), std::atan2(x[1], x[0]), x[2]}; }

}  // namespace

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::max_steps:
            return "max-steps";
        case Termination::left_domain:
            return "left-domain";
        case Termination::null_field:
            return "null-field";
    }
    return "unknown";
}

void TraceOptions::validate() const {
    if (!(step > 0.0)) throw InvalidConfig("trace: step must be > 0");
    if (!(r_max > r_min) || r_min < 0.0) throw InvalidConfig("trace: need 0 <= r_min < r_max");
    if (!(z_max >= 0.0)) throw InvalidConfig("trace: z_max must be >= 0");
    if (!(null_threshold >= 0.0)) throw InvalidConfig("trace: null threshold must be >= 0");
}

Polyline trace_field_line(const VectorField& field, const FieldPoint& seed, const TraceOptions& options) {
    options.validate();
    const double t = seed.t;

    // Unit direction of F at a Cartesian position, or nullopt for a null field.
    auto direction = [&](const Vec3& x) -> std::optional<Vec3> {
        const Cylindrical c = to_cylindrical(x);
        const CylVec f = field(FieldPoint{c.r, c.phi, c.z, t});
        const double n = norm(f);
        if (!(n > options.null_threshold) || !std::isfinite(n)) return std::nullopt;
        const Vec3 cart = to_cartesian(f, c.phi);
        return Vec3{cart[0] / n, cart[1] / n, cart[2] / n};
    };
    auto inside = [&](const Vec3& x) {
        const double r = std::hypot(x[0], x[1]);
        return r >= options.r_min && r <= options.r_max && std::abs(x[2]) <= options.z_max;
    };

    Vec3 x{seed.r * std::cos(seed.phi), seed.r * std::sin(seed.phi), seed.z};
    if (!direction(x)) throw NullField("trace: field vanishes at the seed point");

    Polyline line;
    line.points.push_back(seed);
    double unwrapped_phi = seed.phi;
    double last_wrapped = std::atan2(x[1], x[0]);
    const double h = options.step;

    for (std::size_t step = 0; step < options.max_steps; ++step) {
        const auto k1 = direction(x);
        if (!k1) {
            line.termination = Termination::null_field;
            return line;
        }
        const auto k2 = direction(axpy(x, 0.5 * h, *k1));
        const auto k3 = k2 ? direction(axpy(x, 0.5 * h, *k2)) : std::nullopt;
        const auto k4 = k3 ? direction(axpy(x, h, *k3)) : std::nullopt;
        if (!k4) {
            line.termination = Termination::null_field;
            return line;
        }
        Vec3 next = x;
        for (int i = 0; i < 3; ++i) {
            const auto u = static_cast<std::size_t>(i);
            next[u] += h / 6.0 * ((*k1)[u] + 2.0 * (*k2)[u] + 2.0 * (*k3)[u] + (*k4)[u]);
        }
        if (!inside(next)) {
            line.termination = Termination::left_domain;
            return line;
        }
        x = next;
        const Cylindrical c = to_cylindrical(x);
        double dphi = c.phi - last_wrapped;
        if (dphi > constants::pi) dphi -= constants::two_pi;
        if (dphi < -constants::pi) dphi += constants::two_pi;
        unwrapped_phi += dphi;
        last_wrapped = c.phi;
        line.points.push_back(FieldPoint{c.r, unwrapped_phi, c.z, t});
        line.arc_length += h;
    }
    line.termination = Termination::max_steps;
    return line;
}

}  // namespace gaugewheel

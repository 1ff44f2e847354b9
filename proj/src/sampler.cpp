#include "gaugewheel/sampler.hpp"

#include <string>

#include "gaugewheel/errors.hpp"
#include "gaugewheel/parallel.hpp"

namespace gaugewheel {

FieldKind parse_field_kind(std::string_view name) {
    if (name == "B") return FieldKind::magnetic;
    if (name == "E") return FieldKind::electric;
    if (name == "A") return FieldKind::vector_potential;
    if (name == "V") return FieldKind::scalar_potential;
    if (name == "rabi") return FieldKind::rabi;
    throw InvalidConfig("unknown field \"" + std::string(name) + "\" (expected B, E, A, V or rabi)");
}

std::string_view to_string(FieldKind kind) {
    switch (kind) {
        case FieldKind::magnetic: return "B";
        case FieldKind::electric: return "E";
        case FieldKind::vector_potential: return "A";
        case FieldKind::scalar_potential: return "V";
        case FieldKind::rabi: return "rabi";
    }
    return "?";
}

bool is_vector(FieldKind kind) {
    return kind == FieldKind::magnetic || kind == FieldKind::electric || kind == FieldKind::vector_potential;
}

FrameRow evaluate(const GaugeModel& model, FieldKind kind, const FieldPoint& p) {
    FrameRow row;
    row.point = p;
    switch (kind) {
        case FieldKind::magnetic: row.vector = model.magnetic_field(p); break;
        case FieldKind::electric: row.vector = model.electric_field(p); break;
        case FieldKind::vector_potential: row.vector = model.vector_potential(p); break;
        case FieldKind::scalar_potential: row.scalar = model.scalar_potential(p); break;
        case FieldKind::rabi: row.scalar = model.rabi(p); break;
    }
    if (is_vector(kind)) row.scalar = norm(row.vector);
    return row;
}

FieldFrame sample_grid(const Scenario& s, FieldKind kind, double t, std::size_t workers) {
    s.validate();
    const GaugeModel model = s.model();
    const GridSpec& g = s.grid;
    FieldFrame frame;
    frame.kind = kind;
    frame.grid = g;
    frame.time = t;
    frame.rows.resize(g.spatial_size());
    const std::size_t per_r = g.phi.count * g.z.count;
    parallel_for(frame.rows.size(), workers, [&](std::size_t idx) {
        const std::size_t i = idx / per_r;
        const std::size_t j = (idx % per_r) / g.z.count;
        const std::size_t k = idx % g.z.count;
        frame.rows[idx] = evaluate(model, kind, {g.r.at(i), g.phi_at(j), g.z.at(k), t});
    });
    return frame;
}

}  // namespace gaugewheel

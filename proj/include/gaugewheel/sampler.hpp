#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gaugewheel/cylvec.hpp"
#include "gaugewheel/scenario.hpp"

namespace gaugewheel {

enum class FieldKind { magnetic, electric, vector_potential, scalar_potential, rabi };

/// Accepts B, E, A, V, rabi.
[[nodiscard]] FieldKind parse_field_kind(std::string_view name);
[[nodiscard]] std::string_view to_string(FieldKind kind);
[[nodiscard]] bool is_vector(FieldKind kind);

struct FrameRow {
    FieldPoint point;
    CylVec vector;        ///< SI; zero for scalar fields
    double scalar = 0.0;  ///< SI; |vector| for vector fields
};

struct FieldFrame {
    FieldKind kind = FieldKind::magnetic;
    GridSpec grid;
    double time = 0.0;
    std::vector<FrameRow> rows;
};

/// Evaluates one field over the spatial grid at time t. Rows are ordered r
/// outer, φ middle, z inner; values do not depend on the worker count.
[[nodiscard]] FieldFrame sample_grid(const Scenario& s, FieldKind kind, double t, std::size_t workers = 0);

/// Single-point evaluation shared by sample_grid and the tests.
[[nodiscard]] FrameRow evaluate(const GaugeModel& model, FieldKind kind, const FieldPoint& p);

}  // namespace gaugewheel

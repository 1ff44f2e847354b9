#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gaugewheel/finite_difference.hpp"
#include "gaugewheel/optics.hpp"

namespace gaugewheel {

enum class Termination { max_steps, left_domain, null_field };

[[nodiscard]] std::string_view to_string(Termination t);

struct TraceOptions {
    double step = 0.0;            ///< arc-length step, m
    std::size_t max_steps = 1000;
    double r_min = 0.0;           ///< lines stop when r < r_min (axis exclusion)
    double r_max = 0.0;           ///< and when r > r_max
    double z_max = 0.0;           ///< or |z| > z_max
    double null_threshold = 0.0;  ///< |F| below this counts as a null field

    void validate() const;
};

/// Field line at fixed t. φ is unwrapped along the line (continuous).
struct Polyline {
    std::vector<FieldPoint> points;
    double arc_length = 0.0;
    Termination termination = Termination::max_steps;
};

/// Integrates dx/ds = F/|F| with classical RK4 in the Cartesian embedding.
/// Throws NullField if |F(seed)| <= null_threshold.
[[nodiscard]] Polyline trace_field_line(const VectorField& field, const FieldPoint& seed,
                                        const TraceOptions& options);

}  // namespace gaugewheel

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaugewheel/finite_difference.hpp"
#include "gaugewheel/optics.hpp"

namespace gaugewheel {

/// Box in (r, φ, z, t) sampled uniformly with a fixed-seed generator.
struct SamplingRegion {
    double r_min = 0.0;
    double r_max = 0.0;
    double phi_min = 0.0;
    double phi_max = 0.0;
    double z_min = 0.0;
    double z_max = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    std::size_t n_points = 1000;
    std::uint64_t seed = 0;
    /// When set, points with |cos(lφ - Δωt/2)| < min_abs_cos are rejected
    /// (needed when comparing raw tan/sec forms).
    std::optional<BeamConfig> band_beam;
    double min_abs_cos = 0.0;

    /// z = 0 plane, full azimuthal turn, r ∈ [0.05 w0, 3 w0], t = 0.
    [[nodiscard]] static SamplingRegion focal_plane(const BeamConfig& beam, std::size_t n, std::uint64_t seed);
};

/// Deterministic sample of the region. Throws EmptyRegion if no admissible
/// point can be drawn.
[[nodiscard]] std::vector<FieldPoint> sample_points(const SamplingRegion& region);

struct ComponentStats {
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;  ///< relative to max(|reference vector|, floor)
};

struct ComparisonReport {
    std::string name;
    std::size_t n_points = 0;
    double max_rel_error = 0.0;
    double max_abs_error = 0.0;
    double reference_scale = 0.0;  ///< max |reference| over the sample
    FieldPoint argmax_point;
    std::array<ComponentStats, 3> components{};

    [[nodiscard]] std::string to_text() const;
    /// One `key=value` per line, keys prefixed with `prefix`.
    [[nodiscard]] std::string to_key_value(const std::string& prefix = "") const;
};

struct CompareOptions {
    /// Relative-error denominator floor as a fraction of the reference scale.
    double floor_fraction = 1e-12;
    std::size_t workers = 0;
};

/// Pointwise comparison of two vector fields over explicit points.
/// Relative error uses |a - b| / max(|b|, floor·scale).
[[nodiscard]] ComparisonReport compare(const std::string& name, const VectorField& analytic,
                                       const VectorField& reference, const std::vector<FieldPoint>& points,
                                       const CompareOptions& options = {});

[[nodiscard]] ComparisonReport compare(const std::string& name, const VectorField& analytic,
                                       const VectorField& reference, const SamplingRegion& region,
                                       const CompareOptions& options = {});

}  // namespace gaugewheel

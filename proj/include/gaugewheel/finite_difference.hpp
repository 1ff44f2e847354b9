#pragma once

#include <functional>

#include "gaugewheel/cylvec.hpp"
#include "gaugewheel/gauge.hpp"
#include "gaugewheel/optics.hpp"

namespace gaugewheel {

using ScalarField = std::function<double(const FieldPoint&)>;
using VectorField = std::function<CylVec(const FieldPoint&)>;

enum class FdScheme { central2, central4, richardson };

/// Step selection for the pointwise finite-difference stencils.
///
/// Spatial steps are h_r = max(r, L)·h0 and h_z = max(|z|, L)·h0 with L the
/// length scale (normally the beam waist); the azimuthal step is h0 radians.
/// richardson combines central-4th stencils at h and h/2.
struct StepPolicy {
    double base_step = 1e-5;    ///< h0, dimensionless
    FdScheme scheme = FdScheme::central4;
    double time_step = 1e-12;   ///< s
    double length_scale = 1.0;  ///< m

    void validate() const;

    [[nodiscard]] static StepPolicy for_beam(const BeamConfig& beam, FdScheme scheme = FdScheme::central4);
};

/// (∂_r f, (1/r)∂_φ f, ∂_z f). Throws AxisError if the radial stencil reaches r <= 0.
[[nodiscard]] CylVec fd_gradient(const ScalarField& f, const FieldPoint& p, const StepPolicy& policy);

/// Cylindrical curl in the orthonormal frame.
[[nodiscard]] CylVec fd_curl(const VectorField& f, const FieldPoint& p, const StepPolicy& policy);

[[nodiscard]] double fd_divergence(const VectorField& f, const FieldPoint& p, const StepPolicy& policy);

/// Central difference in t with step policy.time_step (scheme as selected).
[[nodiscard]] CylVec fd_time_derivative(const VectorField& f, const FieldPoint& p, const StepPolicy& policy);
[[nodiscard]] double fd_time_derivative(const ScalarField& f, const FieldPoint& p, const StepPolicy& policy);

/// -∇V/q with ∇V from fd_gradient; independent of GaugeModel::electric_field_static.
[[nodiscard]] CylVec fd_electric_field_static(const GaugeModel& model, const FieldPoint& p,
                                              const StepPolicy& policy);

}  // namespace gaugewheel

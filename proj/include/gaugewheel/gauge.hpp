#pragma once

#include <complex>
#include <string>
#include <utility>

#include "gaugewheel/cylvec.hpp"
#include "gaugewheel/optics.hpp"

namespace gaugewheel {

/// Two-level atom coupled to the Ferris wheel field.
struct AtomConfig {
    std::string transition;            ///< free-form label, e.g. "Cs-133 6S1/2-6P3/2"
    double linewidth = 0.0;            ///< Γ, rad/s
    double detuning = 0.0;             ///< δ = ω0 - ωL, rad/s
    double mass = 0.0;                 ///< kg
    double charge = 0.0;               ///< fictitious charge q, C
    double saturation_intensity = 0.0; ///< I_S, W/m²
    double transition_frequency = 0.0; ///< ω0, rad/s (informational)

    void validate() const;
};

/// Normalization of the general gauge-field expressions.
///
/// standard:   qB = ∇×(qA) with qA = (ħ/2)(cosΘ - 1)∇φ_F, i.e. a ħ/2 prefactor
///             on the cross product, and V = (ħ²/8M)[...].
/// as_printed: a ħ prefactor on the cross product and V = (ħ²/2M)[...].
///
/// Only `standard` makes B the curl of A and keeps the large-detuning electric
/// field consistent with -∇V/q; `as_printed` exists for comparison.
enum class FieldConvention { standard, as_printed };

struct DressedState {
    std::complex<double> ground;
    std::complex<double> excited;
};

/// Everything the model computes at a point. Units: Rabi in rad/s, phase in
/// rad, A in T·m (per unit charge), V in J, B in T, E in V/m.
struct GaugeSample {
    FieldPoint point;
    double rabi = 0.0;
    double ferris_phase = 0.0;
    double cos_theta = 1.0;
    CylVec vector_potential;
    double scalar_potential = 0.0;
    CylVec magnetic;
    CylVec electric;
};

/// cosΘ = δ / sqrt(δ² + Ω̃²). Throws DegeneratePoint when both vanish.
[[nodiscard]] double mixing_cos(double detuning, double rabi);

/// The two dressed states (ground, excited amplitudes) with Θ ∈ [0, π]:
/// (cos Θ/2, e^{iφ_F} sin Θ/2) and (-e^{-iφ_F} sin Θ/2, cos Θ/2).
[[nodiscard]] std::pair<DressedState, DressedState> dressed_states(double detuning, double rabi,
                                                                   double ferris_phase);

/// Artificial gauge potentials and fields for one beam/atom pair.
///
/// All gradients are analytic. Vectors are returned in the local orthonormal
/// cylindrical frame. Fields (B, E) are defined as zero on the axis r = 0;
/// the gradient-level quantities (∇Ω̃, V, ∇V) raise AxisError there.
class GaugeModel {
public:
    GaugeModel(BeamConfig beam, AtomConfig atom, FieldConvention convention = FieldConvention::standard);

    [[nodiscard]] const BeamConfig& beam() const { return beam_; }
    [[nodiscard]] const AtomConfig& atom() const { return atom_; }
    [[nodiscard]] FieldConvention convention() const { return convention_; }
    [[nodiscard]] const BeamGeometry& geometry() const { return geometry_; }

    /// Prefactor multiplying -(ħδ/q) Ω̃ (δ²+Ω̃²)^{-3/2} ∇Ω̃×∇φ_F.
    [[nodiscard]] double magnetic_prefactor() const;
    /// Prefactor c in V = c [δ²(∇Ω̃)²/(δ²+Ω̃²)² + Ω̃²(∇φ_F)²/(δ²+Ω̃²)], in J·m².
    [[nodiscard]] double potential_prefactor() const;

    [[nodiscard]] double rabi(const FieldPoint& p) const;
    [[nodiscard]] double ferris_phase(const FieldPoint& p) const;
    [[nodiscard]] double mixing_cos(const FieldPoint& p) const;

    [[nodiscard]] CylVec grad_rabi(const FieldPoint& p) const;
    [[nodiscard]] CylVec grad_ferris_phase(const FieldPoint& p) const;

    /// A = (ħ/2q)(cosΘ - 1)∇φ_F.
    [[nodiscard]] CylVec vector_potential(const FieldPoint& p) const;
    /// ∂A/∂t, analytic through cosΘ(Ω̃(t)).
    [[nodiscard]] CylVec vector_potential_rate(const FieldPoint& p) const;

    [[nodiscard]] double scalar_potential(const FieldPoint& p) const;
    /// Orthonormal-frame gradient of V.
    [[nodiscard]] CylVec scalar_potential_gradient(const FieldPoint& p) const;

    [[nodiscard]] CylVec magnetic_field(const FieldPoint& p) const;
    /// -∇V/q.
    [[nodiscard]] CylVec electric_field_static(const FieldPoint& p) const;
    /// -∂A/∂t - ∇V/q.
    [[nodiscard]] CylVec electric_field(const FieldPoint& p) const;

    [[nodiscard]] GaugeSample sample(const FieldPoint& p) const;

    /// Same model with a different detuning (everything else copied).
    [[nodiscard]] GaugeModel with_detuning(double detuning) const;
    [[nodiscard]] GaugeModel with_peak_rabi(double peak_rabi) const;
    [[nodiscard]] GaugeModel with_convention(FieldConvention convention) const;

private:
    BeamConfig beam_;
    AtomConfig atom_;
    FieldConvention convention_;
    BeamGeometry geometry_;
};

}  // namespace gaugewheel

#pragma once

#include "gaugewheel/cylvec.hpp"
#include "gaugewheel/gauge.hpp"

namespace gaugewheel {

/// Which closed-form expression to evaluate at the focal plane z = 0.
///
/// printed: the published component formulas taken literally (plane-wave k,
///          factor l in B_φ, 2l² sec² term in static E_φ, 1/π factors in the
///          large-detuning B, mixed-order Ω̃⁴/δ⁴ terms in E).
/// derived: the same structures re-derived from the model's general
///          expressions under its FieldConvention, with the focused axial
///          wavenumber ∂φ_F/∂z and only the leading order in (Ω/δ)² where the
///          form is a large-detuning expansion.
enum class ClosedFormVariant { derived, printed };

/// regularized: tan/sec products multiplied by Ω̃² are rewritten with sin/cos
///              (removes the removable singularity at cos(lφ - Δωt/2) = 0).
/// raw:         tan/sec evaluated directly; used only to check the rewrite.
enum class TrigForm { regularized, raw };

/// ∂φ_F/∂z at z = 0: k - (2p+|l|+1)/z_R + k r²/(2 z_R²).
[[nodiscard]] double focused_wavenumber(const GaugeModel& model, double r);

/// B_r, B_φ at z = 0 (B_z = 0). Requires p = 0.
[[nodiscard]] CylVec magnetic_closed_z0(const GaugeModel& model, double r, double phi, double t,
                                        ClosedFormVariant variant = ClosedFormVariant::derived,
                                        TrigForm trig = TrigForm::regularized);

/// Static electric field E_r, E_φ at z = 0 (evaluated at t = 0). Requires p = 0.
[[nodiscard]] CylVec electric_closed_z0(const GaugeModel& model, double r, double phi,
                                        ClosedFormVariant variant = ClosedFormVariant::derived,
                                        TrigForm trig = TrigForm::regularized);

/// Large-detuning magnetic field at z = 0 for the rotating pattern.
[[nodiscard]] CylVec magnetic_largedet_z0(const GaugeModel& model, double r, double phi, double t,
                                          ClosedFormVariant variant = ClosedFormVariant::derived);

/// Large-detuning electric field at z = 0 for the rotating pattern,
/// including the axial E_z driven by the rotation.
[[nodiscard]] CylVec electric_largedet_z0(const GaugeModel& model, double r, double phi, double t,
                                          ClosedFormVariant variant = ClosedFormVariant::derived,
                                          TrigForm trig = TrigForm::regularized);

}  // namespace gaugewheel

#pragma once

#include "gaugewheel/jet.hpp"

namespace gaugewheel {

/// Which prefactor multiplies the Laguerre–Gaussian profile.
///   as_printed: sqrt(p! / (|l|! + p!))
///   standard:   sqrt(p! / (|l| + p)!)
enum class LgNormalization { as_printed, standard };

/// Two co-propagating LG beams with windings +l and -l forming the Ferris wheel.
struct BeamConfig {
    double wavelength = 0.0;  ///< m
    double waist = 0.0;       ///< w0, m
    int winding = 1;          ///< l, signed; the pair carries +l and -l
    int radial_index = 0;     ///< p
    double peak_rabi = 0.0;   ///< Ω0, rad/s
    double freq_shift = 0.0;  ///< Δω = ω1 - ω2, rad/s
    LgNormalization normalization = LgNormalization::as_printed;

    /// Throws InvalidConfig on a violated invariant.
    void validate() const;

    [[nodiscard]] int abs_winding() const { return winding < 0 ? -winding : winding; }
    /// Gouy-phase order 2p + |l| + 1.
    [[nodiscard]] int gouy_order() const { return 2 * radial_index + abs_winding() + 1; }
};

/// Cylindrical spacetime sample point. φ may be any real number.
struct FieldPoint {
    double r = 0.0;
    double phi = 0.0;
    double z = 0.0;
    double t = 0.0;

    friend constexpr bool operator==(const FieldPoint&, const FieldPoint&) = default;
};

struct BeamGeometry {
    double k = 0.0;               ///< 2π/λ
    double rayleigh_range = 0.0;  ///< π w0²/λ
    double waist = 0.0;           ///< w0

    [[nodiscard]] double width(double z) const;
    [[nodiscard]] double width_dz(double z) const;
    [[nodiscard]] double width_dzz(double z) const;
};

[[nodiscard]] BeamGeometry beam_geometry(const BeamConfig& cfg);

/// Associated Laguerre polynomial L_p^α(x) by upward three-term recurrence.
/// Returns 0 for p < 0 so that derivative identities need no special case.
[[nodiscard]] double laguerre(int p, int alpha, double x);

/// The LG normalization prefactor selected by cfg.normalization.
[[nodiscard]] double lg_normalization(const BeamConfig& cfg);

/// Dimensionless LG amplitude (E0 = 1).
[[nodiscard]] double lg_amplitude(const BeamConfig& cfg, double r, double z);

/// Phase of the LG beam carrying sign * l (sign is +1 or -1).
[[nodiscard]] double lg_phase(const BeamConfig& cfg, double r, double z, double phi, int sign);

/// Phase of the Ferris wheel superposition; independent of φ.
[[nodiscard]] double ferris_phase(const BeamConfig& cfg, double r, double z);

/// Rabi-frequency envelope Ω(r, z) (no azimuthal modulation).
[[nodiscard]] double rabi_envelope(const BeamConfig& cfg, double r, double z);

/// Ω_rot = Δω / 2l. Throws ZeroWinding for l == 0.
[[nodiscard]] double rotation_frequency(const BeamConfig& cfg);

/// Full rotation period 2π/|Ω_rot|; +inf when the pattern is static.
[[nodiscard]] double rotation_period(const BeamConfig& cfg);

/// Azimuthal argument lφ - Δω t/2 of the modulated Rabi frequency.
/// Time is reduced modulo rotation_period() first, so the result is exactly
/// periodic in t.
[[nodiscard]] double modulation_argument(const BeamConfig& cfg, double phi, double t);

/// Modulated Rabi frequency Ω(r, z) cos(lφ - Δω t/2).
[[nodiscard]] double rabi(const BeamConfig& cfg, const FieldPoint& point);

/// Ω0 = Γ sqrt(I / 2 I_S) for a beam of power P and waist w0, I = P / (π w0²).
[[nodiscard]] double rabi_from_intensity(double power, double waist, double saturation_intensity,
                                         double linewidth);

/// Ω(r, z) with its r/z partials up to second order (φ and t entries zero).
[[nodiscard]] ScalarJet rabi_envelope_jet(const BeamConfig& cfg, double r, double z);

/// Modulated Rabi frequency with all partials.
[[nodiscard]] ScalarJet rabi_jet(const BeamConfig& cfg, const FieldPoint& point);

/// Ferris phase with all partials (φ and t entries are identically zero).
[[nodiscard]] ScalarJet ferris_phase_jet(const BeamConfig& cfg, double r, double z);

}  // namespace gaugewheel

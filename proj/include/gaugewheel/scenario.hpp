#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/gauge.hpp"
#include "gaugewheel/optics.hpp"

namespace gaugewheel {

/// Literature constants for the Cs-133 D2 line (6S1/2 - 6P3/2).
namespace cs133 {
inline constexpr double mass = 2.20695e-25;                    // kg
inline constexpr double wavelength = 852.35e-9;                // m
inline constexpr double linewidth = constants::two_pi * 5.22e6;  // rad/s
inline constexpr double saturation_intensity = 11.0;           // W/m²
inline constexpr double speed_of_light = 299792458.0;          // m/s
inline constexpr double transition_frequency = constants::two_pi * speed_of_light / wavelength;
inline constexpr const char* transition = "Cs-133 6S1/2-6P3/2";
}  // namespace cs133

/// Inclusive linear range; count == 1 samples `min` only.
struct AxisRange {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 1;

    [[nodiscard]] double at(std::size_t i) const;
    friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

/// Sampling grid. The azimuthal axis is half-open: count points spaced
/// (max - min)/count starting at min, so a full turn has no duplicate.
struct GridSpec {
    AxisRange r;
    AxisRange phi;
    AxisRange z;
    AxisRange t;

    void validate() const;
    [[nodiscard]] double phi_at(std::size_t j) const;
    [[nodiscard]] std::size_t spatial_size() const { return r.count * phi.count * z.count; }
    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct Scenario {
    std::string label;
    BeamConfig beam;
    AtomConfig atom;
    GridSpec grid;
    FieldConvention convention = FieldConvention::standard;
    std::uint64_t seed = 20161;

    void validate() const;
    [[nodiscard]] GaugeModel model() const { return GaugeModel(beam, atom, convention); }
};

/// Named parameter sets: fig1 (l = 1), fig3 (l = 2), their rotating variants
/// fig1-rotating / fig3-rotating (Δω = 4|l|Γ), and custom-template.
[[nodiscard]] Scenario preset(std::string_view name);
[[nodiscard]] std::vector<std::string> preset_names();

struct ValidityReport {
    bool rotating = false;
    double rotation_frequency = 0.0;      ///< Ω_rot, rad/s
    bool adiabatic_window_ok = true;      ///< Γ < |Ω_rot| < Ω0 (true when static)
    double interaction_time_limit = 0.0;  ///< 1/Γ, s
    bool freq_shift_window_ok = true;     ///< 2|l|Γ < |Δω| < 20|l|Γ (true when static)
    bool large_detuning_ok = true;        ///< |δ| >= 5 Ω0 (checked only when requested)
    std::vector<std::string> warnings;
};

inline constexpr double kLargeDetuningRatio = 5.0;

/// Physics-window checks. Never throws for out-of-window values; they become warnings.
[[nodiscard]] ValidityReport validate_scenario(const Scenario& s, bool large_detuning_requested = false);

[[nodiscard]] nlohmann::json to_json(const Scenario& s);
/// Accepts SI keys (`*_m`, `*_rad_per_s`, ...) or linewidth/waist-relative keys.
[[nodiscard]] Scenario scenario_from_json(const nlohmann::json& j);
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

}  // namespace gaugewheel

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaugewheel/compare.hpp"
#include "gaugewheel/scenario.hpp"

namespace gaugewheel {

/// hard: decides the exit status. soft: large-detuning expansions, reported
/// with a pass flag but never fail the run. report: informational only.
enum class CheckKind { hard, soft, report };

struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::hard;
    double value = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    std::string detail;
    std::optional<ComparisonReport> comparison;
};

struct ValidationOptions {
    std::size_t n_points = 1000;
    std::size_t corotation_points = 100;
    std::optional<std::uint64_t> seed;  ///< defaults to the scenario seed
    std::size_t workers = 0;
    /// Relative perturbation applied to the static closed-form B before
    /// comparison; nonzero only in self-tests of the harness.
    double closed_form_corruption = 0.0;
};

struct ValidationResult {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool hard_pass() const;
    [[nodiscard]] const CheckResult* find(const std::string& name) const;
    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string to_key_value() const;
};

/// max over r of the Rabi envelope Ω(r, z = 0).
[[nodiscard]] double peak_envelope(const BeamConfig& beam);

/// The scenario's model if it rotates, otherwise the same model with Δω = 4|l|Γ.
[[nodiscard]] GaugeModel rotating_model(const Scenario& s);

/// Runs the full comparison suite against the scenario.
[[nodiscard]] ValidationResult run_validation(const Scenario& s, const ValidationOptions& options = {});

}  // namespace gaugewheel

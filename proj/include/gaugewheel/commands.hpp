#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace gaugewheel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitTolerance = 1;
inline constexpr int kExitConfig = 2;

struct CommandOptions {
    std::optional<std::filesystem::path> scenario;
    std::optional<std::string> preset;
    std::string field = "B";
    double time = 0.0;
    std::optional<std::filesystem::path> out;
    std::optional<std::size_t> frames;
    std::optional<double> t_start;
    std::optional<double> t_end;
    std::optional<std::uint64_t> seed;
    std::string seeds = "auto:12";  ///< "auto:N", "none", or "r/w0,phi[,z/w0];..."
    std::optional<double> step;     ///< field-line step in waists
    std::size_t max_steps = 4000;
    std::size_t workers = 0;
    std::size_t n_points = 1000;
    double closed_form_corruption = 0.0;  ///< harness self-test only
};

/// Each command returns its exit code and never throws.
int cmd_validate(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_sample(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_lines(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_animate(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_info(const CommandOptions& o, std::ostream& out, std::ostream& err);

}  // namespace gaugewheel

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaugewheel/field_lines.hpp"
#include "gaugewheel/sampler.hpp"
#include "gaugewheel/scenario.hpp"

namespace gaugewheel {

inline constexpr const char* kToolVersion = "0.1.0";

/// "%.17g" formatting.
[[nodiscard]] std::string format_number(double x);

/// φ reduced to [0, 2π).
[[nodiscard]] double canonical_phi(double phi);

/// Frame as CSV text. Vector fields: r_m,phi_rad,z_m,t_s,v_r[u],v_phi[u],v_z[u],magnitude[u];
/// scalar fields: r_m,phi_rad,z_m,t_s,value[u]. B is written in mT, E in V/m,
/// A in T*m, V in J, rabi in rad/s.
[[nodiscard]] std::string frame_csv(const FieldFrame& frame);
[[nodiscard]] std::string field_unit(FieldKind kind);

/// Columns line_id,point_index,r_m,phi_rad,z_m; φ is left unwrapped.
[[nodiscard]] std::string polylines_csv(const std::vector<Polyline>& lines);

/// Writes `content` to `path`, throwing IoError with the path on failure.
void write_text(const std::filesystem::path& path, const std::string& content);

[[nodiscard]] std::string sha256_hex(const std::string& data);

struct OutputFile {
    std::string path;
    std::string sha256;
};

struct RunManifest {
    std::string tool_version = kToolVersion;
    std::string command;
    nlohmann::json scenario;
    std::uint64_t seed = 0;
    std::string timestamp;  ///< UTC, ISO 8601
    std::vector<OutputFile> outputs;

    [[nodiscard]] nlohmann::json to_json() const;
};

[[nodiscard]] std::string utc_timestamp();

}  // namespace gaugewheel

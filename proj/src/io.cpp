#include "gaugewheel/io.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"

namespace gaugewheel {

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

double canonical_phi(double phi) {
    double p = std::fmod(phi, constants::two_pi);
    if (p < 0.0) p += constants::two_pi;
    if (p >= constants::two_pi) p = 0.0;
    return p + 0.0;
}

std::string field_unit(FieldKind kind) {
    switch (kind) {
        case FieldKind::magnetic: return "mT";
        case FieldKind::electric: return "V/m";
        case FieldKind::vector_potential: return "T*m";
        case FieldKind::scalar_potential: return "J";
        case FieldKind::rabi: return "rad/s";
    }
    return "";
}

std::string frame_csv(const FieldFrame& frame) {
    const std::string u = field_unit(frame.kind);
    const bool vec = is_vector(frame.kind);
    const double scale = frame.kind == FieldKind::magnetic ? 1e3 : 1.0;
    // x + 0.0 turns -0 into 0.
    auto v = [scale](double x) { return scale * x + 0.0; };
    std::string out = "r_m,phi_rad,z_m,t_s,";
    out += vec ? fmt::format("v_r[{0}],v_phi[{0}],v_z[{0}],magnitude[{0}]\n", u) : fmt::format("value[{}]\n", u);
    out.reserve(frame.rows.size() * (vec ? 200 : 110));
    for (const FrameRow& row : frame.rows) {
        const FieldPoint& p = row.point;
        out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},", p.r, canonical_phi(p.phi), p.z + 0.0, p.t + 0.0);
        if (vec) {
            out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", v(row.vector.r), v(row.vector.phi),
                               v(row.vector.z), v(row.scalar));
        } else {
            out += fmt::format("{:.17g}\n", row.scalar + 0.0);
        }
    }
    return out;
}

std::string polylines_csv(const std::vector<Polyline>& lines) {
    std::string out = "line_id,point_index,r_m,phi_rad,z_m\n";
    for (std::size_t id = 0; id < lines.size(); ++id) {
        const auto& pts = lines[id].points;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            out += fmt::format("{},{},{:.17g},{:.17g},{:.17g}\n", id, i, pts[i].r, pts[i].phi, pts[i].z);
        }
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json files = nlohmann::json::array();
    for (const OutputFile& f : outputs) files.push_back({{"path", f.path}, {"sha256", f.sha256}});
    return {{"tool_version", tool_version}, {"command", command}, {"scenario", scenario},
            {"seed", seed},                 {"timestamp", timestamp}, {"outputs", files}};
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    return fmt::format("{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                       tm.tm_hour, tm.tm_min, tm.tm_sec);
}

}  // namespace gaugewheel

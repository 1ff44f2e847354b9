#include "gaugewheel/optics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"

namespace gaugewheel {

namespace {

double factorial(int n) {
    return std::tgamma(static_cast<double>(n) + 1.0);
}

/// Value and first two derivatives of a function of one variable.
struct Jet1 {
    double v;
    double d;
    double dd;
};

Jet1 operator*(const Jet1& a, const Jet1& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
}

/// Radial profile F(ρ) = (√2 ρ)^|l| L_p^|l|(2ρ²) exp(-ρ²) with ρ = r / w(z).
Jet1 radial_profile(int abs_l, int p, double rho) {
    const double s = std::sqrt(2.0) * rho;
    const double a = abs_l;
    Jet1 power{std::pow(s, a), 0.0, 0.0};
    if (abs_l >= 1) power.d = a * std::sqrt(2.0) * std::pow(s, a - 1.0);
    if (abs_l >= 2) power.dd = a * (a - 1.0) * 2.0 * std::pow(s, a - 2.0);

    const double u = 2.0 * rho * rho;
    const double lag = laguerre(p, abs_l, u);
    const double lag_d = -laguerre(p - 1, abs_l + 1, u);
    const double lag_dd = laguerre(p - 2, abs_l + 2, u);
    const Jet1 poly{lag, lag_d * 4.0 * rho, lag_dd * 16.0 * rho * rho + lag_d * 4.0};

    const double g = std::exp(-rho * rho);
    const Jet1 gauss{g, -2.0 * rho * g, (4.0 * rho * rho - 2.0) * g};

    return power * poly * gauss;
}

}  // namespace

void BeamConfig::validate() const {
    auto fail = [](const std::string& what) { throw InvalidConfig("beam: " + what); };
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) fail("wavelength must be > 0");
    if (!(waist > 0.0) || !std::isfinite(waist)) fail("waist must be > 0");
    if (radial_index < 0) fail("radial index p must be >= 0");
    if (abs_winding() < 1) fail("winding |l| must be >= 1");
    if (!(peak_rabi >= 0.0) || !std::isfinite(peak_rabi)) fail("peak Rabi frequency must be >= 0");
    if (!std::isfinite(freq_shift)) fail("frequency shift must be finite");
}

double BeamGeometry::width(double z) const {
    const double q = z / rayleigh_range;
    return waist * std::sqrt(1.0 + q * q);
}

double BeamGeometry::width_dz(double z) const {
    return waist * waist * z / (rayleigh_range * rayleigh_range * width(z));
}

double BeamGeometry::width_dzz(double z) const {
    const double w = width(z);
    const double wp = width_dz(z);
    return (waist * waist / (rayleigh_range * rayleigh_range) - wp * wp) / w;
}

BeamGeometry beam_geometry(const BeamConfig& cfg) {
    cfg.validate();
    return {constants::two_pi / cfg.wavelength, constants::pi * cfg.waist * cfg.waist / cfg.wavelength,
            cfg.waist};
}

double laguerre(int p, int alpha, double x) {
    if (p < 0) return 0.0;
    if (p == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int n = 2; n <= p; ++n) {
        const double next = ((2.0 * n - 1.0 + alpha - x) * cur - (n - 1.0 + alpha) * prev) / n;
        prev = cur;
        cur = next;
    }
    return cur;
}

double lg_normalization(const BeamConfig& cfg) {
    const int p = cfg.radial_index;
    const int a = cfg.abs_winding();
    if (cfg.normalization == LgNormalization::standard) {
        return std::sqrt(factorial(p) / factorial(a + p));
    }
    return std::sqrt(factorial(p) / (factorial(a) + factorial(p)));
}

double lg_amplitude(const BeamConfig& cfg, double r, double z) {
    const BeamGeometry geo = beam_geometry(cfg);
    return lg_normalization(cfg) * radial_profile(cfg.abs_winding(), cfg.radial_index, r / geo.width(z)).v;
}

double lg_phase(const BeamConfig& cfg, double r, double z, double phi, int sign) {
    if (sign != 1 && sign != -1) throw InvalidConfig("lg_phase: sign must be +1 or -1");
    return ferris_phase(cfg, r, z) + sign * cfg.winding * phi;
}

double ferris_phase(const BeamConfig& cfg, double r, double z) {
    const BeamGeometry geo = beam_geometry(cfg);
    const double zr = geo.rayleigh_range;
    return geo.k * z - cfg.gouy_order() * std::atan(z / zr) + geo.k * r * r * z / (2.0 * (z * z + zr * zr));
}

double rabi_envelope(const BeamConfig& cfg, double r, double z) {
    return 2.0 * cfg.peak_rabi * lg_amplitude(cfg, r, z);
}

double rotation_frequency(const BeamConfig& cfg) {
    if (cfg.winding == 0) throw ZeroWinding("rotation frequency undefined for l = 0");
    return cfg.freq_shift / (2.0 * cfg.winding);
}

double rotation_period(const BeamConfig& cfg) {
    const double rot = rotation_frequency(cfg);
    if (rot == 0.0) return std::numeric_limits<double>::infinity();
    return constants::two_pi / std::abs(rot);
}

double modulation_argument(const BeamConfig& cfg, double phi, double t) {
    if (cfg.freq_shift == 0.0) return cfg.winding * phi;
    const double reduced = std::fmod(t, rotation_period(cfg));
    return cfg.winding * phi - 0.5 * cfg.freq_shift * reduced;
}

double rabi(const BeamConfig& cfg, const FieldPoint& point) {
    return rabi_envelope(cfg, point.r, point.z) * std::cos(modulation_argument(cfg, point.phi, point.t));
}

double rabi_from_intensity(double power, double waist, double saturation_intensity, double linewidth) {
    if (!(power >= 0.0)) throw InvalidConfig("rabi_from_intensity: power must be >= 0");
    if (!(waist > 0.0)) throw InvalidConfig("rabi_from_intensity: waist must be > 0");
    if (!(saturation_intensity > 0.0)) {
        throw InvalidConfig("rabi_from_intensity: saturation intensity must be > 0");
    }
    const double intensity = power / (constants::pi * waist * waist);
    return linewidth * std::sqrt(intensity / (2.0 * saturation_intensity));
}

ScalarJet rabi_envelope_jet(const BeamConfig& cfg, double r, double z) {
    const BeamGeometry geo = beam_geometry(cfg);
    const double w = geo.width(z);
    const double wp = geo.width_dz(z);
    const double wpp = geo.width_dzz(z);
    const double scale = 2.0 * cfg.peak_rabi * lg_normalization(cfg);
    const Jet1 f = radial_profile(cfg.abs_winding(), cfg.radial_index, r / w);

    // ρ = r / w(z)
    const double rho_r = 1.0 / w;
    const double rho_z = -r * wp / (w * w);
    const double rho_rz = -wp / (w * w);
    const double rho_zz = -r * (wpp / (w * w) - 2.0 * wp * wp / (w * w * w));

    ScalarJet j;
    j.value = scale * f.v;
    j.d_r = scale * f.d * rho_r;
    j.d_z = scale * f.d * rho_z;
    j.d_rr = scale * f.dd * rho_r * rho_r;
    j.d_rz = scale * (f.dd * rho_r * rho_z + f.d * rho_rz);
    j.d_zz = scale * (f.dd * rho_z * rho_z + f.d * rho_zz);
    return j;
}

ScalarJet rabi_jet(const BeamConfig& cfg, const FieldPoint& point) {
    const ScalarJet env = rabi_envelope_jet(cfg, point.r, point.z);
    const double arg = modulation_argument(cfg, point.phi, point.t);
    const double c = std::cos(arg);
    const double s = std::sin(arg);
    const double l = cfg.winding;

    ScalarJet j;
    j.value = env.value * c;
    j.d_r = env.d_r * c;
    j.d_z = env.d_z * c;
    j.d_phi = -l * env.value * s;
    j.d_t = 0.5 * cfg.freq_shift * env.value * s;
    j.d_rr = env.d_rr * c;
    j.d_rz = env.d_rz * c;
    j.d_zz = env.d_zz * c;
    j.d_rphi = -l * env.d_r * s;
    j.d_phiz = -l * env.d_z * s;
    j.d_phiphi = -l * l * env.value * c;
    return j;
}

ScalarJet ferris_phase_jet(const BeamConfig& cfg, double r, double z) {
    const BeamGeometry geo = beam_geometry(cfg);
    const double k = geo.k;
    const double zr = geo.rayleigh_range;
    const double gouy = cfg.gouy_order();
    const double s = z * z + zr * zr;

    ScalarJet j;
    j.value = ferris_phase(cfg, r, z);
    j.d_r = k * r * z / s;
    j.d_rr = k * z / s;
    j.d_rz = k * r * (zr * zr - z * z) / (s * s);
    j.d_z = k - gouy * zr / s + 0.5 * k * r * r * (zr * zr - z * z) / (s * s);
    j.d_zz = 2.0 * gouy * zr * z / (s * s) + k * r * r * z * (z * z - 3.0 * zr * zr) / (s * s * s);
    return j;
}

}  // namespace gaugewheel

#include "gaugewheel/closed_forms.hpp"

#include <cmath>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"

namespace gaugewheel {

namespace {

/// Quantities shared by every focal-plane closed form.
struct FocalPlane {
    double l;        // signed winding
    double abs_l;
    double r;
    double k;        // plane-wave wavenumber
    double k_eff;    // ∂φ_F/∂z at z = 0
    double zr;
    double w0;
    double envelope; // Ω(r, 0)
    double s;        // sin(lφ - Δωt/2)
    double c;        // cos(lφ - Δωt/2)
    double rabi;     // Ω̃
    double g;        // |l|/r - 2r/w0²  (∂_r ln Ω at z = 0, p = 0)
    double g_r;      // ∂_r g
    double delta;
    double charge;
    double freq_shift;

    [[nodiscard]] double rabi2() const { return rabi * rabi; }
    [[nodiscard]] double tan() const { return s / c; }
};

FocalPlane focal_plane(const GaugeModel& model, double r, double phi, double t) {
    const BeamConfig& beam = model.beam();
    if (beam.radial_index != 0) {
        throw InvalidConfig("closed forms are only available for radial index p = 0");
    }
    if (!(r > 0.0)) throw AxisError("closed forms: undefined on the axis r = 0");
    const BeamGeometry& geo = model.geometry();
    FocalPlane f{};
    f.l = beam.winding;
    f.abs_l = beam.abs_winding();
    f.r = r;
    f.k = geo.k;
    f.k_eff = focused_wavenumber(model, r);
    f.zr = geo.rayleigh_range;
    f.w0 = geo.waist;
    f.envelope = rabi_envelope(beam, r, 0.0);
    const double arg = modulation_argument(beam, phi, t);
    f.s = std::sin(arg);
    f.c = std::cos(arg);
    f.rabi = f.envelope * f.c;
    f.g = f.abs_l / r - 2.0 * r / (f.w0 * f.w0);
    f.g_r = -f.abs_l / (r * r) - 2.0 / (f.w0 * f.w0);
    f.delta = model.atom().detuning;
    f.charge = model.atom().charge;
    f.freq_shift = beam.freq_shift;
    return f;
}

void require_detuning(const FocalPlane& f) {
    if (f.delta == 0.0) throw DegeneratePoint("large-detuning forms need delta != 0");
}

/// Leading-order -∇V/q for |δ| ≫ Ω under the model's convention.
CylVec electric_leading_order(const GaugeModel& model, const FocalPlane& f, TrigForm trig) {
    require_detuning(f);
    const double pre = -model.potential_prefactor() / (f.charge * f.delta * f.delta);
    const double om2 = f.envelope * f.envelope;
    const double l = f.l;
    const double r = f.r;
    // Ω̃² tan² and Ω̃² tan
    const double sin2_term = trig == TrigForm::regularized ? om2 * f.s * f.s : f.rabi2() * f.tan() * f.tan();
    const double sincos_term = trig == TrigForm::regularized ? om2 * f.s * f.c : f.rabi2() * f.tan();
    const double k2 = f.k_eff * f.k_eff;

    const double e_r =
        pre * (2.0 * f.g * (f.rabi2() * (f.g * f.g + k2) + sin2_term * l * l / (r * r)) +
               f.rabi2() * (2.0 * f.g * f.g_r + 2.0 * f.k_eff * f.k * r / (f.zr * f.zr)) -
               2.0 * l * l * sin2_term / (r * r * r));
    const double e_phi =
        pre / r * sincos_term * (-2.0 * l * (f.g * f.g + k2) + 2.0 * l * l * l / (r * r));
    return {e_r, e_phi, 0.0};
}

/// Radial component shared by the published static and rotating forms.
double printed_electric_radial(const FocalPlane& f, double pre, TrigForm trig) {
    const double om2 = f.envelope * f.envelope;
    const double l = f.l;
    const double r = f.r;
    const double k2 = f.k * f.k;
    const double sin2_term = trig == TrigForm::regularized ? om2 * f.s * f.s : f.rabi2() * f.tan() * f.tan();
    const double first = 2.0 * f.g * (f.rabi2() * (f.g * f.g + k2) + sin2_term * l * l / (r * r));
    const double second = 2.0 * f.g * f.g_r * f.rabi2() - 2.0 * l * l * sin2_term / (r * r * r) +
                          2.0 * k2 * r * f.rabi2() / (f.zr * f.zr) +
                          2.0 * k2 * f.rabi2() * f.rabi2() / (f.delta * f.delta) * f.g;
    return pre * (first + second);
}

}  // namespace

double focused_wavenumber(const GaugeModel& model, double r) {
    const BeamGeometry& geo = model.geometry();
    const double zr = geo.rayleigh_range;
    return geo.k - model.beam().gouy_order() / zr + geo.k * r * r / (2.0 * zr * zr);
}

CylVec magnetic_closed_z0(const GaugeModel& model, double r, double phi, double t, ClosedFormVariant variant,
                          TrigForm trig) {
    if (r == 0.0) return {};
    const FocalPlane f = focal_plane(model, r, phi, t);
    if (f.delta == 0.0) return {};
    const double dd = f.delta * f.delta + f.rabi2();
    const double common = constants::hbar * f.delta / (f.charge * dd * std::sqrt(dd));
    const double om2_tan = trig == TrigForm::regularized ? f.envelope * f.envelope * f.s * f.c
                                                         : f.rabi2() * f.tan();
    if (variant == ClosedFormVariant::printed) {
        const double pre = common * f.k * f.l;
        return {pre * om2_tan / r, pre * f.rabi2() * f.g, 0.0};
    }
    const double pre = model.magnetic_prefactor() * common * f.k_eff;
    return {pre * f.l * om2_tan / r, pre * f.rabi2() * f.g, 0.0};
}

CylVec electric_closed_z0(const GaugeModel& model, double r, double phi, ClosedFormVariant variant,
                          TrigForm trig) {
    if (r == 0.0) return {};
    const FocalPlane f = focal_plane(model, r, phi, 0.0);
    if (variant == ClosedFormVariant::derived) return electric_leading_order(model, f, trig);

    require_detuning(f);
    const double pre = -constants::hbar * constants::hbar /
                       (8.0 * model.atom().mass * f.charge * f.delta * f.delta);
    const double l = f.l;
    const double om2 = f.envelope * f.envelope;
    const double k2 = f.k * f.k;
    const double sincos_term = trig == TrigForm::regularized ? om2 * f.s * f.c : f.rabi2() * f.tan();
    // Ω̃² tan (-2l·l² tan²/r² + 2l² sec²/r²)
    double sec_term = 0.0;
    if (trig == TrigForm::regularized) {
        sec_term = 2.0 * l * l * om2 / (r * r) * f.s * f.c;
        if (l != 1.0) sec_term += 2.0 * l * l * om2 / (r * r) * (1.0 - l) * f.s * f.s * f.s / f.c;
    } else {
        const double tn = f.tan();
        sec_term = f.rabi2() * tn * (-2.0 * l * l * l * tn * tn + 2.0 * l * l / (f.c * f.c)) / (r * r);
    }
    const double e_phi = pre / r *
                         (sincos_term * (-2.0 * l * (f.g * f.g + k2) +
                                         2.0 * l * k2 * f.rabi2() / (f.delta * f.delta)) +
                          sec_term);
    return {printed_electric_radial(f, pre, trig), e_phi, 0.0};
}

CylVec magnetic_largedet_z0(const GaugeModel& model, double r, double phi, double t, ClosedFormVariant variant) {
    if (r == 0.0) return {};
    const FocalPlane f = focal_plane(model, r, phi, t);
    require_detuning(f);
    const double om2 = f.envelope * f.envelope;
    const double sin2 = 2.0 * f.s * f.c;  // sin(2lφ - Δωt)
    if (variant == ClosedFormVariant::printed) {
        const double pre = constants::hbar * f.k * om2 / (constants::pi * f.charge * f.delta * f.delta);
        return {pre * f.l * sin2 / (2.0 * r), pre * f.g * f.c * f.c, 0.0};
    }
    const double pre = model.magnetic_prefactor() * constants::hbar * f.k_eff * om2 /
                       (f.charge * f.delta * std::abs(f.delta));
    return {pre * f.l * sin2 / (2.0 * r), pre * f.g * f.c * f.c, 0.0};
}

CylVec electric_largedet_z0(const GaugeModel& model, double r, double phi, double t, ClosedFormVariant variant,
                            TrigForm trig) {
    if (r == 0.0) return {};
    const FocalPlane f = focal_plane(model, r, phi, t);
    require_detuning(f);
    const double om2 = f.envelope * f.envelope;
    const double sin2 = 2.0 * f.s * f.c;

    if (variant == ClosedFormVariant::derived) {
        CylVec e = electric_leading_order(model, f, trig);
        e.z = constants::hbar * f.freq_shift * f.k_eff * om2 * sin2 /
              (8.0 * f.charge * f.delta * std::abs(f.delta));
        return e;
    }

    const double pre = -constants::hbar * constants::hbar /
                       (8.0 * model.atom().mass * f.charge * f.delta * f.delta);
    const double l = f.l;
    const double r2 = r * r;
    const double k2 = f.k * f.k;
    double e_phi = 0.0;
    if (trig == TrigForm::regularized) {
        // Ω̃² tan (-2l l² tan²/r² + 2l³ sec²/r²) collapses to 2l³ Ω² sin cos / r².
        e_phi = pre / r * om2 * f.s * f.c *
                (-2.0 * l * (f.g * f.g + k2) + 2.0 * l * l * l / r2 -
                 2.0 * l * f.rabi2() * k2 / (f.delta * f.delta));
    } else {
        const double tn = f.tan();
        const double sec2 = 1.0 / (f.c * f.c);
        e_phi = pre / r * f.rabi2() *
                (-2.0 * l * tn * (f.g * f.g + l * l * tn * tn / r2 + k2) +
                 2.0 * l * l * l / r2 * tn * sec2 - 2.0 * l * f.rabi2() * k2 / (f.delta * f.delta) * tn);
    }
    const double e_z = constants::hbar * f.freq_shift * f.k * om2 * sin2 / (8.0 * f.charge * f.delta * f.delta);
    return {printed_electric_radial(f, pre, trig), e_phi, e_z};
}

}  // namespace gaugewheel

#include "gaugewheel/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaugewheel/constants.hpp"
#include "gaugewheel/errors.hpp"

namespace gaugewheel {

namespace {

void require_off_axis(const FieldPoint& p, const char* what) {
    if (!(p.r > 0.0)) throw AxisError(std::string(what) + ": undefined on the axis r = 0");
}

/// cosΘ - 1 without cancellation for δ > 0.
double mixing_cos_minus_one(double detuning, double rabi) {
    const double root = std::sqrt(detuning * detuning + rabi * rabi);
    if (root == 0.0) throw DegeneratePoint("dressed basis undefined for delta = 0 and Rabi = 0");
    if (detuning > 0.0) return -rabi * rabi / (root * (root + detuning));
    return detuning / root - 1.0;
}

}  // namespace

void AtomConfig::validate() const {
    auto fail = [](const std::string& what) { throw InvalidConfig("atom: " + what); };
    if (!(linewidth > 0.0) || !std::isfinite(linewidth)) fail("linewidth must be > 0");
    if (!(mass > 0.0) || !std::isfinite(mass)) fail("mass must be > 0");
    if (!(charge > 0.0) || !std::isfinite(charge)) fail("fictitious charge must be > 0");
    if (!std::isfinite(detuning)) fail("detuning must be finite");
    if (!(saturation_intensity >= 0.0)) fail("saturation intensity must be >= 0");
}

double mixing_cos(double detuning, double rabi) {
    const double root = std::sqrt(detuning * detuning + rabi * rabi);
    if (root == 0.0) throw DegeneratePoint("dressed basis undefined for delta = 0 and Rabi = 0");
    return detuning / root;
}

std::pair<DressedState, DressedState> dressed_states(double detuning, double rabi, double ferris_phase) {
    const double theta = std::acos(std::clamp(mixing_cos(detuning, rabi), -1.0, 1.0));
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::complex<double> phase = std::polar(1.0, ferris_phase);
    return {DressedState{c, phase * s}, DressedState{-std::conj(phase) * s, c}};
}

GaugeModel::GaugeModel(BeamConfig beam, AtomConfig atom, FieldConvention convention)
    : beam_(std::move(beam)), atom_(std::move(atom)), convention_(convention) {
    atom_.validate();
    geometry_ = beam_geometry(beam_);
}

double GaugeModel::magnetic_prefactor() const {
    return convention_ == FieldConvention::standard ? 0.5 : 1.0;
}

double GaugeModel::potential_prefactor() const {
    const double hbar2 = constants::hbar * constants::hbar;
    return convention_ == FieldConvention::standard ? hbar2 / (8.0 * atom_.mass) : hbar2 / (2.0 * atom_.mass);
}

double GaugeModel::rabi(const FieldPoint& p) const { return gaugewheel::rabi(beam_, p); }

double GaugeModel::ferris_phase(const FieldPoint& p) const {
    return gaugewheel::ferris_phase(beam_, p.r, p.z);
}

double GaugeModel::mixing_cos(const FieldPoint& p) const {
    return gaugewheel::mixing_cos(atom_.detuning, rabi(p));
}

CylVec GaugeModel::grad_rabi(const FieldPoint& p) const {
    require_off_axis(p, "grad_rabi");
    return rabi_jet(beam_, p).gradient(p.r);
}

CylVec GaugeModel::grad_ferris_phase(const FieldPoint& p) const {
    const ScalarJet j = ferris_phase_jet(beam_, p.r, p.z);
    return {j.d_r, 0.0, j.d_z};
}

CylVec GaugeModel::vector_potential(const FieldPoint& p) const {
    const double factor = 0.5 * constants::hbar / atom_.charge *
                          mixing_cos_minus_one(atom_.detuning, rabi(p));
    return factor * grad_ferris_phase(p);
}

CylVec GaugeModel::vector_potential_rate(const FieldPoint& p) const {
    const ScalarJet om = rabi_jet(beam_, p);
    const double d = atom_.detuning;
    const double dd = d * d + om.value * om.value;
    if (dd == 0.0) throw DegeneratePoint("dressed basis undefined for delta = 0 and Rabi = 0");
    // ∂cosΘ/∂Ω̃ = -δ Ω̃ / D^{3/2}
    const double dcos_dt = -d * om.value / (dd * std::sqrt(dd)) * om.d_t;
    return (0.5 * constants::hbar / atom_.charge * dcos_dt) * grad_ferris_phase(p);
}

double GaugeModel::scalar_potential(const FieldPoint& p) const {
    require_off_axis(p, "scalar_potential");
    const ScalarJet om = rabi_jet(beam_, p);
    const ScalarJet ph = ferris_phase_jet(beam_, p.r, p.z);
    const double d2 = atom_.detuning * atom_.detuning;
    const double dd = d2 + om.value * om.value;
    if (dd == 0.0) throw DegeneratePoint("dressed basis undefined for delta = 0 and Rabi = 0");
    return potential_prefactor() *
           (d2 / (dd * dd) * om.gradient_norm2(p.r) + om.value * om.value / dd * ph.gradient_norm2(p.r));
}

CylVec GaugeModel::scalar_potential_gradient(const FieldPoint& p) const {
    require_off_axis(p, "scalar_potential_gradient");
    const ScalarJet om = rabi_jet(beam_, p);
    const ScalarJet ph = ferris_phase_jet(beam_, p.r, p.z);
    const double w = om.value;
    const double d2 = atom_.detuning * atom_.detuning;
    const double dd = d2 + w * w;
    if (dd == 0.0) throw DegeneratePoint("dressed basis undefined for delta = 0 and Rabi = 0");

    const double a = d2 / (dd * dd);
    const double a_w = -4.0 * d2 * w / (dd * dd * dd);
    const double b = w * w / dd;
    const double b_w = 2.0 * w * d2 / (dd * dd);

    const double g1 = om.gradient_norm2(p.r);
    const double g2 = ph.gradient_norm2(p.r);
    const CylVec dg1 = om.gradient_norm2_partials(p.r);
    const CylVec dg2 = ph.gradient_norm2_partials(p.r);
    const CylVec dw{om.d_r, om.d_phi, om.d_z};

    const double c = potential_prefactor();
    const CylVec partials = c * ((a_w * g1 + b_w * g2) * dw + a * dg1 + b * dg2);
    return {partials.r, partials.phi / p.r, partials.z};
}

CylVec GaugeModel::magnetic_field(const FieldPoint& p) const {
    if (p.r == 0.0) return {};
    require_off_axis(p, "magnetic_field");
    const double d = atom_.detuning;
    if (d == 0.0) return {};
    const ScalarJet om = rabi_jet(beam_, p);
    const double dd = d * d + om.value * om.value;
    const double factor = -magnetic_prefactor() * constants::hbar * d / atom_.charge * om.value /
                          (dd * std::sqrt(dd));
    return factor * cross(om.gradient(p.r), grad_ferris_phase(p));
}

CylVec GaugeModel::electric_field_static(const FieldPoint& p) const {
    if (p.r == 0.0) return {};
    return (-1.0 / atom_.charge) * scalar_potential_gradient(p);
}

CylVec GaugeModel::electric_field(const FieldPoint& p) const {
    if (p.r == 0.0) return {};
    return electric_field_static(p) - vector_potential_rate(p);
}

GaugeSample GaugeModel::sample(const FieldPoint& p) const {
    GaugeSample s;
    s.point = p;
    s.rabi = rabi(p);
    s.ferris_phase = ferris_phase(p);
    s.cos_theta = gaugewheel::mixing_cos(atom_.detuning, s.rabi);
    s.vector_potential = vector_potential(p);
    s.magnetic = magnetic_field(p);
    s.electric = electric_field(p);
    s.scalar_potential = p.r == 0.0 ? 0.0 : scalar_potential(p);
    return s;
}

GaugeModel GaugeModel::with_detuning(double detuning) const {
    AtomConfig atom = atom_;
    atom.detuning = detuning;
    return {beam_, atom, convention_};
}

GaugeModel GaugeModel::with_peak_rabi(double peak_rabi) const {
    BeamConfig beam = beam_;
    beam.peak_rabi = peak_rabi;
    return {beam, atom_, convention_};
}

GaugeModel GaugeModel::with_convention(FieldConvention convention) const {
    return {beam_, atom_, convention};
}

}  // namespace gaugewheel

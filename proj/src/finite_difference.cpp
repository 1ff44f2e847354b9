#include "gaugewheel/finite_difference.hpp"

#include <algorithm>
#include <cmath>

#include "gaugewheel/errors.hpp"

namespace gaugewheel {

namespace {

template <typename T, typename F>
T central2(const F& f, double h) {
    return (f(h) - f(-h)) * (1.0 / (2.0 * h));
}

template <typename T, typename F>
T central4(const F& f, double h) {
    return (f(-2.0 * h) - f(2.0 * h) + 8.0 * (f(h) - f(-h))) * (1.0 / (12.0 * h));
}

/// Derivative at offset 0 of the one-dimensional function f(offset).
template <typename T, typename F>
T derivative(const F& f, double h, FdScheme scheme) {
    switch (scheme) {
        case FdScheme::central2:
            return central2<T>(f, h);
        case FdScheme::central4:
            return central4<T>(f, h);
        case FdScheme::richardson:
            return (16.0 * central4<T>(f, 0.5 * h) - central4<T>(f, h)) * (1.0 / 15.0);
    }
    return central2<T>(f, h);
}

double stencil_reach(FdScheme scheme) { return scheme == FdScheme::central2 ? 1.0 : 2.0; }

struct Steps {
    double r;
    double phi;
    double z;
};

Steps spatial_steps(const FieldPoint& p, const StepPolicy& policy) {
    policy.validate();
    const Steps h{std::max(p.r, policy.length_scale) * policy.base_step, policy.base_step,
                  std::max(std::abs(p.z), policy.length_scale) * policy.base_step};
    if (p.r - stencil_reach(policy.scheme) * h.r <= 0.0) {
        throw AxisError("finite-difference stencil reaches the axis r = 0");
    }
    return h;
}

FieldPoint shifted(FieldPoint p, double dr, double dphi, double dz) {
    p.r += dr;
    p.phi += dphi;
    p.z += dz;
    return p;
}

}  // namespace

void StepPolicy::validate() const {
    if (!(base_step > 0.0)) throw InvalidConfig("step policy: base step must be > 0");
    if (!(time_step > 0.0)) throw InvalidConfig("step policy: time step must be > 0");
    if (!(length_scale > 0.0)) throw InvalidConfig("step policy: length scale must be > 0");
}

StepPolicy StepPolicy::for_beam(const BeamConfig& beam, FdScheme scheme) {
    StepPolicy policy;
    policy.scheme = scheme;
    policy.length_scale = beam.waist;
    return policy;
}

CylVec fd_gradient(const ScalarField& f, const FieldPoint& p, const StepPolicy& policy) {
    const Steps h = spatial_steps(p, policy);
    const double d_r = derivative<double>([&](double e) { return f(shifted(p, e, 0, 0)); }, h.r, policy.scheme);
    const double d_phi =
        derivative<double>([&](double e) { return f(shifted(p, 0, e, 0)); }, h.phi, policy.scheme);
    const double d_z = derivative<double>([&](double e) { return f(shifted(p, 0, 0, e)); }, h.z, policy.scheme);
    return {d_r, d_phi / p.r, d_z};
}

CylVec fd_curl(const VectorField& f, const FieldPoint& p, const StepPolicy& policy) {
    const Steps h = spatial_steps(p, policy);
    // ∂_r of (F_r, r F_φ, F_z)
    const CylVec d_r = derivative<CylVec>(
        [&](double e) {
            const FieldPoint q = shifted(p, e, 0, 0);
            CylVec v = f(q);
            v.phi *= q.r;
            return v;
        },
        h.r, policy.scheme);
    const CylVec d_phi = derivative<CylVec>([&](double e) { return f(shifted(p, 0, e, 0)); }, h.phi, policy.scheme);
    const CylVec d_z = derivative<CylVec>([&](double e) { return f(shifted(p, 0, 0, e)); }, h.z, policy.scheme);
    return {d_phi.z / p.r - d_z.phi, d_z.r - d_r.z, (d_r.phi - d_phi.r) / p.r};
}

double fd_divergence(const VectorField& f, const FieldPoint& p, const StepPolicy& policy) {
    const Steps h = spatial_steps(p, policy);
    const double d_r = derivative<double>(
        [&](double e) {
            const FieldPoint q = shifted(p, e, 0, 0);
            return q.r * f(q).r;
        },
        h.r, policy.scheme);
    const double d_phi =
        derivative<double>([&](double e) { return f(shifted(p, 0, e, 0)).phi; }, h.phi, policy.scheme);
    const double d_z = derivative<double>([&](double e) { return f(shifted(p, 0, 0, e)).z; }, h.z, policy.scheme);
    return (d_r + d_phi) / p.r + d_z;
}

CylVec fd_time_derivative(const VectorField& f, const FieldPoint& p, const StepPolicy& policy) {
    policy.validate();
    return derivative<CylVec>(
        [&](double e) {
            FieldPoint q = p;
            q.t += e;
            return f(q);
        },
        policy.time_step, policy.scheme);
}

double fd_time_derivative(const ScalarField& f, const FieldPoint& p, const StepPolicy& policy) {
    policy.validate();
    return derivative<double>(
        [&](double e) {
            FieldPoint q = p;
            q.t += e;
            return f(q);
        },
        policy.time_step, policy.scheme);
}

CylVec fd_electric_field_static(const GaugeModel& model, const FieldPoint& p, const StepPolicy& policy) {
    const CylVec grad = fd_gradient([&](const FieldPoint& q) { return model.scalar_potential(q); }, p, policy);
    return (-1.0 / model.atom().charge) * grad;
}

}  // namespace gaugewheel

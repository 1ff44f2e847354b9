#pragma once

#include "gaugewheel/cylvec.hpp"

namespace gaugewheel {

/// Value and coordinate partial derivatives (up to second order in space,
/// first order in time) of a scalar field in cylindrical coordinates.
/// Partials are taken with respect to the coordinates (r, φ, z, t), not the
/// orthonormal frame; use gradient() for frame components.
struct ScalarJet {
    double value = 0.0;
    double d_r = 0.0;
    double d_phi = 0.0;
    double d_z = 0.0;
    double d_t = 0.0;
    double d_rr = 0.0;
    double d_rphi = 0.0;
    double d_rz = 0.0;
    double d_phiphi = 0.0;
    double d_phiz = 0.0;
    double d_zz = 0.0;

    [[nodiscard]] CylVec gradient(double r) const { return {d_r, d_phi / r, d_z}; }

    [[nodiscard]] double gradient_norm2(double r) const {
        return d_r * d_r + d_phi * d_phi / (r * r) + d_z * d_z;
    }

    /// Coordinate partials (∂_r, ∂_φ, ∂_z) of |∇f|².
    [[nodiscard]] CylVec gradient_norm2_partials(double r) const {
        const double r2 = r * r;
        return {
            2.0 * (d_r * d_rr + d_phi * d_rphi / r2 - d_phi * d_phi / (r2 * r) + d_z * d_rz),
            2.0 * (d_r * d_rphi + d_phi * d_phiphi / r2 + d_z * d_phiz),
            2.0 * (d_r * d_rz + d_phi * d_phiz / r2 + d_z * d_zz),
        };
    }
};

}  // namespace gaugewheel

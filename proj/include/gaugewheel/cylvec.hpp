#pragma once

#include <array>
#include <cmath>

namespace gaugewheel {

/// Components of a vector in the local orthonormal cylindrical frame (r̂, φ̂, ẑ).
struct CylVec {
    double r = 0.0;
    double phi = 0.0;
    double z = 0.0;

    constexpr CylVec& operator+=(const CylVec& o) {
        r += o.r;
        phi += o.phi;
        z += o.z;
        return *this;
    }
    constexpr CylVec& operator-=(const CylVec& o) {
        r -= o.r;
        phi -= o.phi;
        z -= o.z;
        return *this;
    }
    constexpr CylVec& operator*=(double s) {
        r *= s;
        phi *= s;
        z *= s;
        return *this;
    }

    [[nodiscard]] constexpr double operator[](int i) const { return i == 0 ? r : (i == 1 ? phi : z); }

    friend constexpr CylVec operator+(CylVec a, const CylVec& b) { return a += b; }
    friend constexpr CylVec operator-(CylVec a, const CylVec& b) { return a -= b; }
    friend constexpr CylVec operator-(const CylVec& a) { return {-a.r, -a.phi, -a.z}; }
    friend constexpr CylVec operator*(CylVec a, double s) { return a *= s; }
    friend constexpr CylVec operator*(double s, CylVec a) { return a *= s; }
    friend constexpr bool operator==(const CylVec&, const CylVec&) = default;
};

[[nodiscard]] constexpr double dot(const CylVec& a, const CylVec& b) {
    return a.r * b.r + a.phi * b.phi + a.z * b.z;
}

/// Right-handed cross product; (r̂, φ̂, ẑ) is a right-handed orthonormal triad.
[[nodiscard]] constexpr CylVec cross(const CylVec& a, const CylVec& b) {
    return {a.phi * b.z - a.z * b.phi, a.z * b.r - a.r * b.z, a.r * b.phi - a.phi * b.r};
}

[[nodiscard]] inline double norm(const CylVec& a) { return std::sqrt(dot(a, a)); }

/// Cartesian components (x, y, z) of a cylindrical-frame vector attached at azimuth phi.
[[nodiscard]] inline std::array<double, 3> to_cartesian(const CylVec& v, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {v.r * c - v.phi * s, v.r * s + v.phi * c, v.z};
}

[[nodiscard]] inline CylVec from_cartesian(const std::array<double, 3>& v, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {v[0] * c + v[1] * s, -v[0] * s + v[1] * c, v[2]};
}

}  // namespace gaugewheel

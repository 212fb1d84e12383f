#pragma once

#include <cmath>
#include <ostream>

#include "qreg/errors.hpp"

namespace qreg {

inline constexpr double kEpsZero = 1e-10;

// Element of the quaternions, p = t + xi + yj + zk.
struct Quaternion {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double t_, double x_, double y_, double z_)
        : t(t_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double s) { return {s, 0.0, 0.0, 0.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {t + o.t, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {t - o.t, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator-() const { return {-t, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        t += o.t; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        t -= o.t; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }

    // Hamilton product; noncommutative.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {t * o.t - x * o.x - y * o.y - z * o.z,
                t * o.x + x * o.t + y * o.z - z * o.y,
                t * o.y - x * o.z + y * o.t + z * o.x,
                t * o.z + x * o.y - y * o.x + z * o.t};
    }

    constexpr Quaternion operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }
    constexpr Quaternion operator/(double s) const { return {t / s, x / s, y / s, z / s}; }

    constexpr Quaternion conj() const { return {t, -x, -y, -z}; }

    constexpr double norm2() const { return t * t + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    // Norm of the imaginary part, the r of p = t + r iota.
    double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

    bool finite() const {
        return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

inline Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

inline Quaternion qinv(const Quaternion& q, double eps_zero = kEpsZero) {
    const double n2 = q.norm2();
    if (std::sqrt(n2) < eps_zero) {
        throw NearZero("qinv: |q| below eps_zero");
    }
    return q.conj() / n2;
}

// Euclidean inner product of two quaternions as 4-vectors.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.t * b.t + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '[' << q.t << ',' << q.x << ',' << q.y << ',' << q.z << ']';
}

}  // namespace qreg

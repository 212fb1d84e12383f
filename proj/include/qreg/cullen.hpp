#pragma once

#include <numbers>

#include "qreg/quaternion.hpp"

namespace qreg {

inline constexpr double kEpsAxis = 1e-8;
inline constexpr double kBetaMin = 1e-3;

// The writing p = t + r iota, with r >= 0 and iota a unit pure imaginary.
struct CullenForm {
    double t = 0.0;
    double r = 0.0;
    Quaternion iota;

    Quaternion recompose() const { return Quaternion::real(t) + iota * r; }
};

// Undefined on the real axis: iota has no preferred direction there.
inline CullenForm cullen_decompose(const Quaternion& q, double eps_axis = kEpsAxis) {
    const double r = q.imag_norm();
    if (r < eps_axis) {
        throw OnRealAxis("cullen_decompose: imaginary part below eps_axis");
    }
    return {q.t, r, Quaternion{0.0, q.x / r, q.y / r, q.z / r}};
}

// Spherical parametrization of the unit imaginary sphere,
//   iota = cos(a) sin(b) i + sin(a) sin(b) j + cos(b) k,
// with its tangent vectors iota_alpha, iota_beta and their quaternionic
// inverses. |iota_alpha| = sin(b), so the frame degenerates at the poles.
struct IotaFrame {
    double alpha = 0.0;
    double beta = 0.0;
    Quaternion iota;
    Quaternion iota_alpha;
    Quaternion iota_beta;
    Quaternion iota_alpha_inv;
    Quaternion iota_beta_inv;
};

inline Quaternion iota_of(double alpha, double beta) {
    return {0.0, std::cos(alpha) * std::sin(beta), std::sin(alpha) * std::sin(beta),
            std::cos(beta)};
}

// Partial derivative of iota(alpha, beta) of order (da, db), da + db <= 2.
inline Quaternion iota_partial(double alpha, double beta, int da, int db) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    if (da == 0 && db == 0) return {0.0, ca * sb, sa * sb, cb};
    if (da == 1 && db == 0) return {0.0, -sa * sb, ca * sb, 0.0};
    if (da == 0 && db == 1) return {0.0, ca * cb, sa * cb, -sb};
    if (da == 2 && db == 0) return {0.0, -ca * sb, -sa * sb, 0.0};
    if (da == 1 && db == 1) return {0.0, -sa * cb, ca * cb, 0.0};
    if (da == 0 && db == 2) return {0.0, -ca * sb, -sa * sb, -cb};
    throw Error("iota_partial: order not supported");
}

inline IotaFrame iota_frame(double alpha, double beta, double beta_min = kBetaMin) {
    if (!(beta > beta_min && beta < std::numbers::pi - beta_min)) {
        throw PolarSingularity("iota_frame: beta outside allowed band");
    }
    IotaFrame f;
    f.alpha = alpha;
    f.beta = beta;
    f.iota = iota_partial(alpha, beta, 0, 0);
    f.iota_alpha = iota_partial(alpha, beta, 1, 0);
    f.iota_beta = iota_partial(alpha, beta, 0, 1);
    // Inverse of a pure imaginary in closed form, q^{-1} = -q / |q|^2.
    f.iota_alpha_inv = -f.iota_alpha / f.iota_alpha.norm2();
    f.iota_beta_inv = -f.iota_beta / f.iota_beta.norm2();
    return f;
}

}  // namespace qreg

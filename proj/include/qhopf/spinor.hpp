#pragma once

#include "qhopf/quaternion.hpp"

namespace qhopf {

/// Normalized two-component quaternionic spinor, |u0|^2 + |u1|^2 = 1.
/// Represents a point of the unit sphere in H^2; the fiber phase acts by
/// right multiplication.
struct QSpinor {
    Quaternion u0, u1;

    QSpinor(const Quaternion& a, const Quaternion& b, double tol = 1e-9) : u0(a), u1(b) {
        const double n2 = a.norm_sq() + b.norm_sq();
        const double n = std::sqrt(n2);
        if (std::abs(n - 1.0) > tol)
            raise(ErrorCode::NotNormalized, "spinor norm deviates from 1 beyond tolerance");
        u0 *= 1.0 / n;
        u1 *= 1.0 / n;
    }

    /// Unchecked constructor for intermediate arithmetic (no renormalization).
    static QSpinor raw(const Quaternion& a, const Quaternion& b) {
        QSpinor s(q_one, Quaternion{});
        s.u0 = a;
        s.u1 = b;
        return s;
    }

    double norm_sq() const { return u0.norm_sq() + u1.norm_sq(); }
};

/// Scalar product <v|u> = conj(v0) u0 + conj(v1) u1.
/// Under right phases: <v q | u q> = conj(q) <v|u> q.
inline Quaternion spinor_inner(const QSpinor& v, const QSpinor& u) {
    return v.u0.conjugate() * u.u0 + v.u1.conjugate() * u.u1;
}

/// Right gauge action u -> u q; leaves the Hopf image fixed.
inline QSpinor spinor_gauge(const QSpinor& u, const UnitQuaternion& q) {
    return QSpinor::raw(u.u0 * q.value(), u.u1 * q.value());
}

inline double spinor_distance(const QSpinor& a, const QSpinor& b) {
    return std::sqrt((a.u0 - b.u0).norm_sq() + (a.u1 - b.u1).norm_sq());
}

} // namespace qhopf

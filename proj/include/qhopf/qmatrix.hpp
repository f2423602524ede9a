#pragma once

#include <Eigen/Dense>

#include "qhopf/spinor.hpp"

namespace qhopf {

/// 2x2 quaternion matrix acting on spinors by entrywise left multiplication.
struct QMat2 {
    Quaternion e00, e01, e10, e11;

    static QMat2 identity() { return {q_one, {}, {}, q_one}; }
    static QMat2 zero() { return {}; }

    QMat2 dagger() const {
        return {e00.conjugate(), e10.conjugate(), e01.conjugate(), e11.conjugate()};
    }

    QMat2 operator+(const QMat2& o) const {
        return {e00 + o.e00, e01 + o.e01, e10 + o.e10, e11 + o.e11};
    }
    QMat2 operator-(const QMat2& o) const {
        return {e00 - o.e00, e01 - o.e01, e10 - o.e10, e11 - o.e11};
    }
    QMat2 operator*(const QMat2& o) const {
        return {e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
                e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11};
    }
    QMat2 operator*(double s) const { return {e00 * s, e01 * s, e10 * s, e11 * s}; }
};

inline QMat2 operator*(double s, const QMat2& m) { return m * s; }

inline QSpinor apply_raw(const QMat2& m, const QSpinor& u) {
    return QSpinor::raw(m.e00 * u.u0 + m.e01 * u.u1, m.e10 * u.u0 + m.e11 * u.u1);
}

/// Quaternionic trace, real part only: Re(e00 + e11).
inline double re_trace(const QMat2& m) { return m.e00.w + m.e11.w; }

/// ||B|| with ||B||^2 = Re Tr_H(B^dagger B).
inline double norm_re(const QMat2& m) {
    return std::sqrt(m.e00.norm_sq() + m.e01.norm_sq() + m.e10.norm_sq() + m.e11.norm_sq());
}

// ---------------------------------------------------------------------------
// Complex codec. Each quaternion q = alpha + beta j becomes the 2x2 block
//   [[alpha, -beta], [conj(beta), conj(alpha)]]
// and a spinor component q = alpha + beta j becomes the column (alpha, conj(beta)).
// Left quaternion multiplication is then complex-linear, quaternion-Hermitian
// matrices map to complex-Hermitian ones, and right multiplication by j is the
// antiunitary (p, q) -> (-conj(q), conj(p)) per slot.
// ---------------------------------------------------------------------------

inline Eigen::Matrix2cd block_of(const Quaternion& q) {
    const auto [alpha, beta] = q.to_pair();
    Eigen::Matrix2cd b;
    b << alpha, -beta, std::conj(beta), std::conj(alpha);
    return b;
}

inline Eigen::Matrix4cd to_complex(const QMat2& m) {
    Eigen::Matrix4cd c;
    c.block<2, 2>(0, 0) = block_of(m.e00);
    c.block<2, 2>(0, 2) = block_of(m.e01);
    c.block<2, 2>(2, 0) = block_of(m.e10);
    c.block<2, 2>(2, 2) = block_of(m.e11);
    return c;
}

inline Eigen::Vector2cd slot_of(const Quaternion& q) {
    const auto [alpha, beta] = q.to_pair();
    return Eigen::Vector2cd(alpha, std::conj(beta));
}

inline Quaternion slot_to_quaternion(const Eigen::Vector2cd& v) {
    return Quaternion::from_pair(v(0), std::conj(v(1)));
}

inline Eigen::Vector4cd to_c4(const QSpinor& u) {
    Eigen::Vector4cd v;
    v.segment<2>(0) = slot_of(u.u0);
    v.segment<2>(2) = slot_of(u.u1);
    return v;
}

inline QSpinor from_c4_raw(const Eigen::Vector4cd& v) {
    return QSpinor::raw(slot_to_quaternion(v.segment<2>(0)), slot_to_quaternion(v.segment<2>(2)));
}

/// Antiunitary partner: the codec image of u . j.
inline Eigen::Vector4cd j_partner(const Eigen::Vector4cd& v) {
    Eigen::Vector4cd out;
    out(0) = -std::conj(v(1));
    out(1) = std::conj(v(0));
    out(2) = -std::conj(v(3));
    out(3) = std::conj(v(2));
    return out;
}

} // namespace qhopf

#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "qhopf/errors.hpp"

namespace qhopf {

using cplx = std::complex<double>;

/// Real quaternion q = w + x i + y j + z k with ij = -ji = k.
///
/// Components are stored as four reals; the complex-pair view
/// q = alpha + beta j (alpha = w + x i, beta = y + z i) is a codec on top,
/// with j moving past a complex number by conjugation: j c = conj(c) j.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static Quaternion from_pair(cplx alpha, cplx beta) {
        return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
    }
    std::pair<cplx, cplx> to_pair() const { return {cplx(w, x), cplx(y, z)}; }

    constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }
    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    /// Purely imaginary part (w dropped), as a quaternion.
    constexpr Quaternion imag() const { return {0.0, x, y, z}; }

    Quaternion inverse(double eps_singular = 1e-14) const {
        const double n2 = norm_sq();
        if (std::sqrt(n2) <= eps_singular)
            raise(ErrorCode::SingularQuaternion, "inverse of (near-)zero quaternion");
        return {w / n2, -x / n2, -y / n2, -z / n2};
    }

    Quaternion normalized() const {
        const double n = norm();
        if (n <= 1e-14)
            raise(ErrorCode::SingularQuaternion, "cannot normalize (near-)zero quaternion");
        return {w / n, x / n, y / n, z / n};
    }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
inline Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

inline constexpr Quaternion q_one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion q_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion q_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion q_k{0.0, 0.0, 0.0, 1.0};

/// Unit quaternion ("quaternionic phase"). Construction renormalizes inputs
/// whose norm is within 1e-9 of 1 and rejects anything farther off.
class UnitQuaternion {
public:
    explicit UnitQuaternion(const Quaternion& q, double tol = 1e-9) {
        const double n = q.norm();
        if (std::abs(n - 1.0) > tol)
            raise(ErrorCode::NotNormalized, "quaternion norm deviates from 1 beyond tolerance");
        q_ = q / n;
    }

    static UnitQuaternion identity() { return UnitQuaternion(q_one); }

    const Quaternion& value() const { return q_; }

private:
    Quaternion q_;
};

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

} // namespace qhopf

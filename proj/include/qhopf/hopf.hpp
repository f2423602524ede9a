#pragma once

#include <array>

#include "qhopf/qmatrix.hpp"
#include "qhopf/state.hpp"

namespace qhopf {

enum class Hemisphere { north, south };

/// Point of the unit four-sphere, Cartesian coordinates (xi0..xi4).
/// Views: z = xi1 + i xi2, w = xi3 + i xi4, concurrence = |w|,
/// ball radius R = sqrt(xi0^2 + xi1^2 + xi2^2), chi = arg w.
struct S4Point {
    std::array<double, 5> xi{};

    explicit S4Point(const std::array<double, 5>& v, double tol = 1e-9) : xi(v) {
        double n2 = 0.0;
        for (double c : xi) n2 += c * c;
        const double n = std::sqrt(n2);
        if (std::abs(n - 1.0) > tol)
            raise(ErrorCode::NotNormalized, "S4 coordinates are not unit-normalized");
        for (double& c : xi) c /= n;
    }

    cplx z() const { return {xi[1], xi[2]}; }
    cplx w() const { return {xi[3], xi[4]}; }
    double concurrence() const { return std::hypot(xi[3], xi[4]); }
    double ball_radius() const { return std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]); }
    double chi() const { return concurrence() < 1e-12 ? 0.0 : std::atan2(xi[4], xi[3]); }
};

inline double dot(const S4Point& a, const S4Point& b) {
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += a.xi[i] * b.xi[i];
    return s;
}

inline double distance(const S4Point& a, const S4Point& b) {
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += (a.xi[i] - b.xi[i]) * (a.xi[i] - b.xi[i]);
    return std::sqrt(s);
}

/// Bundle projection S^7 -> S^4: xi = 2 u1 conj(u0) decoded as z + w j,
/// xi0 = |u0|^2 - |u1|^2. Invariant under right phases.
S4Point hopf_map(const QSpinor& u);

/// Same projection with the two qubits exchanged (amplitudes b and c
/// swapped); the image carries the second reduced density matrix.
S4Point hopf_map_swapped(const TwoQubitState& s);

struct StereoCoord {
    Quaternion x;
    Hemisphere branch = Hemisphere::north;
};

/// Stereographic chart. North branch projects from xi0 = -1 (x = xi/(1+xi0)),
/// south branch from xi0 = +1 (x = conj(xi)/(1-xi0)).
StereoCoord stereo(const S4Point& p, Hemisphere branch = Hemisphere::north);
S4Point stereo_inv(const StereoCoord& c);

/// Local section over the chart u0 != 0, u = (cos(th/2), sin(th/2) p) with
/// p = (z + w j)/|..|; the branch selects the sign of xi0 = +-sqrt(1-|z|^2-|w|^2).
/// The associated state has amplitude b = 0.
QSpinor section_at(cplx z, cplx w, Hemisphere branch = Hemisphere::north);

/// Section representative over an arbitrary chart point (branch inferred from
/// the sign of xi0); continuous on S^4 minus the xi0 = -1 pole.
QSpinor section_over(const S4Point& p);

/// zeta of the b = 0 section state in terms of (z, w):
/// zeta = (1 -+ sqrt(1-|z|^2-|w|^2)) * r / (1+|r|^2), r = w/z.
/// Requires |z| > 1e-14 (ZOnAxis otherwise).
cplx zeta_of_zw(cplx z, cplx w, Hemisphere branch = Hemisphere::north);

/// The five quaternion-Hermitian anticommuting matrices,
/// {Gamma_mu, Gamma_nu} = 2 delta_mu_nu.
const std::array<QMat2, 5>& gamma_set();

/// S_mu_nu = [Gamma_mu, Gamma_nu] / 4, skew-Hermitian rotation generators.
QMat2 spin_so5_basis(int mu, int nu);

/// Rank-one quaternion-Hermitian projector P = (I + Gamma_mu xi_mu)/2.
struct Projector {
    QMat2 m;
};

Projector projector_of(const S4Point& p);
S4Point point_of_projector(const Projector& p);

/// A fiber representative u with |u><u| = P.
QSpinor representative_of(const Projector& p);

} // namespace qhopf

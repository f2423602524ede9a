#pragma once

#include <vector>

#include "qhopf/geodesics.hpp"

namespace qhopf {

/// The connection one-form contracted with a tangent step, a purely
/// imaginary quaternion.
struct ConnectionSample {
    Quaternion value;
};

/// A = Im(conj(x) dx) / (1 + |x|^2) at a north-chart stereographic point.
ConnectionSample connection_at(const StereoCoord& x, const Quaternion& dx);

/// The same one-form in the (z, w) coordinates of the chart:
/// Im(conj(z)dz + w conj(dw) + (conj(z)dw - w conj(dz)) j) / (2 (1 +- sqrt(1-|z|^2-|w|^2))).
/// On the separable sphere (w = 0) this reduces to the monopole form
/// i (1 - cos Theta) dPhi / 2.
Quaternion connection_zw(cplx z, cplx w, cplx dz, cplx dw,
                         Hemisphere branch = Hemisphere::north);

/// Closed loop on S^4: either the conjugation orbit of a skew-Hermitian
/// generator through a base projector, or an explicit list of samples with
/// first == last.
struct LoopSpec {
    enum class Kind { generator_orbit, sampled };

    Kind kind;
    QMat2 generator;  // generator_orbit only; S^dagger = -S
    S4Point base;     // generator_orbit only
    double t_end = 0.0;
    std::vector<S4Point> points;  // sampled only

    static LoopSpec generator_orbit_loop(const QMat2& S, const S4Point& base, double t_end);
    static LoopSpec sampled_loop(std::vector<S4Point> pts);
};

/// Anholonomy of a closed loop: the transported state is u0 . q.
struct HolonomyResult {
    UnitQuaternion q;
    long n_steps = 0;
    double residual = 0.0;  // closure / normalization diagnostic
};

/// Discrete parallel transport along sampled points: each step applies the
/// projector of the next point and renormalizes the phase,
/// v_n = u_n . phase(<u_n | v_{n-1}>). u0 must lie in the fiber over
/// points.front() (FiberMismatch otherwise); samples at the xi0 = -1 pole
/// leave the section chart (PoleCrossing).
HolonomyResult transport_sampled(const std::vector<S4Point>& points, const QSpinor& u0);

/// Closed-form holonomy of a generator orbit:
/// M(t) = e^{tS} (cos(t ||PSP||) I - sin(t ||PSP||)/||PSP|| P S), transported
/// state M(t) |u>, with the ||PSP|| -> 0 limit taken analytically. Also
/// extracts the fiber phase when the orbit closes (LoopNotClosed otherwise).
std::pair<QMat2, HolonomyResult> holonomy_closed_form(const Projector& P, const QMat2& S,
                                                      double t);

/// e^{tS} through the complex codec (scaling-and-squaring matrix exponential).
QMat2 generator_exp(const QMat2& S, double t);

/// The one-parameter family of equatorial loops through the Bell point,
/// S = Gamma_1 (cos(kappa) Gamma_3 - sin(kappa) Gamma_4) / 2.
struct CKappaLoop {
    double kappa;
    QMat2 generator;
    S4Point base;               // (0,0,0,1,0)
    bool square_is_minus_quarter_identity = false;  // 4 S^2 = -I
    bool full_turn_is_minus_identity = false;       // e^{2 pi S} = -I

    S4Point point(double t) const;
    double concurrence(double t) const;  // sqrt((1 + cos^2 t - sin^2 t cos 2 kappa)/2)
    std::vector<S4Point> sample(int n_steps) const;
    UnitQuaternion closed_form_phase() const;  // -cos(pi sin kappa) - sin(pi sin kappa) k
};

CKappaLoop loop_c_kappa(double kappa);

/// Skew-Hermitian so(3) generators with [J_j, J_k] = eps_jkm J_m.
std::array<QMat2, 3> so3_generators();

/// Rotation generator from an antisymmetric parameter matrix,
/// S = sum_{mu<nu} alpha_mu_nu [Gamma_mu, Gamma_nu] / 2. The induced motion
/// of the base point is xi' = exp(2 alpha t) xi.
QMat2 spin5_generator(const Eigen::Matrix<double, 5, 5>& alpha);

/// Recover the 5x5 rotation generator M (xi_dot = M xi) of a skew-Hermitian S.
Eigen::Matrix<double, 5, 5> rotation_of_generator(const QMat2& S);

/// Points of the conjugation orbit of S through base, t in [0, t_end],
/// n_steps + 1 samples with first == last for closed orbits.
std::vector<S4Point> sample_orbit(const QMat2& S, const S4Point& base, double t_end,
                                  int n_steps);

/// Numeric transport of a LoopSpec; the fiber representative is the section
/// over the start point. Generator orbits are resampled at n_steps
/// subdivisions; sampled loops are transported at their own resolution.
HolonomyResult transport_loop(const LoopSpec& loop, int n_steps);

} // namespace qhopf

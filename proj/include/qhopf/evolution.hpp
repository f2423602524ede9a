#pragma once

#include <functional>

#include "qhopf/holonomy.hpp"

namespace qhopf {

/// Real symmetric traceless 3x3 coupling with (3/2) Tr X^2 = 1, the
/// quadrupole image of a point on S^4.
struct QuadrupoleField {
    Eigen::Matrix3d X;
};

QuadrupoleField quadrupole_of(const S4Point& p);
S4Point point_of_quadrupole(const QuadrupoleField& q);

/// H = Gamma_mu xi_mu; quaternion-Hermitian with H^2 = I, i.e. two doubly
/// degenerate complex eigenvalues +-1.
QMat2 hamiltonian_of(const S4Point& p);

/// H built from the quadrupole coupling X_mn J_m J_n; agrees with
/// hamiltonian_of through the codec.
QMat2 hamiltonian_of_quadrupole(const QuadrupoleField& q);

struct EvolutionReport {
    QSpinor final_state;
    UnitQuaternion geometric_phase;
    double dynamical_phase_bound = 0.0;
    double ramp_time = 0.0;
    long steps = 0;
    double transport_distance = 0.0;   // |geometric_phase - discrete transport phase|
    double unitarity_residual = 0.0;   // norm drift of the unrenormalized integration
};

/// Closed path on S^4, parametrized over [0, 1].
using PathFn = std::function<S4Point(double)>;

/// Schroedinger evolution i psi' = H(xi(phi(t/T))) psi over a ramp of
/// length T with a smooth ease-in/out schedule phi, started from the +1
/// eigenstate over the initial point. The constant +-1 eigenvalue makes the
/// dynamical factor exactly e^{-iT}; it is removed analytically and the
/// residual Kramers-doublet mixing is decoded as a unit quaternion.
EvolutionReport adiabatic_evolve(const PathFn& path, double T, long steps);

/// Cyclic (non-adiabatic) evolution generated by
/// S(t) = [H(eta), H(eta_dot)]/4 along a closed loop eta over [0, T_loop];
/// eta_dot by central differences. The anholonomy is purely geometric:
/// dynamical_phase_bound = max_t |<u(t)| S(t) |u(t)>| stays at zero.
EvolutionReport cyclic_evolve(const PathFn& loop, double t_loop, long steps);

} // namespace qhopf

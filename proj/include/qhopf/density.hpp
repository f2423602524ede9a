#pragma once

#include "qhopf/hopf.hpp"

namespace qhopf {

/// Rapidity coordinates of a rank-2 reduced density matrix:
/// tanh(beta) = R = |Bloch vector|, gamma = cosh(beta).
struct HyperbolicPoint {
    double beta;
    double gamma;
    Eigen::Vector3d direction;  // unit Bloch direction (n0, n1, n2 ordering)
};

/// Purification amplitude Lambda with Tr Lambda Lambda^dagger = 1
/// (Lambda = C/sqrt(2) for pure two-qubit states).
struct PurificationMatrix {
    Eigen::Matrix2cd L;

    static PurificationMatrix checked(const Eigen::Matrix2cd& m, double tol = 1e-9);
    static PurificationMatrix of_state(const TwoQubitState& s);
};

/// Closed-form principal square root of a 2x2 PSD Hermitian matrix;
/// eigenvalues within 1e-12 below zero are clamped.
Eigen::Matrix2cd sqrt_psd(const Eigen::Matrix2cd& m);

double bures_fidelity(const DensityMatrix2& rho, const DensityMatrix2& omega);
double bures_distance(const DensityMatrix2& rho, const DensityMatrix2& omega);

/// Finite-difference Bures line element
/// dl^2 = Tr(drho drho)/2 + (d sqrt(det rho))^2.
double bures_line_element(const DensityMatrix2& rho, const Eigen::Matrix2cd& drho);

/// Transition probability from the Hopf images, (1 + xi . eta)/2; equals
/// |<u|v>|^2 and Re Tr_H(P_u P_v).
double fidelity_hopf(const QSpinor& u, const QSpinor& v);

/// The same fidelity through rapidity data,
/// (gamma_t + cos(chi1 - chi2)) / (2 gamma_u gamma_v) with
/// gamma_t = gamma_u gamma_v (1 + u.v). Interior states only
/// (SeparableBoundary when either concurrence vanishes).
double fidelity_hyperbolic(const QSpinor& u, const QSpinor& v);

/// Rank-2 densities only (BoundaryState at the pure boundary).
HyperbolicPoint rapidity_model(const DensityMatrix2& rho);

/// Uhlmann parallelism: C1^dagger C2 = C2^dagger C1 positive definite.
/// Rank-1 amplitudes are rejected (SingularAmplitude).
bool uhlmann_parallel(const PurificationMatrix& c1, const PurificationMatrix& c2);

/// Uhlmann connection evaluated on the det-positive subbundle
/// (|arg det| <= 1e-10, OffSubbundle otherwise):
/// A = (L^dagger dL - dL^dagger L) - Tr(L^dagger dL - dL^dagger L)/2,
/// a traceless anti-Hermitian matrix equal to the su(2) image of the
/// instanton form Im<u|du> at the corresponding spinor.
Eigen::Matrix2cd uhlmann_connection_form(const PurificationMatrix& c,
                                         const Eigen::Matrix2cd& dL);

/// Rank stratum of a purification amplitude (singular-value threshold 1e-10).
int classify_stratum(const PurificationMatrix& l);

/// su(2) image of a purely imaginary quaternion: x i + beta j ->
/// [[i x, beta], [-conj(beta), -i x]].
Eigen::Matrix2cd su2_of(const Quaternion& q);

} // namespace qhopf

#pragma once

#include <array>

#include <Eigen/Dense>

#include "qhopf/spinor.hpp"

namespace qhopf {

/// Pure two-qubit state. Amplitudes are stored with the factor sqrt(2)
/// pulled out of the expansion, |a|^2+|b|^2+|c|^2+|d|^2 = 2, so that the
/// coefficient matrix C = [[a,b],[c,d]] has det C equal to the concurrence
/// up to phase. Public constructors take unit-normalized amplitudes.
struct TwoQubitState {
    cplx a, b, c, d;

    static TwoQubitState from_unit_amplitudes(const std::array<cplx, 4>& amps,
                                              double tol = 1e-9) {
        double n2 = 0.0;
        for (const auto& v : amps) n2 += std::norm(v);
        const double n = std::sqrt(n2);
        if (std::abs(n - 1.0) > tol)
            raise(ErrorCode::NotNormalized, "state amplitudes are not unit-normalized");
        const double s = std::sqrt(2.0) / n;
        return {amps[0] * s, amps[1] * s, amps[2] * s, amps[3] * s};
    }

    /// Internal constructor from sqrt(2)-scaled amplitudes (renormalizes).
    static TwoQubitState from_scaled(cplx a, cplx b, cplx c, cplx d, double tol = 1e-9) {
        const double n = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
        if (std::abs(n - std::sqrt(2.0)) > tol * std::sqrt(2.0))
            raise(ErrorCode::NotNormalized, "scaled amplitudes do not sum to 2");
        const double s = std::sqrt(2.0) / n;
        return {a * s, b * s, c * s, d * s};
    }

    Eigen::Matrix2cd coefficient_matrix() const {
        Eigen::Matrix2cd m;
        m << a, b, c, d;
        return m;
    }

    std::array<cplx, 4> unit_amplitudes() const {
        const double s = 1.0 / std::sqrt(2.0);
        return {a * s, b * s, c * s, d * s};
    }
};

struct EntanglementInvariants {
    cplx z, w, zeta;
    double concurrence;   // |w|, in [0,1]
    double lambda_plus;   // (1 + sqrt(1-C^2)) / 2
    double lambda_minus;  // (1 - sqrt(1-C^2)) / 2
    double entropy;       // von Neumann entropy of either reduced density, bits
    double chi;           // arg w, 0 when the state is separable
};

EntanglementInvariants invariants(const TwoQubitState& s);

/// Entropy in bits of the spectrum {lambda, 1-lambda}, with 0 log 0 = 0.
double binary_entropy(double lambda);

/// 2x2 reduced density matrix: Hermitian, unit trace, PSD.
struct DensityMatrix2 {
    Eigen::Matrix2cd rho;

    /// Validates Hermiticity / trace / positivity; throws NotDensityMatrix.
    static DensityMatrix2 checked(const Eigen::Matrix2cd& m, double tol = 1e-9);

    /// Bloch components (n0, n1, n2): rho = (I + n0 sz + n1 sx + n2 sy)/2
    /// in the ordering used throughout (n0 on the diagonal axis).
    Eigen::Vector3d bloch() const {
        const double n0 = std::real(rho(0, 0) - rho(1, 1));
        const cplx off = rho(1, 0);
        return {n0, 2.0 * off.real(), 2.0 * off.imag()};
    }
};

std::pair<DensityMatrix2, DensityMatrix2> reduced_densities(const TwoQubitState& s);

/// Quaternionic spinor of the state: u = ((a + b j), (c + d j)) / sqrt(2).
QSpinor spinor_of_state(const TwoQubitState& s);
TwoQubitState state_of_spinor(const QSpinor& u);

/// Schmidt data of a two-qubit pure state: C/sqrt(2) = U D V^T with
/// descending D = (sqrt(lambda+), sqrt(lambda-)), U, V unitary.
/// Q and P_phase are the fiber phases carrying the second-qubit Schmidt
/// vectors: columns of V are the complex pairs of Q and P_phase.
struct SchmidtFrame {
    double sigma, phi;  // polar data of the first-qubit Schmidt vector
    double tau, epsilon; // polar data of the second-qubit Schmidt vector
    Eigen::Matrix2cd U, V;
    std::array<double, 2> D;
    UnitQuaternion Q;
    UnitQuaternion P_phase;
    bool degenerate = false;
};

/// Schmidt decomposition through the singular values of C/sqrt(2).
/// Phase convention: the first nonzero entry of each column of U is made
/// real positive, V absorbing the compensating phases.
SchmidtFrame schmidt_svd(const TwoQubitState& s);

/// Local action C -> g1 C g2^T. Throws NotUnitary if either factor fails
/// unitarity at 1e-10.
TwoQubitState apply_local(const TwoQubitState& s, const Eigen::Matrix2cd& g1,
                          const Eigen::Matrix2cd& g2);

} // namespace qhopf

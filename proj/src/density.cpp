#include "qhopf/density.hpp"

#include <Eigen/SVD>

namespace qhopf {

PurificationMatrix PurificationMatrix::checked(const Eigen::Matrix2cd& m, double tol) {
    const double t = std::real((m * m.adjoint()).trace());
    if (std::abs(t - 1.0) > tol)
        raise(ErrorCode::NotNormalized, "Tr Lambda Lambda^dagger must be 1");
    PurificationMatrix out;
    out.L = m / std::sqrt(t);
    return out;
}

PurificationMatrix PurificationMatrix::of_state(const TwoQubitState& s) {
    PurificationMatrix out;
    out.L = s.coefficient_matrix() / std::sqrt(2.0);
    return out;
}

Eigen::Matrix2cd sqrt_psd(const Eigen::Matrix2cd& m) {
    const double tr = std::real(m.trace());
    double det = std::real(m.determinant());
    if (det < 0.0 && det > -1e-12) det = 0.0;
    if (det < 0.0 || tr < -1e-12)
        raise(ErrorCode::NotDensityMatrix, "square root requires a PSD matrix");
    const double root_det = std::sqrt(std::max(0.0, det));
    const double denom2 = tr + 2.0 * root_det;
    if (denom2 <= 1e-300) return Eigen::Matrix2cd::Zero();
    return (m + root_det * Eigen::Matrix2cd::Identity()) / std::sqrt(denom2);
}

double bures_fidelity(const DensityMatrix2& rho, const DensityMatrix2& omega) {
    const Eigen::Matrix2cd root_omega = sqrt_psd(omega.rho);
    const Eigen::Matrix2cd inner = sqrt_psd(root_omega * rho.rho * root_omega);
    const double t = std::real(inner.trace());
    return t * t;
}

double bures_distance(const DensityMatrix2& rho, const DensityMatrix2& omega) {
    const double f = bures_fidelity(rho, omega);
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(std::max(0.0, f))));
}

double bures_line_element(const DensityMatrix2& rho, const Eigen::Matrix2cd& drho) {
    const double quad = 0.5 * std::real((drho * drho).trace());
    const double root0 = std::sqrt(std::max(0.0, std::real(rho.rho.determinant())));
    const double root1 =
        std::sqrt(std::max(0.0, std::real((rho.rho + drho).determinant())));
    const double droot = root1 - root0;
    return quad + droot * droot;
}

double fidelity_hopf(const QSpinor& u, const QSpinor& v) {
    return 0.5 * (1.0 + dot(hopf_map(u), hopf_map(v)));
}

double fidelity_hyperbolic(const QSpinor& u, const QSpinor& v) {
    const S4Point pu = hopf_map(u);
    const S4Point pv = hopf_map(v);
    const double cu = pu.concurrence();
    const double cv = pv.concurrence();
    if (cu <= 1e-9 || cv <= 1e-9)
        raise(ErrorCode::SeparableBoundary, "rapidity form needs interior (entangled) states");
    const double gamma_u = 1.0 / cu;  // 1/sqrt(1 - R^2) with R^2 = 1 - C^2
    const double gamma_v = 1.0 / cv;
    double ball = 0.0;
    for (int i = 0; i < 3; ++i) ball += pu.xi[i] * pv.xi[i];
    const double gamma_t = gamma_u * gamma_v * (1.0 + ball);
    return (gamma_t + std::cos(pu.chi() - pv.chi())) / (2.0 * gamma_u * gamma_v);
}

HyperbolicPoint rapidity_model(const DensityMatrix2& rho) {
    const Eigen::Vector3d n = rho.bloch();
    const double r = n.norm();
    if (r >= 1.0 - 1e-9)
        raise(ErrorCode::BoundaryState, "rank-1 boundary state has infinite rapidity");
    HyperbolicPoint out;
    out.beta = std::atanh(r);
    out.gamma = 1.0 / std::sqrt(1.0 - r * r);
    out.direction = r > 1e-14 ? Eigen::Vector3d(n / r) : Eigen::Vector3d(1.0, 0.0, 0.0);
    return out;
}

namespace {

int rank_of(const Eigen::Matrix2cd& m, double threshold = 1e-10) {
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
    int rank = 0;
    for (int i = 0; i < 2; ++i)
        if (svd.singularValues()(i) > threshold) ++rank;
    return rank;
}

} // namespace

bool uhlmann_parallel(const PurificationMatrix& c1, const PurificationMatrix& c2) {
    if (rank_of(c1.L) < 2 || rank_of(c2.L) < 2)
        raise(ErrorCode::SingularAmplitude, "parallelism test needs rank-2 amplitudes");
    const Eigen::Matrix2cd m = c1.L.adjoint() * c2.L;
    const Eigen::Matrix2cd mt = c2.L.adjoint() * c1.L;
    if ((m - mt).cwiseAbs().maxCoeff() > 1e-10) return false;
    const Eigen::Matrix2cd h = 0.5 * (m + m.adjoint());
    const double mean = 0.5 * std::real(h.trace());
    const double disc = std::sqrt(std::max(0.0, mean * mean - std::real(h.determinant())));
    return mean - disc > 1e-12;
}

Eigen::Matrix2cd uhlmann_connection_form(const PurificationMatrix& c,
                                         const Eigen::Matrix2cd& dL) {
    const cplx det = c.L.determinant();
    if (std::abs(det) < 1e-12 || std::abs(std::arg(det)) > 1e-10)
        raise(ErrorCode::OffSubbundle, "connection form defined for det Lambda real positive");
    // Tr(C^dagger C) = 2 normalization absorbed: with C = sqrt(2) Lambda both
    // terms pick up a factor of 2 relative to the Lambda expression.
    const Eigen::Matrix2cd m = c.L.adjoint() * dL - dL.adjoint() * c.L;
    return m - 0.5 * m.trace() * Eigen::Matrix2cd::Identity();
}

int classify_stratum(const PurificationMatrix& l) { return rank_of(l.L); }

Eigen::Matrix2cd su2_of(const Quaternion& q) {
    const auto [alpha, beta] = q.imag().to_pair();
    Eigen::Matrix2cd m;
    m << alpha, beta, -std::conj(beta), std::conj(alpha);
    return m;
}

} // namespace qhopf

#include "qhopf/state.hpp"

#include <Eigen/SVD>

namespace qhopf {

double binary_entropy(double lambda) {
    auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
    return term(lambda) + term(1.0 - lambda);
}

EntanglementInvariants invariants(const TwoQubitState& s) {
    EntanglementInvariants out;
    out.z = std::conj(s.a) * s.c + std::conj(s.b) * s.d;
    out.w = s.a * s.d - s.b * s.c;
    out.zeta = std::conj(s.a) * s.b + std::conj(s.c) * s.d;
    out.concurrence = std::min(1.0, std::abs(out.w));
    const double root = std::sqrt(std::max(0.0, 1.0 - out.concurrence * out.concurrence));
    out.lambda_plus = 0.5 * (1.0 + root);
    out.lambda_minus = 0.5 * (1.0 - root);
    out.entropy = binary_entropy(out.lambda_plus);
    out.chi = out.concurrence < 1e-12 ? 0.0 : std::arg(out.w);
    return out;
}

DensityMatrix2 DensityMatrix2::checked(const Eigen::Matrix2cd& m, double tol) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol)
        raise(ErrorCode::NotDensityMatrix, "matrix is not Hermitian");
    if (std::abs(m.trace() - cplx(1.0)) > tol)
        raise(ErrorCode::NotDensityMatrix, "trace is not 1");
    // Hermitian 2x2 spectrum in closed form.
    const double mean = 0.5 * std::real(m.trace());
    const double det = std::real(m.determinant());
    const double disc = std::sqrt(std::max(0.0, mean * mean - det));
    if (mean - disc < -std::max(tol, 1e-12))
        raise(ErrorCode::NotDensityMatrix, "matrix has a negative eigenvalue");
    DensityMatrix2 d;
    d.rho = 0.5 * (m + m.adjoint());
    return d;
}

std::pair<DensityMatrix2, DensityMatrix2> reduced_densities(const TwoQubitState& s) {
    const Eigen::Matrix2cd c = s.coefficient_matrix();
    DensityMatrix2 rho1, rho2;
    rho1.rho = 0.5 * c * c.adjoint();
    rho2.rho = 0.5 * (c.adjoint() * c).conjugate();
    return {rho1, rho2};
}

QSpinor spinor_of_state(const TwoQubitState& s) {
    const double inv = 1.0 / std::sqrt(2.0);
    return QSpinor(Quaternion::from_pair(s.a, s.b) * inv, Quaternion::from_pair(s.c, s.d) * inv);
}

TwoQubitState state_of_spinor(const QSpinor& u) {
    const double r2 = std::sqrt(2.0);
    const auto [a, b] = (u.u0 * r2).to_pair();
    const auto [c, d] = (u.u1 * r2).to_pair();
    return TwoQubitState::from_scaled(a, b, c, d);
}

namespace {

// Divides each column of u by the phase of its first entry above threshold,
// compensating in v so that u * diag(D) * v^T is unchanged.
void fix_column_phases(Eigen::Matrix2cd& u, Eigen::Matrix2cd& v) {
    for (int col = 0; col < 2; ++col) {
        cplx lead = u(0, col);
        if (std::abs(lead) <= 1e-10) lead = u(1, col);
        if (std::abs(lead) <= 1e-10) continue;
        const cplx phase = lead / std::abs(lead);
        u.col(col) /= phase;
        v.col(col) *= phase;
    }
}

double column_polar_angle(const Eigen::Vector2cd& col) {
    return 2.0 * std::atan2(std::abs(col(1)), std::abs(col(0)));
}

double column_azimuth(const Eigen::Vector2cd& col) {
    if (std::abs(col(1)) < 1e-14 || std::abs(col(0)) < 1e-14) return 0.0;
    return std::arg(col(1)) - std::arg(col(0));
}

} // namespace

SchmidtFrame schmidt_svd(const TwoQubitState& s) {
    const Eigen::Matrix2cd lambda = s.coefficient_matrix() / std::sqrt(2.0);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(lambda, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2cd u = svd.matrixU();
    Eigen::Matrix2cd v = svd.matrixV().conjugate();  // lambda = u diag(sv) v^T
    fix_column_phases(u, v);

    const auto inv = invariants(s);
    SchmidtFrame out{
        column_polar_angle(u.col(0)),
        column_azimuth(u.col(0)),
        column_polar_angle(v.col(0)),
        column_azimuth(v.col(0)),
        u,
        v,
        {svd.singularValues()(0), svd.singularValues()(1)},
        UnitQuaternion(Quaternion::from_pair(v(0, 0), v(1, 0))),
        UnitQuaternion(Quaternion::from_pair(v(0, 1), v(1, 1))),
        inv.concurrence > 1.0 - 1e-9,
    };
    return out;
}

TwoQubitState apply_local(const TwoQubitState& s, const Eigen::Matrix2cd& g1,
                          const Eigen::Matrix2cd& g2) {
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    if ((g1.adjoint() * g1 - id).cwiseAbs().maxCoeff() > 1e-10 ||
        (g2.adjoint() * g2 - id).cwiseAbs().maxCoeff() > 1e-10)
        raise(ErrorCode::NotUnitary, "local factors must be unitary");
    const Eigen::Matrix2cd c = g1 * s.coefficient_matrix() * g2.transpose();
    return TwoQubitState::from_scaled(c(0, 0), c(0, 1), c(1, 0), c(1, 1));
}

} // namespace qhopf

#include "qhopf/geodesics.hpp"

namespace qhopf {

DistanceResult geodesic_distance(const QSpinor& v, const QSpinor& u) {
    const double overlap_root = std::min(1.0, spinor_inner(v, u).norm());
    return {2.0 * std::acos(overlap_root), overlap_root * overlap_root};
}

LineElementSample line_element_check(const QSpinor& u, const Quaternion& du0,
                                     const Quaternion& du1) {
    const Quaternion p0 = u.u0 + du0;
    const Quaternion p1 = u.u1 + du1;
    const double pn = std::sqrt(p0.norm_sq() + p1.norm_sq());
    const Quaternion overlap = (p0.conjugate() * u.u0 + p1.conjugate() * u.u1) * (1.0 / pn);
    const double overlap_form = 4.0 * (1.0 - overlap.norm_sq());

    // (I - |u><u|) du
    const Quaternion coeff = spinor_inner(u, QSpinor::raw(du0, du1));
    const Quaternion h0 = du0 - u.u0 * coeff;
    const Quaternion h1 = du1 - u.u1 * coeff;
    const double projector_form = 4.0 * (h0.norm_sq() + h1.norm_sq());
    return {overlap_form, projector_form};
}

GeodesicSpec geodesic_between(const QSpinor& v, const QSpinor& u) {
    const Quaternion amp = spinor_inner(u, v);
    const double c = amp.norm();  // cos(delta/2)
    if (c >= 1.0 - 1e-10 || c <= 1e-10)
        raise(ErrorCode::DegenerateEndpoints, "endpoints identical or antipodal on the base");
    const double delta = 2.0 * std::acos(std::min(1.0, c));
    const double s = std::sqrt(1.0 - std::min(1.0, c * c));
    const Quaternion phase = amp * (1.0 / c);
    const QSpinor u_prime = QSpinor::raw(u.u0 * phase, u.u1 * phase);
    const QSpinor phi2 = QSpinor::raw((u_prime.u0 - v.u0 * c) * (1.0 / s),
                                      (u_prime.u1 - v.u1 * c) * (1.0 / s));
    return {v, phi2, delta};
}

QSpinor geodesic_point(const GeodesicSpec& g, double s) {
    const double cs = std::cos(s / 2.0);
    const double sn = std::sin(s / 2.0);
    return QSpinor(g.phi1.u0 * cs + g.phi2.u0 * sn, g.phi1.u1 * cs + g.phi2.u1 * sn);
}

double separable_overlap(const TwoQubitState& s, double sigma, double phi) {
    const auto inv = invariants(s);
    const QSpinor u = spinor_of_state(s);
    const double cos_theta = u.u0.norm_sq() - u.u1.norm_sq();
    const double re = std::real(std::exp(cplx(0.0, -phi)) * inv.z);
    return 0.5 * (1.0 + std::cos(sigma) * cos_theta + re * std::sin(sigma));
}

NearestSeparable nearest_separable(const TwoQubitState& s) {
    const auto inv = invariants(s);
    const S4Point image = hopf_map(spinor_of_state(s));
    const double xi0 = image.xi[0];
    const double abs_z = std::abs(inv.z);

    NearestSeparable out{0.0, 0.0, QSpinor(q_one, Quaternion{}), 0.0, false};
    out.degenerate = inv.concurrence > 1.0 - 1e-9;
    out.phi = abs_z < 1e-12 ? 0.0 : std::arg(inv.z);
    // cos(sigma) carries the sign of xi0 (same hemisphere as the query).
    out.sigma = (abs_z < 1e-12 && std::abs(xi0) < 1e-12) ? 0.0 : std::atan2(abs_z, xi0);
    const cplx lower = std::sin(out.sigma / 2.0) * std::exp(cplx(0.0, out.phi));
    out.v = QSpinor(Quaternion{std::cos(out.sigma / 2.0), 0, 0, 0},
                    Quaternion::from_pair(lower, 0.0));
    out.delta = 2.0 * std::acos(std::min(1.0, std::sqrt(inv.lambda_plus)));
    return out;
}

namespace {

QSpinor orthogonal_section(double sigma, double phi) {
    const cplx upper = -std::sin(sigma / 2.0) * std::exp(cplx(0.0, -phi));
    return QSpinor(Quaternion::from_pair(upper, 0.0),
                   Quaternion{std::cos(sigma / 2.0), 0, 0, 0});
}

// Polar decode of a fiber phase q = alpha + beta j: tau from the moduli,
// epsilon from the relative phase; both describe the Bloch vector of the
// second-qubit Schmidt state alpha|0> + beta|1>.
std::pair<double, double> decode_tau_epsilon(const Quaternion& q) {
    const auto [alpha, beta] = q.to_pair();
    const double tau = 2.0 * std::atan2(std::abs(beta), std::abs(alpha));
    double eps = 0.0;
    if (std::abs(beta) > 1e-14 && std::abs(alpha) > 1e-14)
        eps = std::arg(std::conj(alpha) * beta);
    return {tau, eps};
}

} // namespace

SchmidtFrame schmidt_transport(const TwoQubitState& s) {
    const auto inv = invariants(s);
    if (inv.concurrence < 1e-12 || inv.concurrence > 1.0 - 1e-9)
        raise(ErrorCode::Degenerate, "transport Schmidt frame needs 0 < concurrence < 1");
    if (std::abs(inv.z) <= 1e-12)
        raise(ErrorCode::TrivialSchmidtAxis, "transport Schmidt frame needs |z| > 0");

    const auto near = nearest_separable(s);
    const QSpinor u = spinor_of_state(s);
    const QSpinor v_perp = orthogonal_section(near.sigma, near.phi);

    const Quaternion amp_plus = spinor_inner(near.v, u);    // sqrt(lambda+) Q
    const Quaternion amp_minus = spinor_inner(v_perp, u);   // sqrt(lambda-) P
    const Quaternion q_phase = amp_plus.normalized();
    const Quaternion p_phase = amp_minus.normalized();

    const auto [tau, eps] = decode_tau_epsilon(q_phase);
    const auto [qa, qb] = q_phase.to_pair();
    const auto [pa, pb] = p_phase.to_pair();

    Eigen::Matrix2cd u_mat, v_mat;
    u_mat << near.v.u0.to_pair().first, v_perp.u0.to_pair().first,
             near.v.u1.to_pair().first, v_perp.u1.to_pair().first;
    v_mat << qa, pa, qb, pb;

    return SchmidtFrame{
        near.sigma,
        near.phi,
        tau,
        eps,
        u_mat,
        v_mat,
        {std::sqrt(inv.lambda_plus), std::sqrt(inv.lambda_minus)},
        UnitQuaternion(q_phase),
        UnitQuaternion(p_phase),
        false,
    };
}

} // namespace qhopf

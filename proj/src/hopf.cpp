#include "qhopf/hopf.hpp"

namespace qhopf {

S4Point hopf_map(const QSpinor& u) {
    const Quaternion xi = (u.u1 * u.u0.conjugate()) * 2.0;
    const double xi0 = u.u0.norm_sq() - u.u1.norm_sq();
    return S4Point({xi0, xi.w, xi.x, xi.y, xi.z});
}

S4Point hopf_map_swapped(const TwoQubitState& s) {
    const TwoQubitState swapped{s.a, s.c, s.b, s.d};
    return hopf_map(spinor_of_state(swapped));
}

StereoCoord stereo(const S4Point& p, Hemisphere branch) {
    const Quaternion xi{p.xi[1], p.xi[2], p.xi[3], p.xi[4]};
    if (branch == Hemisphere::north) {
        if (p.xi[0] <= -1.0 + 1e-12)
            raise(ErrorCode::AtProjectionPole, "north chart undefined at xi0 = -1");
        return {xi * (1.0 / (1.0 + p.xi[0])), branch};
    }
    if (p.xi[0] >= 1.0 - 1e-12)
        raise(ErrorCode::AtProjectionPole, "south chart undefined at xi0 = +1");
    return {xi.conjugate() * (1.0 / (1.0 - p.xi[0])), branch};
}

S4Point stereo_inv(const StereoCoord& c) {
    const double n2 = c.x.norm_sq();
    const double scale = 2.0 / (1.0 + n2);
    if (c.branch == Hemisphere::north) {
        const Quaternion xi = c.x * scale;
        return S4Point({(1.0 - n2) / (1.0 + n2), xi.w, xi.x, xi.y, xi.z});
    }
    const Quaternion xi = c.x.conjugate() * scale;
    return S4Point({-(1.0 - n2) / (1.0 + n2), xi.w, xi.x, xi.y, xi.z});
}

QSpinor section_at(cplx z, cplx w, Hemisphere branch) {
    const double s2 = std::norm(z) + std::norm(w);
    if (s2 > 1.0 + 1e-12)
        raise(ErrorCode::OutOfDisk, "|z|^2 + |w|^2 exceeds 1");
    const double s = std::sqrt(std::min(s2, 1.0));
    const double xi0 = (branch == Hemisphere::north ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1.0 - s2));
    const double theta = std::atan2(s, xi0);
    if (s < 1e-14) {
        if (branch == Hemisphere::south)
            raise(ErrorCode::UndefinedPhase, "section phase undefined at the chart pole");
        return QSpinor(q_one, Quaternion{});
    }
    const Quaternion p = Quaternion::from_pair(z, w) * (1.0 / s);
    return QSpinor(Quaternion{std::cos(theta / 2.0), 0, 0, 0}, p * std::sin(theta / 2.0));
}

QSpinor section_over(const S4Point& p) {
    if (p.xi[0] <= -1.0 + 1e-9)
        raise(ErrorCode::PoleCrossing, "no section representative at xi0 = -1");
    const double s = std::hypot(std::abs(p.z()), std::abs(p.w()));
    const double theta = std::atan2(s, p.xi[0]);
    if (s < 1e-14) return QSpinor(q_one, Quaternion{});
    const Quaternion dir = Quaternion::from_pair(p.z(), p.w()) * (1.0 / s);
    return QSpinor(Quaternion{std::cos(theta / 2.0), 0, 0, 0}, dir * std::sin(theta / 2.0));
}

cplx zeta_of_zw(cplx z, cplx w, Hemisphere branch) {
    if (std::abs(z) <= 1e-14)
        raise(ErrorCode::ZOnAxis, "zeta formula degenerate at z = 0");
    const double s2 = std::norm(z) + std::norm(w);
    if (s2 > 1.0 + 1e-12)
        raise(ErrorCode::OutOfDisk, "|z|^2 + |w|^2 exceeds 1");
    const double root = std::sqrt(std::max(0.0, 1.0 - s2));
    const double front = branch == Hemisphere::north ? 1.0 - root : 1.0 + root;
    const cplx r = w / z;
    return front * r / (1.0 + std::norm(r));
}

const std::array<QMat2, 5>& gamma_set() {
    static const std::array<QMat2, 5> gammas = [] {
        std::array<QMat2, 5> g{};
        g[0] = {q_one, {}, {}, -q_one};
        g[1] = {{}, q_one, q_one, {}};
        g[2] = {{}, -q_i, q_i, {}};
        g[3] = {{}, -q_j, q_j, {}};
        g[4] = {{}, -q_k, q_k, {}};
        return g;
    }();
    return gammas;
}

QMat2 spin_so5_basis(int mu, int nu) {
    const auto& g = gamma_set();
    return (g[mu] * g[nu] - g[nu] * g[mu]) * 0.25;
}

Projector projector_of(const S4Point& p) {
    QMat2 m = QMat2::identity();
    const auto& g = gamma_set();
    for (int mu = 0; mu < 5; ++mu) m = m + g[mu] * p.xi[mu];
    return Projector{m * 0.5};
}

S4Point point_of_projector(const Projector& p) {
    const auto& g = gamma_set();
    std::array<double, 5> xi{};
    for (int mu = 0; mu < 5; ++mu) xi[mu] = re_trace(g[mu] * p.m);
    return S4Point(xi);
}

QSpinor representative_of(const Projector& p) {
    // P = |u><u|: a column of P is u scaled by a quaternion, so normalizing
    // the larger column yields a fiber representative.
    const double c0 = p.m.e00.norm_sq() + p.m.e10.norm_sq();
    const double c1 = p.m.e01.norm_sq() + p.m.e11.norm_sq();
    Quaternion a = c0 >= c1 ? p.m.e00 : p.m.e01;
    Quaternion b = c0 >= c1 ? p.m.e10 : p.m.e11;
    const double n = std::sqrt(a.norm_sq() + b.norm_sq());
    if (n < 1e-12) raise(ErrorCode::SingularQuaternion, "projector has no usable column");
    return QSpinor(a * (1.0 / n), b * (1.0 / n));
}

} // namespace qhopf

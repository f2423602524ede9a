#include "qhopf/holonomy.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace qhopf {

ConnectionSample connection_at(const StereoCoord& x, const Quaternion& dx) {
    if (x.branch != Hemisphere::north)
        raise(ErrorCode::PoleCrossing, "connection sample expects a north-chart coordinate");
    const Quaternion raw = (x.x.conjugate() * dx) * (1.0 / (1.0 + x.x.norm_sq()));
    return {raw.imag()};
}

Quaternion connection_zw(cplx z, cplx w, cplx dz, cplx dw, Hemisphere branch) {
    const double s2 = std::norm(z) + std::norm(w);
    if (s2 > 1.0 + 1e-12) raise(ErrorCode::OutOfDisk, "|z|^2 + |w|^2 exceeds 1");
    const double xi0 = (branch == Hemisphere::north ? 1.0 : -1.0) *
                       std::sqrt(std::max(0.0, 1.0 - s2));
    const cplx diag = std::conj(z) * dz + w * std::conj(dw);
    const cplx off = std::conj(z) * dw - w * std::conj(dz);
    const Quaternion num = Quaternion::from_pair(cplx(0.0, diag.imag()), off);
    return num * (1.0 / (2.0 * (1.0 + xi0)));
}

LoopSpec LoopSpec::generator_orbit_loop(const QMat2& S, const S4Point& base, double t_end) {
    if (norm_re(S + S.dagger()) > 1e-12 * std::max(1.0, norm_re(S)))
        raise(ErrorCode::NotAntisymmetric, "orbit generator must be skew-Hermitian");
    LoopSpec out{Kind::generator_orbit, S, base, t_end, {}};
    return out;
}

LoopSpec LoopSpec::sampled_loop(std::vector<S4Point> pts) {
    if (pts.size() < 2)
        raise(ErrorCode::LoopNotClosed, "sampled loop needs at least two points");
    if (distance(pts.front(), pts.back()) > 1e-10)
        raise(ErrorCode::LoopNotClosed, "sampled loop endpoints do not match");
    LoopSpec out{Kind::sampled, QMat2::zero(), pts.front(), 0.0, std::move(pts)};
    return out;
}

HolonomyResult transport_sampled(const std::vector<S4Point>& points, const QSpinor& u0) {
    if (points.size() < 2)
        raise(ErrorCode::LoopNotClosed, "transport needs at least two samples");
    if (distance(points.front(), points.back()) > 1e-10)
        raise(ErrorCode::LoopNotClosed, "sampled path is not closed");
    if (distance(hopf_map(u0), points.front()) > 1e-9)
        raise(ErrorCode::FiberMismatch, "start spinor does not lie over the first sample");

    QSpinor carried = u0;
    for (std::size_t n = 1; n < points.size(); ++n) {
        const QSpinor sec = section_over(points[n]);  // PoleCrossing off the chart
        const Quaternion phase = spinor_inner(sec, carried).normalized();
        carried = QSpinor::raw(sec.u0 * phase, sec.u1 * phase);
    }
    const Quaternion overlap = spinor_inner(u0, carried);
    HolonomyResult out{UnitQuaternion(overlap.normalized()),
                       static_cast<long>(points.size() - 1),
                       std::abs(overlap.norm() - 1.0)};
    return out;
}

QMat2 generator_exp(const QMat2& S, double t) {
    const Eigen::Matrix4cd e = (t * to_complex(S)).exp();
    auto block_to_q = [&](int r, int c) {
        const cplx alpha = 0.5 * (e(r, c) + std::conj(e(r + 1, c + 1)));
        const cplx beta = 0.5 * (std::conj(e(r + 1, c)) - e(r, c + 1));
        return Quaternion::from_pair(alpha, beta);
    };
    return {block_to_q(0, 0), block_to_q(0, 2), block_to_q(2, 0), block_to_q(2, 2)};
}

std::pair<QMat2, HolonomyResult> holonomy_closed_form(const Projector& P, const QMat2& S,
                                                      double t) {
    if (norm_re(S + S.dagger()) > 1e-12 * std::max(1.0, norm_re(S)))
        raise(ErrorCode::NotAntisymmetric, "generator must be skew-Hermitian");

    const QMat2 PS = P.m * S;
    const double x = norm_re(P.m * S * P.m);
    const double arg = t * x;
    // sin(arg)/x with the x -> 0 limit t * sinc(arg) expanded in series.
    double sinc_scaled;
    if (std::abs(arg) < 1e-6)
        sinc_scaled = t * (1.0 - arg * arg / 6.0 + arg * arg * arg * arg / 120.0);
    else
        sinc_scaled = std::sin(arg) / x;

    const QMat2 u_t = generator_exp(S, t);
    const QMat2 transport = u_t * (QMat2::identity() * std::cos(arg) - PS * sinc_scaled);

    const QMat2 p_end = u_t * P.m * u_t.dagger();
    if (norm_re(p_end - P.m) > 1e-9)
        raise(ErrorCode::LoopNotClosed, "orbit does not return to the base projector");

    const QSpinor u = section_over(point_of_projector(P));
    const QSpinor moved = apply_raw(transport, u);
    const Quaternion overlap = spinor_inner(u, moved);
    HolonomyResult res{UnitQuaternion(overlap.normalized()), 0,
                       std::abs(overlap.norm() - 1.0)};
    return {transport, res};
}

CKappaLoop loop_c_kappa(double kappa) {
    const auto& g = gamma_set();
    CKappaLoop loop{kappa,
                    g[1] * (g[3] * std::cos(kappa) - g[4] * std::sin(kappa)) * 0.5,
                    S4Point({0.0, 0.0, 0.0, 1.0, 0.0}),
                    false,
                    false};

    const QMat2 sq4 = loop.generator * loop.generator * 4.0;
    loop.square_is_minus_quarter_identity =
        norm_re(sq4 + QMat2::identity()) < 1e-12;
    loop.full_turn_is_minus_identity =
        norm_re(generator_exp(loop.generator, 2.0 * M_PI) + QMat2::identity()) < 1e-10;
    return loop;
}

S4Point CKappaLoop::point(double t) const {
    const double ch = std::cos(t / 2.0), sh = std::sin(t / 2.0);
    return S4Point({0.0, std::sin(t) * std::cos(kappa), 0.0,
                    ch * ch - sh * sh * std::cos(2.0 * kappa),
                    sh * sh * std::sin(2.0 * kappa)});
}

double CKappaLoop::concurrence(double t) const {
    const double c = std::cos(t), s = std::sin(t);
    return std::sqrt(0.5 * (1.0 + c * c - s * s * std::cos(2.0 * kappa)));
}

std::vector<S4Point> CKappaLoop::sample(int n_steps) const {
    std::vector<S4Point> pts;
    pts.reserve(n_steps + 1);
    for (int i = 0; i < n_steps; ++i) pts.push_back(point(2.0 * M_PI * i / n_steps));
    pts.push_back(pts.front());
    return pts;
}

UnitQuaternion CKappaLoop::closed_form_phase() const {
    const double a = M_PI * std::sin(kappa);
    return UnitQuaternion(Quaternion{-std::cos(a), 0.0, 0.0, -std::sin(a)});
}

std::array<QMat2, 3> so3_generators() {
    const auto& g = gamma_set();
    const double r3 = std::sqrt(3.0);
    return {
        (g[4] * g[0] * r3 + g[3] * g[2] + g[4] * g[1]) * 0.5,
        (g[3] * g[0] * r3 + g[1] * g[3] + g[4] * g[2]) * 0.5,
        g[3] * g[4] * 0.5 + g[2] * g[1],
    };
}

QMat2 spin5_generator(const Eigen::Matrix<double, 5, 5>& alpha) {
    if ((alpha + alpha.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        raise(ErrorCode::NotAntisymmetric, "parameter matrix must be antisymmetric");
    const auto& g = gamma_set();
    QMat2 s = QMat2::zero();
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = mu + 1; nu < 5; ++nu)
            if (alpha(mu, nu) != 0.0) s = s + g[mu] * g[nu] * alpha(mu, nu);
    return s;
}

Eigen::Matrix<double, 5, 5> rotation_of_generator(const QMat2& S) {
    const auto& g = gamma_set();
    Eigen::Matrix<double, 5, 5> m = Eigen::Matrix<double, 5, 5>::Zero();
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = mu + 1; nu < 5; ++nu) {
            const double a = -0.5 * re_trace(g[mu] * g[nu] * S);
            m(mu, nu) = 2.0 * a;
            m(nu, mu) = -2.0 * a;
        }
    return m;
}

std::vector<S4Point> sample_orbit(const QMat2& S, const S4Point& base, double t_end,
                                  int n_steps) {
    const Eigen::Matrix<double, 5, 5> m = rotation_of_generator(S);
    const Eigen::Matrix<double, 5, 5> step = (m * (t_end / n_steps)).exp();
    std::vector<S4Point> pts;
    pts.reserve(n_steps + 1);
    Eigen::Matrix<double, 5, 1> xi;
    for (int i = 0; i < 5; ++i) xi(i) = base.xi[i];
    pts.push_back(base);
    for (int k = 1; k <= n_steps; ++k) {
        xi = step * xi;
        xi.normalize();
        pts.push_back(S4Point({xi(0), xi(1), xi(2), xi(3), xi(4)}));
    }
    if (distance(pts.back(), base) < 1e-9) pts.back() = base;
    return pts;
}

HolonomyResult transport_loop(const LoopSpec& loop, int n_steps) {
    if (loop.kind == LoopSpec::Kind::sampled)
        return transport_sampled(loop.points, section_over(loop.points.front()));
    const auto pts = sample_orbit(loop.generator, loop.base, loop.t_end, n_steps);
    return transport_sampled(pts, section_over(loop.base));
}

} // namespace qhopf

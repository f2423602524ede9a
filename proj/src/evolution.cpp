#include "qhopf/evolution.hpp"

#include <algorithm>

namespace qhopf {

QuadrupoleField quadrupole_of(const S4Point& p) {
    const double r3 = std::sqrt(3.0);
    const auto& xi = p.xi;
    Eigen::Matrix3d x;
    x << -xi[1] + xi[0] / r3, -xi[2], -xi[3],
         -xi[2], xi[1] + xi[0] / r3, xi[4],
         -xi[3], xi[4], -2.0 * xi[0] / r3;
    return {x / r3};
}

S4Point point_of_quadrupole(const QuadrupoleField& q) {
    const double r3 = std::sqrt(3.0);
    const Eigen::Matrix3d& x = q.X;
    if ((x - x.transpose()).cwiseAbs().maxCoeff() > 1e-12 || std::abs(x.trace()) > 1e-10)
        raise(ErrorCode::NotNormalized, "quadrupole must be symmetric traceless");
    std::array<double, 5> xi{};
    xi[0] = -1.5 * x(2, 2);
    xi[1] = -0.5 * r3 * (x(0, 0) - x(1, 1));
    xi[2] = -r3 * x(0, 1);
    xi[3] = -r3 * x(0, 2);
    xi[4] = r3 * x(1, 2);
    return S4Point(xi);
}

QMat2 hamiltonian_of(const S4Point& p) {
    const auto& g = gamma_set();
    QMat2 h = QMat2::zero();
    for (int mu = 0; mu < 5; ++mu) h = h + g[mu] * p.xi[mu];
    return h;
}

QMat2 hamiltonian_of_quadrupole(const QuadrupoleField& q) {
    const auto j = so3_generators();
    QMat2 h = QMat2::zero();
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            if (q.X(m, n) != 0.0) h = h + j[m] * j[n] * q.X(m, n);
    return h;
}

namespace {

// Smooth ease-in/ease-out reparametrization of [0,1]: unit average rate,
// zero velocity at both endpoints.
double ease_schedule(double x) { return x - std::sin(2.0 * M_PI * x) / (2.0 * M_PI); }

using Doublet = Eigen::Matrix<cplx, 4, 2>;

Quaternion decode_doublet_block(const Eigen::Matrix2cd& b) {
    // Right phase g = alpha + beta j acts on the doublet as [[alpha, -beta],
    // [conj(beta), conj(alpha)]]; averaging the redundant entries absorbs
    // residual non-unitarity after polar projection.
    const cplx alpha = 0.5 * (b(0, 0) + std::conj(b(1, 1)));
    const cplx beta = 0.5 * (std::conj(b(1, 0)) - b(0, 1));
    return Quaternion::from_pair(alpha, beta);
}

Eigen::Matrix2cd polar_unitary(const Eigen::Matrix2cd& b) {
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

struct DoubletRun {
    Doublet psi;
    Doublet basis;
    double norm_drift;
};

// Fixed-step RK4 for psi' = G(t) psi on the 4x2 doublet columns.
DoubletRun integrate_doublet(const std::function<Eigen::Matrix4cd(double)>& gen,
                             const QSpinor& start, double t_total, long steps) {
    Doublet basis;
    basis.col(0) = to_c4(start);
    basis.col(1) = j_partner(basis.col(0));
    Doublet psi = basis;

    const double dt = t_total / static_cast<double>(steps);
    for (long k = 0; k < steps; ++k) {
        const double t = dt * static_cast<double>(k);
        const Eigen::Matrix4cd g1 = gen(t);
        const Eigen::Matrix4cd g2 = gen(t + 0.5 * dt);
        const Eigen::Matrix4cd g3 = gen(t + dt);
        const Doublet k1 = g1 * psi;
        const Doublet k2 = g2 * (psi + 0.5 * dt * k1);
        const Doublet k3 = g2 * (psi + 0.5 * dt * k2);
        const Doublet k4 = g3 * (psi + dt * k3);
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const double drift = std::abs(psi.col(0).norm() - 1.0);
    return {psi, basis, drift};
}

EvolutionReport report_from_run(const DoubletRun& run, double ramp_time, long steps,
                                const std::vector<S4Point>& transport_samples,
                                const QSpinor& start) {
    const Eigen::Matrix2cd block = run.basis.adjoint() * run.psi;
    const Quaternion g = decode_doublet_block(polar_unitary(block));
    EvolutionReport out{
        from_c4_raw(run.psi.col(0).normalized()),
        UnitQuaternion(g.normalized()),
        0.0,
        ramp_time,
        steps,
        0.0,
        run.norm_drift,
    };
    const HolonomyResult transported = transport_sampled(transport_samples, start);
    out.transport_distance = distance(out.geometric_phase.value(), transported.q.value());
    return out;
}

std::vector<S4Point> closed_samples(const PathFn& path, int n) {
    std::vector<S4Point> pts;
    pts.reserve(n + 1);
    for (int i = 0; i < n; ++i) pts.push_back(path(static_cast<double>(i) / n));
    pts.push_back(pts.front());
    return pts;
}

} // namespace

EvolutionReport adiabatic_evolve(const PathFn& path, double ramp_time, long steps) {
    if (ramp_time <= 0.0) raise(ErrorCode::PathNotClosed, "ramp time must be positive");
    if (distance(path(0.0), path(1.0)) > 1e-9)
        raise(ErrorCode::PathNotClosed, "adiabatic path must be a closed loop");

    const QSpinor start = section_over(path(0.0));
    const cplx minus_i(0.0, -1.0);
    auto gen = [&](double t) -> Eigen::Matrix4cd {
        const double s = ease_schedule(std::clamp(t / ramp_time, 0.0, 1.0));
        return minus_i * to_complex(hamiltonian_of(path(s)));
    };
    DoubletRun run = integrate_doublet(gen, start, ramp_time, steps);
    // The +1 eigenvalue is constant, so the dynamical factor is exactly e^{-iT}.
    run.psi *= std::exp(cplx(0.0, ramp_time));

    EvolutionReport out = report_from_run(run, ramp_time, steps, closed_samples(path, 20000), start);

    // With the dynamical factor removed exactly, what remains of non-geometric
    // evolution is diabatic leakage out of the doublet; its size is the
    // non-unitarity of the raw overlap block.
    const Eigen::Matrix2cd block = run.basis.adjoint() * run.psi;
    out.dynamical_phase_bound =
        (block.adjoint() * block - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    return out;
}

EvolutionReport cyclic_evolve(const PathFn& loop, double t_loop, long steps) {
    if (t_loop <= 0.0) raise(ErrorCode::PathNotClosed, "loop period must be positive");
    if (distance(loop(0.0), loop(1.0)) > 1e-9)
        raise(ErrorCode::PathNotClosed, "cyclic generator path must be closed");

    const QSpinor start = section_over(loop(0.0));
    const double ds = 1.0 / static_cast<double>(steps);
    auto eta = [&](double s) {
        double r = std::fmod(s, 1.0);
        if (r < 0.0) r += 1.0;
        return loop(r);
    };
    auto generator_q = [&](double s) -> QMat2 {
        const QMat2 h = hamiltonian_of(eta(s));
        const S4Point fwd = eta(s + ds);
        const S4Point bwd = eta(s - ds);
        std::array<double, 5> dv{};
        for (int i = 0; i < 5; ++i)
            dv[i] = (fwd.xi[i] - bwd.xi[i]) / (2.0 * ds * t_loop);
        const auto& g = gamma_set();
        QMat2 hdot = QMat2::zero();
        for (int mu = 0; mu < 5; ++mu) hdot = hdot + g[mu] * dv[mu];
        return (h * hdot - hdot * h) * 0.25;
    };
    auto gen = [&](double t) -> Eigen::Matrix4cd {
        return -to_complex(generator_q(t / t_loop));
    };

    const DoubletRun run = integrate_doublet(gen, start, t_loop, steps);
    EvolutionReport out =
        report_from_run(run, t_loop, steps, closed_samples(loop, static_cast<int>(steps)), start);

    // The anholonomy is purely geometric: <u|S|u> vanishes on instantaneous
    // eigenstates for any commutator generator.
    double bound = 0.0;
    const long probes = std::min<long>(steps, 512);
    for (long i = 0; i < probes; ++i) {
        const double s = static_cast<double>(i) / probes;
        const QSpinor u = section_over(eta(s));
        const Quaternion expect = spinor_inner(u, apply_raw(generator_q(s), u));
        bound = std::max(bound, expect.norm());
    }
    out.dynamical_phase_bound = bound;
    return out;
}

} // namespace qhopf

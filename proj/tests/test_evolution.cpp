#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "qhopf/evolution.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

PathFn c_kappa_path(double kappa) {
    const CKappaLoop loop = loop_c_kappa(kappa);
    return [loop](double s) { return loop.point(2 * M_PI * s); };
}

} // namespace

TEST_CASE("quadrupole codec") {
    const QuadrupoleField bell = quadrupole_of(S4Point({0, 0, 0, 1, 0}));
    Eigen::Matrix3d expect = Eigen::Matrix3d::Zero();
    expect(0, 2) = expect(2, 0) = -1.0 / std::sqrt(3.0);
    CHECK((bell.X - expect).cwiseAbs().maxCoeff() < 1e-15);

    const QuadrupoleField north = quadrupole_of(S4Point({1, 0, 0, 0, 0}));
    Eigen::Matrix3d diag = Eigen::Vector3d(1.0 / 3, 1.0 / 3, -2.0 / 3).asDiagonal();
    CHECK((north.X - diag).cwiseAbs().maxCoeff() < 1e-15);

    auto rng = seeded_rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const S4Point p = hopf_map(random_spinor(rng));
        const QuadrupoleField q = quadrupole_of(p);

        CHECK((q.X - q.X.transpose()).cwiseAbs().maxCoeff() < 1e-15);
        CHECK(std::abs(q.X.trace()) < 1e-12);
        CHECK(std::abs(1.5 * (q.X * q.X).trace() - 1.0) < 1e-10);  // unit quadrupole

        CHECK(distance(point_of_quadrupole(q), p) < 1e-12);
    }

    // separable points produce block-diagonal couplings
    const QuadrupoleField sep = quadrupole_of(S4Point({0.6, 0.64, 0.48, 0, 0}));
    CHECK(std::abs(sep.X(0, 2)) < 1e-15);
    CHECK(std::abs(sep.X(1, 2)) < 1e-15);
}

TEST_CASE("quadrupole input validation") {
    QuadrupoleField bad{Eigen::Matrix3d::Identity()};  // not traceless
    CHECK_THROWS_AS(point_of_quadrupole(bad), Error);
}

TEST_CASE("hamiltonians from both codings") {
    auto rng = seeded_rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const S4Point p = hopf_map(random_spinor(rng));
        const QMat2 h = hamiltonian_of(p);
        const QMat2 via_j = hamiltonian_of_quadrupole(quadrupole_of(p));
        CHECK(norm_re(h - via_j) < 1e-10);

        // H^2 = I
        CHECK(norm_re(h * h - QMat2::identity()) < 1e-12);

        // Kramers doublets at +-1 through the complex codec
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(to_complex(h));
        CHECK(std::abs(es.eigenvalues()(0) + 1.0) < 1e-12);
        CHECK(std::abs(es.eigenvalues()(1) + 1.0) < 1e-12);
        CHECK(std::abs(es.eigenvalues()(2) - 1.0) < 1e-12);
        CHECK(std::abs(es.eigenvalues()(3) - 1.0) < 1e-12);

        // (I + H)/2 is the fiber projector
        const QMat2 plus = (QMat2::identity() + h) * 0.5;
        CHECK(norm_re(plus - projector_of(p).m) < 1e-12);
    }

    const QMat2 g0 = hamiltonian_of(S4Point({1, 0, 0, 0, 0}));
    CHECK(norm_re(g0 - gamma_set()[0]) < 1e-15);
}

TEST_CASE("adiabatic evolution on a constant path") {
    const S4Point base({0, 0, 0, 1, 0});
    const PathFn constant = [base](double) { return base; };
    const EvolutionReport r = adiabatic_evolve(constant, 10.0, 2000);
    CHECK(distance(r.geometric_phase.value(), q_one) < 1e-9);
    CHECK(r.dynamical_phase_bound < 1e-9);
    CHECK(r.unitarity_residual < 1e-9);
}

TEST_CASE("adiabatic evolution approaches the holonomy") {
    // C_0: holonomy -1
    const EvolutionReport r =
        adiabatic_evolve(c_kappa_path(0.0), 40.0 * 2 * M_PI, 20000);
    CHECK(distance(r.geometric_phase.value(), -q_one) < 5e-2);
    CHECK(r.transport_distance < 5e-2);

    // doubling the ramp twice shrinks the error by more than 2
    const EvolutionReport fast =
        adiabatic_evolve(c_kappa_path(M_PI / 6), 20.0 * 2 * M_PI, 15000);
    const EvolutionReport slow =
        adiabatic_evolve(c_kappa_path(M_PI / 6), 80.0 * 2 * M_PI, 60000);
    const double err_fast = distance(fast.geometric_phase.value(), -q_k);
    const double err_slow = distance(slow.geometric_phase.value(), -q_k);
    CHECK(err_slow * 2.0 < err_fast);
}

TEST_CASE("adiabatic path must close") {
    const PathFn open_arc = [](double s) {
        return S4Point({std::cos(s), std::sin(s), 0, 0, 0});
    };
    CHECK_THROWS_AS(adiabatic_evolve(open_arc, 10.0, 100), Error);
}

TEST_CASE("cyclic evolution is purely geometric") {
    const EvolutionReport r = cyclic_evolve(c_kappa_path(0.0), 2 * M_PI, 20000);
    CHECK(r.dynamical_phase_bound < 1e-10);
    CHECK(r.transport_distance < 1e-3);
    CHECK(distance(r.geometric_phase.value(), -q_one) < 1e-3);
    CHECK(r.unitarity_residual < 1e-9);

    const EvolutionReport r6 = cyclic_evolve(c_kappa_path(M_PI / 6), 2 * M_PI, 20000);
    CHECK(r6.dynamical_phase_bound < 1e-10);
    CHECK(distance(r6.geometric_phase.value(), -q_k) < 1e-3);
}

TEST_CASE("static generator path evolves trivially") {
    const S4Point base({0, 0, 0, 1, 0});
    const PathFn constant = [base](double) { return base; };
    const EvolutionReport r = cyclic_evolve(constant, 2 * M_PI, 500);
    CHECK(distance(r.geometric_phase.value(), q_one) < 1e-12);
    CHECK(r.dynamical_phase_bound < 1e-14);
}

TEST_CASE("cyclic evolution composes like transport") {
    // two consecutive traversals square the phase
    const PathFn once = c_kappa_path(M_PI / 6);
    const PathFn twice = [once](double s) { return once(std::fmod(2.0 * s, 1.0)); };
    const EvolutionReport r1 = cyclic_evolve(once, 2 * M_PI, 20000);
    const EvolutionReport r2 = cyclic_evolve(twice, 4 * M_PI, 40000);
    const Quaternion q1 = r1.geometric_phase.value();
    CHECK(distance(r2.geometric_phase.value(), q1 * q1) < 5e-3);
}

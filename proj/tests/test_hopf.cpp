#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

const QSpinor kBellSpinor(q_one * (1 / std::sqrt(2.0)), q_j * (1 / std::sqrt(2.0)));

}

TEST_CASE("projection of reference spinors") {
    const S4Point bell = hopf_map(kBellSpinor);
    CHECK(distance(bell, S4Point({0, 0, 0, 1, 0})) < 1e-15);

    const S4Point north = hopf_map(QSpinor(q_one, Quaternion{}));
    CHECK(distance(north, S4Point({1, 0, 0, 0, 0})) < 1e-15);
}

TEST_CASE("fiber invariance") {
    auto rng = seeded_rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const QSpinor u = random_spinor(rng);
        const UnitQuaternion q = random_unit_quaternion(rng);
        CHECK(distance(hopf_map(u), hopf_map(spinor_gauge(u, q))) < 1e-12);
    }
}

TEST_CASE("swapped projection carries the second reduced density") {
    const TwoQubitState bell =
        TwoQubitState::from_unit_amplitudes({cplx(1 / std::sqrt(2.0)), 0, 0, cplx(1 / std::sqrt(2.0))});
    CHECK(distance(hopf_map_swapped(bell), S4Point({0, 0, 0, 1, 0})) < 1e-15);

    // |01>: the second qubit is |1>, so the swapped image sits at eta0 = -1.
    const TwoQubitState zero_one = TwoQubitState::from_unit_amplitudes({0, cplx(1), 0, 0});
    CHECK(distance(hopf_map_swapped(zero_one), S4Point({-1, 0, 0, 0, 0})) < 1e-15);

    auto rng = seeded_rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        const TwoQubitState s = random_state(rng);
        const S4Point eta = hopf_map_swapped(s);
        const Eigen::Vector3d bloch = reduced_densities(s).second.bloch();
        CHECK(std::abs(eta.xi[0] - bloch(0)) < 1e-12);
        CHECK(std::abs(eta.xi[1] - bloch(1)) < 1e-12);
        CHECK(std::abs(eta.xi[2] - bloch(2)) < 1e-12);
    }
}

TEST_CASE("entanglement slicing") {
    auto rng = seeded_rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const TwoQubitState s = random_state(rng);
        const S4Point p = hopf_map(spinor_of_state(s));
        CHECK(std::abs(p.concurrence() - invariants(s).concurrence) < 1e-12);
    }
}

TEST_CASE("stereographic charts") {
    const StereoCoord origin = stereo(S4Point({1, 0, 0, 0, 0}));
    CHECK(origin.x.norm() < 1e-15);

    const StereoCoord bell = stereo(S4Point({0, 0, 0, 1, 0}));
    CHECK(distance(bell.x, q_j) < 1e-15);

    CHECK_THROWS_AS(stereo(S4Point({-1, 0, 0, 0, 0})), Error);
    CHECK_THROWS_AS(stereo(S4Point({1, 0, 0, 0, 0}), Hemisphere::south), Error);

    auto rng = seeded_rng(24);
    for (int trial = 0; trial < 300; ++trial) {
        const S4Point p = hopf_map(random_spinor(rng));
        if (p.xi[0] > -1.0 + 1e-6) {
            CHECK(distance(stereo_inv(stereo(p)), p) < 1e-12);
        }
        if (p.xi[0] < 1.0 - 1e-6) {
            CHECK(distance(stereo_inv(stereo(p, Hemisphere::south)), p) < 1e-12);
        }
    }
}

TEST_CASE("sections") {
    const QSpinor flat = section_at(0.6, 0.0);
    const double theta = std::asin(0.6);
    CHECK(distance(flat.u0, Quaternion{std::cos(theta / 2), 0, 0, 0}) < 1e-15);
    CHECK(distance(flat.u1, Quaternion{std::sin(theta / 2), 0, 0, 0}) < 1e-15);

    const QSpinor pole = section_at(0.0, 0.0);
    CHECK(distance(pole.u0, q_one) < 1e-15);

    const QSpinor bell = section_at(0.0, 1.0);
    CHECK(spinor_distance(bell, kBellSpinor) < 1e-15);

    CHECK_THROWS_AS(section_at(0.9, 0.9), Error);
    CHECK_THROWS_AS(section_at(0.0, 0.0, Hemisphere::south), Error);

    auto rng = seeded_rng(25);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double r = std::sqrt(unif(rng)) * 0.999;
        const double a1 = 2 * M_PI * unif(rng), a2 = 2 * M_PI * unif(rng);
        const double split = unif(rng);
        const cplx z = r * std::sqrt(split) * std::exp(cplx(0, a1));
        const cplx w = r * std::sqrt(1 - split) * std::exp(cplx(0, a2));
        for (const auto branch : {Hemisphere::north, Hemisphere::south}) {
            const QSpinor u = section_at(z, w, branch);
            const S4Point img = hopf_map(u);
            const double sign = branch == Hemisphere::north ? 1.0 : -1.0;
            CHECK(std::abs(img.xi[0] - sign * std::sqrt(1 - std::norm(z) - std::norm(w))) < 1e-12);
            CHECK(std::abs(img.z() - z) < 1e-12);
            CHECK(std::abs(img.w() - w) < 1e-12);
            // the associated state has b = 0
            CHECK(std::abs(state_of_spinor(u).b) < 1e-12);
        }
    }
}

TEST_CASE("section over arbitrary points matches the hemisphere") {
    auto rng = seeded_rng(26);
    for (int trial = 0; trial < 300; ++trial) {
        const S4Point p = hopf_map(random_spinor(rng));
        const QSpinor u = section_over(p);
        CHECK(distance(hopf_map(u), p) < 1e-12);
    }
}

TEST_CASE("zeta of the section gauge") {
    CHECK(std::abs(zeta_of_zw(0.3, 0.0)) < 1e-15);
    CHECK_THROWS_AS(zeta_of_zw(0.0, 0.5), Error);

    // cross-module oracle: zeta from the b = 0 section state
    auto check_zeta = [](cplx z, cplx w, Hemisphere branch) {
        const cplx direct = zeta_of_zw(z, w, branch);
        const cplx from_state = invariants(state_of_spinor(section_at(z, w, branch))).zeta;
        CHECK(std::abs(direct - from_state) < 1e-12);
    };
    check_zeta(0.6, 0.6, Hemisphere::north);
    check_zeta(0.6, 0.6, Hemisphere::south);

    auto rng = seeded_rng(27);
    std::uniform_real_distribution<double> unif(0.05, 0.7);
    for (int trial = 0; trial < 200; ++trial) {
        const cplx z = unif(rng) * std::exp(cplx(0, 2 * M_PI * unif(rng)));
        const cplx w = unif(rng) * std::exp(cplx(0, 2 * M_PI * unif(rng)));
        if (std::norm(z) + std::norm(w) > 1.0) continue;
        check_zeta(z, w, Hemisphere::north);
        check_zeta(z, w, Hemisphere::south);
    }
}

TEST_CASE("gamma matrices") {
    const auto& g = gamma_set();
    for (int mu = 0; mu < 5; ++mu) {
        CHECK(norm_re(g[mu].dagger() - g[mu]) == doctest::Approx(0.0));  // Hermitian
        for (int nu = 0; nu < 5; ++nu) {
            const QMat2 anti = g[mu] * g[nu] + g[nu] * g[mu];
            const QMat2 expected = QMat2::identity() * (mu == nu ? 2.0 : 0.0);
            CHECK(norm_re(anti - expected) == doctest::Approx(0.0));  // exact Clifford
        }
    }
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = 0; nu < 5; ++nu) {
            const QMat2 s = spin_so5_basis(mu, nu);
            CHECK(norm_re(s.dagger() + s) == doctest::Approx(0.0));  // skew-Hermitian
        }
}

TEST_CASE("projectors") {
    const Projector north = projector_of(S4Point({1, 0, 0, 0, 0}));
    CHECK(distance(north.m.e00, q_one) < 1e-15);
    CHECK(north.m.e01.norm() + north.m.e10.norm() + north.m.e11.norm() < 1e-15);

    const Projector bell = projector_of(S4Point({0, 0, 0, 1, 0}));
    CHECK(distance(bell.m.e00, q_one * 0.5) < 1e-15);
    CHECK(distance(bell.m.e01, -q_j * 0.5) < 1e-15);
    CHECK(distance(bell.m.e10, q_j * 0.5) < 1e-15);
    CHECK(distance(bell.m.e11, q_one * 0.5) < 1e-15);

    auto rng = seeded_rng(28);
    for (int trial = 0; trial < 300; ++trial) {
        const QSpinor u = random_spinor(rng);
        const S4Point p = hopf_map(u);
        const Projector pr = projector_of(p);

        CHECK(norm_re(pr.m * pr.m - pr.m) < 1e-12);     // idempotent
        CHECK(re_trace(pr.m) == doctest::Approx(1.0));  // rank one

        // P u = u for fiber members
        CHECK(spinor_distance(apply_raw(pr.m, u), u) < 1e-12);

        // <u| Gamma_mu |u> recovers the coordinates
        const auto& g = gamma_set();
        for (int mu = 0; mu < 5; ++mu) {
            const Quaternion exp_val = spinor_inner(u, apply_raw(g[mu], u));
            CHECK(std::abs(exp_val.w - p.xi[mu]) < 1e-12);
            CHECK(exp_val.imag().norm() < 1e-12);
        }

        CHECK(distance(point_of_projector(pr), p) < 1e-12);
        CHECK(distance(hopf_map(representative_of(pr)), p) < 1e-12);
    }
}

TEST_CASE("complex codec is a faithful homomorphism") {
    auto rng = seeded_rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const QMat2 a{random_quaternion(rng), random_quaternion(rng), random_quaternion(rng),
                      random_quaternion(rng)};
        const QMat2 b{random_quaternion(rng), random_quaternion(rng), random_quaternion(rng),
                      random_quaternion(rng)};
        CHECK((to_complex(a * b) - to_complex(a) * to_complex(b)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((to_complex(a.dagger()) - to_complex(a).adjoint()).cwiseAbs().maxCoeff() < 1e-14);

        const QSpinor u = random_spinor(rng);
        CHECK((to_c4(apply_raw(a, u)) - to_complex(a) * to_c4(u)).cwiseAbs().maxCoeff() < 1e-12);

        // right j action through the codec
        const QSpinor uj = spinor_gauge(u, UnitQuaternion(q_j));
        CHECK((to_c4(uj) - j_partner(to_c4(u))).cwiseAbs().maxCoeff() < 1e-14);
    }
}

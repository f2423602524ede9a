#pragma once

#include <random>

#include "qhopf/geodesics.hpp"

namespace qhopf::testing {

inline std::mt19937_64 seeded_rng(unsigned long seed = 0) { return std::mt19937_64(seed); }

inline double gauss(std::mt19937_64& rng) {
    static thread_local std::normal_distribution<double> dist(0.0, 1.0);
    return dist(rng);
}

inline cplx gauss_c(std::mt19937_64& rng) { return {gauss(rng), gauss(rng)}; }

inline Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0) {
    return {scale * gauss(rng), scale * gauss(rng), scale * gauss(rng), scale * gauss(rng)};
}

inline UnitQuaternion random_unit_quaternion(std::mt19937_64& rng) {
    Quaternion q = random_quaternion(rng);
    while (q.norm() < 1e-6) q = random_quaternion(rng);
    return UnitQuaternion(q.normalized(), 1e-12);
}

inline TwoQubitState random_state(std::mt19937_64& rng) {
    std::array<cplx, 4> amps{gauss_c(rng), gauss_c(rng), gauss_c(rng), gauss_c(rng)};
    double n = 0.0;
    for (auto& a : amps) n += std::norm(a);
    n = std::sqrt(n);
    for (auto& a : amps) a /= n;
    return TwoQubitState::from_unit_amplitudes(amps);
}

/// Random state kept away from the separable / maximally-entangled / z = 0
/// degeneracies (for the transport Schmidt machinery).
inline TwoQubitState random_generic_state(std::mt19937_64& rng, double margin = 0.05) {
    while (true) {
        const TwoQubitState s = random_state(rng);
        const auto inv = invariants(s);
        if (inv.concurrence > margin && inv.concurrence < 1.0 - margin &&
            std::abs(inv.z) > margin)
            return s;
    }
}

inline QSpinor random_spinor(std::mt19937_64& rng) {
    return spinor_of_state(random_state(rng));
}

inline Eigen::Matrix2cd random_unitary2(std::mt19937_64& rng) {
    Eigen::Matrix2cd m;
    m << gauss_c(rng), gauss_c(rng), gauss_c(rng), gauss_c(rng);
    const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 2; ++i) {
        const cplx d = r(i, i);
        if (std::abs(d) > 1e-14) q.col(i) *= d / std::abs(d);
    }
    return q;
}

} // namespace qhopf::testing

#pragma once

#include "qhopf/hopf.hpp"

namespace qhopf {

/// Geodesic separation of two rays: overlap = |<v|u>|^2 = cos^2(delta/2).
struct DistanceResult {
    double delta;    // in [0, pi]
    double overlap;  // in [0, 1]
};

DistanceResult geodesic_distance(const QSpinor& v, const QSpinor& u);

/// Two finite-difference evaluations of the line element at u for a
/// perturbation (du0, du1): the overlap form 4(1 - |<u'|u>|^2) with u'
/// the normalized perturbed spinor, and the projector form 4 ||(I-P) du||^2.
/// The two agree to third order in the perturbation.
struct LineElementSample {
    double overlap_form;
    double projector_form;
};

LineElementSample line_element_check(const QSpinor& u, const Quaternion& du0,
                                     const Quaternion& du1);

/// Horizontal geodesic u(s) = cos(s/2) phi1 + sin(s/2) phi2 with
/// orthonormal frame phi1 = v, phi2 aligned so that u(delta) projects onto
/// the ray of u.
struct GeodesicSpec {
    QSpinor phi1, phi2;
    double delta;
};

GeodesicSpec geodesic_between(const QSpinor& v, const QSpinor& u);
QSpinor geodesic_point(const GeodesicSpec& g, double s);

/// Separable state closest to a given state, with the geodesic distance to
/// it. cos^2(delta/2) equals lambda+ of the state. For maximally entangled
/// input the minimizer is not unique; the phi = 0 representative is returned
/// with degenerate = true.
struct NearestSeparable {
    double sigma, phi;
    QSpinor v;
    double delta;
    bool degenerate = false;
};

NearestSeparable nearest_separable(const TwoQubitState& s);

/// Separable-sphere overlap objective at section angles (sigma, phi),
/// evaluated from the state's (z, w, xi0) data. Used by the brute-force
/// optimality oracle.
double separable_overlap(const TwoQubitState& s, double sigma, double phi);

/// Schmidt decomposition by parallel transport: the nearest separable point,
/// the fiber phase Q = <v|u>/|<v|u>|, and the antipodal pair (P phase) from
/// the longer geodesic segment. Requires 0 < concurrence < 1 and |z| > 0.
SchmidtFrame schmidt_transport(const TwoQubitState& s);

} // namespace qhopf

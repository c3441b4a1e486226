#pragma once

#include <utility>

#include "harnack/halfspace_geometry.hpp"

namespace harnack {

/// Sharp two-sided Harnack bounds for positive solutions, expressed as
/// kernel ratios at the geodesic feet. `prefactor_lower/upper` carry the
/// (t1/t2)*C closed-form variant for side-by-side reporting; the kernel
/// ratios are the oracle-verified values.
struct HarnackBounds {
    double kappa0 = 0.0;
    double c_star = 0.0;
    double c_upper = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool lower_attained = true;
    bool upper_attained = true;
    int dimension = 0;
    ArcKind kind = ArcKind::circular;
    double prefactor_lower = 0.0;  // (t_A/t_B) * C_*
    double prefactor_upper = 0.0;  // (t_A/t_B) * C^*
};

/// kappa0 = (|x2-x1|^2 + (t2-t1)^2) * (|x2-x1|^2 + (t2+t1)^2).
double kappa0(const HalfSpacePoint& a, const HalfSpacePoint& b);

/// (C_*, C^*) from the closed forms in sqrt(kappa0); evaluated with
/// conjugate-stabilized algebra so the near-degenerate differences never
/// cancel. Requires A' != B'.
std::pair<double, double> c_star_pair(const HalfSpacePoint& a,
                                      const HalfSpacePoint& b);

/// (C_*, C^*) as ratios of signed boundary offsets to the feet, evaluated
/// in the reduced along-line abscissa. Requires a circular arc.
std::pair<double, double> chordal_c_star(const HalfSpacePoint& a,
                                         const HalfSpacePoint& b);

/// Sharp bounds: lower = K(B; x_*)/K(A; x_*), upper = K(B; x^*)/K(A; x^*)
/// on circular arcs; analytic limits on vertical ones, where the bound at
/// the common foot is (t_A/t_B)^n (attained) and the other end t_B/t_A is
/// a supremum/infimum approached as |y| -> inf (unattained).
HarnackBounds sharp_bounds(const HalfSpacePoint& a, const HalfSpacePoint& b);

struct IdentityCheck {
    double lhs = 0.0;  // cross-ratio of the chords
    double rhs = 0.0;  // (n+1)-th root of the kernel-ratio product
    double gap = 0.0;  // |lhs - rhs| / rhs
};

/// Chord/kernel identity: cross-ratio versus the (n+1)-th root of
/// K(A,x_*)/K(B,x_*) * K(B,x^*)/K(A,x^*). Requires a circular arc.
IdentityCheck kernel_geometry_identity(const HalfSpacePoint& a,
                                       const HalfSpacePoint& b);

/// Comparison lower bound sqrt(t_A/t_B) * exp(-C * (1 + |B'-A'|^2/(t_B-t_A)^2)).
/// Requires forward time t_B > t_A and C >= 0.
double weber_zacher_lower(const HalfSpacePoint& a, const HalfSpacePoint& b,
                          double C);

}  // namespace harnack

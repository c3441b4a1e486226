#include "harnack/harnack_bounds.hpp"

#include <cmath>

#include "harnack/cauchy_kernel.hpp"
#include "harnack/errors.hpp"

namespace harnack {

double kappa0(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    validate_pair(a, b);
    const double s = distance_squared(a.x, b.x);
    const double dt = b.t - a.t;
    const double st = b.t + a.t;
    return (s + dt * dt) * (s + st * st);
}

std::pair<double, double> c_star_pair(const HalfSpacePoint& a,
                                      const HalfSpacePoint& b) {
    validate_pair(a, b);
    const double s = distance_squared(a.x, b.x);
    if (s == 0.0)
        throw DegenerateConfiguration(
            "C_*/C^* closed forms are 0/0 when A' = B'; use the vertical limits");

    const double t1 = a.t, t2 = b.t;
    const double d = (t2 - t1) * (t2 + t1);  // t2^2 - t1^2
    const double twoT = 2.0 * (t1 * t1 + t2 * t2);
    const double k0 = (s + (t2 - t1) * (t2 - t1)) * (s + (t2 + t1) * (t2 + t1));
    const double rk = std::sqrt(k0);

    // kappa0 = s^2 + s*twoT + d^2, so rk -+ |d| conjugates to
    // s (s + twoT) / (rk +- |d|); take the addition branch first.
    double rk_plus_d, rk_minus_d;
    if (d >= 0.0) {
        rk_plus_d = rk + d;
        rk_minus_d = s * (s + twoT) / rk_plus_d;
    } else {
        rk_minus_d = rk - d;
        rk_plus_d = s * (s + twoT) / rk_minus_d;
    }

    // C_* = (rk - d - s)/(rk - d + s) with rk - d - s = 4 s t1^2 / (rk + d + s);
    // C^* = (rk + d + s)/(rk + d - s) with rk + d - s = 4 s t2^2 / (rk - d + s).
    // Every factor below is a positive sum, so nothing cancels.
    const double c_star =
        (4.0 * s * t1 * t1 / (rk_plus_d + s)) / (rk_minus_d + s);
    const double c_upper =
        (rk_plus_d + s) * (rk_minus_d + s) / (4.0 * s * t2 * t2);

    return {c_star, c_upper};
}

std::pair<double, double> chordal_c_star(const HalfSpacePoint& a,
                                         const HalfSpacePoint& b) {
    const GeodesicArc arc = geodesic_through(a, b);
    if (arc.kind != ArcKind::circular)
        throw VerticalArc("chordal C_*/C^* need a circular arc");
    // Signed offsets in the along-line abscissa: A' at 0, B' at `along`.
    const double c_star = (0.0 - arc.s_minus) / (arc.along - arc.s_minus);
    const double c_upper = (0.0 - arc.s_plus) / (arc.along - arc.s_plus);
    return {c_star, c_upper};
}

HarnackBounds sharp_bounds(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    validate_pair(a, b);
    const int n = a.dim();

    HarnackBounds hb;
    hb.dimension = n;
    hb.kappa0 = kappa0(a, b);

    if (a.x == b.x) {
        hb.kind = ArcKind::vertical;
        const double foot_value = std::pow(a.t / b.t, n);
        const double far_value = b.t / a.t;
        if (a.t == b.t) {
            hb.c_star = hb.c_upper = 1.0;
            hb.lower = hb.upper = 1.0;
        } else if (b.t > a.t) {
            hb.c_star = (a.t / b.t) * (a.t / b.t);
            hb.c_upper = 1.0;
            hb.lower = foot_value;  // attained at the common foot
            hb.upper = far_value;
            hb.upper_attained = false;
        } else {
            hb.c_star = 1.0;
            hb.c_upper = (a.t / b.t) * (a.t / b.t);
            hb.lower = far_value;
            hb.upper = foot_value;
            hb.lower_attained = false;
        }
        hb.prefactor_lower = (a.t / b.t) * hb.c_star;
        hb.prefactor_upper = (a.t / b.t) * hb.c_upper;
        return hb;
    }

    const GeodesicArc arc = geodesic_through(a, b);
    hb.kind = ArcKind::circular;
    hb.lower = kernel(b.x, b.t, arc.foot_minus) / kernel(a.x, a.t, arc.foot_minus);
    hb.upper = kernel(b.x, b.t, arc.foot_plus) / kernel(a.x, a.t, arc.foot_plus);
    const auto [c_star, c_upper] = c_star_pair(a, b);
    hb.c_star = c_star;
    hb.c_upper = c_upper;
    hb.prefactor_lower = (a.t / b.t) * c_star;
    hb.prefactor_upper = (a.t / b.t) * c_upper;
    return hb;
}

IdentityCheck kernel_geometry_identity(const HalfSpacePoint& a,
                                       const HalfSpacePoint& b) {
    const GeodesicArc arc = geodesic_through(a, b);
    if (arc.kind != ArcKind::circular)
        throw VerticalArc("the chord identity needs a circular arc");
    const int n = a.dim();

    IdentityCheck chk;
    chk.lhs = chords(a, b, arc).cross_ratio;

    const double ka_minus = kernel(a.x, a.t, arc.foot_minus);
    const double kb_minus = kernel(b.x, b.t, arc.foot_minus);
    const double ka_plus = kernel(a.x, a.t, arc.foot_plus);
    const double kb_plus = kernel(b.x, b.t, arc.foot_plus);
    chk.rhs = std::pow((ka_minus / kb_minus) * (kb_plus / ka_plus),
                       1.0 / (n + 1));
    chk.gap = std::fabs(chk.lhs - chk.rhs) / chk.rhs;
    return chk;
}

double weber_zacher_lower(const HalfSpacePoint& a, const HalfSpacePoint& b,
                          double C) {
    validate_pair(a, b);
    if (!(b.t > a.t))
        throw NonForwardTimes("the comparison bound needs t_B > t_A");
    if (!(C >= 0.0) || !std::isfinite(C))
        throw InvalidConfig("the comparison constant must be >= 0");
    const double dt = b.t - a.t;
    const double q = distance_squared(a.x, b.x) / (dt * dt);
    return std::sqrt(a.t / b.t) * std::exp(-C * (1.0 + q));
}

}  // namespace harnack

#include "harnack/halfspace_geometry.hpp"

#include <cmath>
#include <limits>

#include "harnack/errors.hpp"

namespace harnack {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double distance_squared(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(const Vec& a, const Vec& b) {
    return std::sqrt(distance_squared(a, b));
}

void validate_point(const HalfSpacePoint& p) {
    if (p.x.empty()) throw DimensionMismatch("point must have spatial dimension n >= 1");
    for (double c : p.x)
        if (!std::isfinite(c)) throw DimensionMismatch("point has non-finite coordinate");
    if (!(p.t > 0.0) || !std::isfinite(p.t))
        throw NonPositiveTime("time must be positive");
}

void validate_pair(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    validate_point(a);
    validate_point(b);
    if (a.x.size() != b.x.size())
        throw DimensionMismatch("points have different spatial dimensions");
}

GeodesicArc geodesic_through(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    validate_pair(a, b);
    const int n = a.dim();

    const double a2 = distance(a.x, b.x);
    GeodesicArc arc;
    arc.dim = n;
    arc.along = a2;

    if (a2 == 0.0) {
        if (a.t == b.t) throw IdenticalPoints("geodesic through identical points is undefined");
        arc.kind = ArcKind::vertical;
        arc.foot_center = a.x;
        arc.foot_minus = a.x;
        arc.radius = std::numeric_limits<double>::quiet_NaN();
        arc.direction.assign(n, 0.0);
        return arc;
    }

    arc.kind = ArcKind::circular;
    arc.direction.resize(n);
    for (int i = 0; i < n; ++i) arc.direction[i] = (b.x[i] - a.x[i]) / a2;

    // 1-D reduction: A' at 0, B' at a2 on the line along u.
    const double alpha_s = (a2 * a2 + b.t * b.t - a.t * a.t) / (2.0 * a2);
    const double r = std::hypot(alpha_s, a.t);

    // Feet are the roots of s^2 - 2 alpha_s s - t_A^2 = 0. The root nearer
    // zero is recovered from the product s_minus * s_plus = -t_A^2, which
    // avoids the alpha_s -+ r cancellation.
    double s_minus, s_plus;
    if (alpha_s >= 0.0) {
        s_plus = alpha_s + r;
        s_minus = -(a.t * a.t) / s_plus;
    } else {
        s_minus = alpha_s - r;
        s_plus = -(a.t * a.t) / s_minus;
    }

    arc.center_s = alpha_s;
    arc.radius = r;
    arc.s_minus = s_minus;
    arc.s_plus = s_plus;
    arc.foot_center.resize(n);
    arc.foot_minus.resize(n);
    arc.foot_plus.resize(n);
    for (int i = 0; i < n; ++i) {
        arc.foot_center[i] = a.x[i] + alpha_s * arc.direction[i];
        arc.foot_minus[i] = a.x[i] + s_minus * arc.direction[i];
        arc.foot_plus[i] = a.x[i] + s_plus * arc.direction[i];
    }
    return arc;
}

std::pair<Vec, Vec> boundary_feet(const GeodesicArc& arc) {
    if (arc.kind != ArcKind::circular)
        throw VerticalArc("vertical arc: one boundary foot is the point at infinity");
    return {arc.foot_minus, arc.foot_plus};
}

bool plane_membership(const HalfSpacePoint& a, const HalfSpacePoint& b,
                      const Vec& q_x, double q_t, double tol) {
    validate_pair(a, b);
    if (q_x.size() != a.x.size())
        throw DimensionMismatch("query point has wrong spatial dimension");
    (void)q_t;  // the plane contains the whole t-line over its trace
    const double a2 = distance(a.x, b.x);
    if (a2 == 0.0)
        throw DegenerateDirection("plane through A and B needs distinct projections");

    double par = 0.0;
    for (std::size_t i = 0; i < q_x.size(); ++i)
        par += (q_x[i] - a.x[i]) * (b.x[i] - a.x[i]) / a2;
    double perp2 = 0.0;
    for (std::size_t i = 0; i < q_x.size(); ++i) {
        const double d = (q_x[i] - a.x[i]) - par * (b.x[i] - a.x[i]) / a2;
        perp2 += d * d;
    }
    return std::sqrt(perp2) <= tol;
}

ChordSet chords(const HalfSpacePoint& a, const HalfSpacePoint& b,
                const Vec& foot_minus, const Vec& foot_plus) {
    validate_pair(a, b);
    if (foot_minus.size() != a.x.size() || foot_plus.size() != a.x.size())
        throw DimensionMismatch("feet have wrong spatial dimension");

    ChordSet c;
    c.d10 = std::hypot(a.t, distance(a.x, foot_minus));
    c.d20 = std::hypot(b.t, distance(b.x, foot_minus));
    c.d13 = std::hypot(a.t, distance(a.x, foot_plus));
    c.d23 = std::hypot(b.t, distance(b.x, foot_plus));
    c.cross_ratio = (c.d20 * c.d13) / (c.d10 * c.d23);
    return c;
}

ChordSet chords(const HalfSpacePoint& a, const HalfSpacePoint& b,
                const GeodesicArc& arc) {
    if (arc.kind != ArcKind::circular)
        throw VerticalArc("chords are defined for circular arcs only");
    return chords(a, b, arc.foot_minus, arc.foot_plus);
}

double hyperbolic_distance(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    validate_pair(a, b);
    if (a.x == b.x) {
        if (a.t == b.t) return 0.0;
        return std::fabs(std::log(b.t / a.t));
    }
    const GeodesicArc arc = geodesic_through(a, b);
    return std::fabs(std::log(chords(a, b, arc).cross_ratio));
}

}  // namespace harnack

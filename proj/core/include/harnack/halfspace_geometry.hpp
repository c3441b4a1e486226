#pragma once

#include <utility>
#include <vector>

namespace harnack {

using Vec = std::vector<double>;

/// A point (x, t) of the upper half-space R^n x (0, inf).
struct HalfSpacePoint {
    Vec x;
    double t = 0.0;

    int dim() const { return static_cast<int>(x.size()); }
};

/// Throws unless the point is finite with t > 0 and n >= 1.
void validate_point(const HalfSpacePoint& p);
/// Throws unless both points are valid and share a dimension.
void validate_pair(const HalfSpacePoint& a, const HalfSpacePoint& b);

enum class ArcKind { circular, vertical };

/// The geodesic through two half-space points: a semicircle with center on
/// the boundary t = 0, or a vertical ray when the projections coincide.
///
/// Scalar abscissas (center_s, s_minus, s_plus, along) live on the line
/// through A' in direction u, with A' at 0 and B' at `along`; they are the
/// numerically stable representation of the center and feet.
struct GeodesicArc {
    ArcKind kind = ArcKind::circular;
    int dim = 0;
    Vec foot_center;  // alpha: circle center on t = 0 (vertical: the common projection)
    double radius = 0.0;
    Vec direction;    // unit u from A' toward B' (vertical: zeros)
    Vec foot_minus;   // x_* = alpha - r u, on A's side (vertical: the common projection)
    Vec foot_plus;    // x^* = alpha + r u (vertical: empty, point at infinity)
    double along = 0.0;     // |B' - A'|
    double center_s = 0.0;  // abscissa of alpha
    double s_minus = 0.0;   // abscissa of x_*
    double s_plus = 0.0;    // abscissa of x^*
};

/// The four chords joining A and B to the boundary feet, and their cross-ratio
/// (d20 * d13) / (d10 * d23).
struct ChordSet {
    double d20 = 0.0;
    double d13 = 0.0;
    double d10 = 0.0;
    double d23 = 0.0;
    double cross_ratio = 0.0;
};

/// Geodesic arc through A and B. The center abscissa comes from the 1-D
/// reduction along u; the small foot abscissa is recovered from the root
/// product s_minus * s_plus = -t_A^2 to avoid cancellation.
GeodesicArc geodesic_through(const HalfSpacePoint& a, const HalfSpacePoint& b);

/// Boundary feet (x_*, x^*) of a circular arc. Throws VerticalArc otherwise.
std::pair<Vec, Vec> boundary_feet(const GeodesicArc& arc);

/// True iff q = (q_x, q_t) lies in the 2-plane through A' spanned by u and
/// the t-direction, within `tol` of perpendicular distance.
bool plane_membership(const HalfSpacePoint& a, const HalfSpacePoint& b,
                      const Vec& q_x, double q_t, double tol = 1e-10);

/// Chord lengths and cross-ratio joining A and B to the given boundary
/// feet. With the feet of the arc through (A, B) the cross-ratio exceeds
/// one; swapping A and B while holding the same feet inverts it.
ChordSet chords(const HalfSpacePoint& a, const HalfSpacePoint& b,
                const Vec& foot_minus, const Vec& foot_plus);
/// Convenience overload taking the feet from a circular arc.
ChordSet chords(const HalfSpacePoint& a, const HalfSpacePoint& b,
                const GeodesicArc& arc);

/// Hyperbolic distance in the half-space model: |ln cross_ratio| on circular
/// arcs, |ln(t_B / t_A)| on vertical ones, 0 when A = B.
double hyperbolic_distance(const HalfSpacePoint& a, const HalfSpacePoint& b);

// small vector helpers shared by the numeric modules
double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
double distance(const Vec& a, const Vec& b);
double distance_squared(const Vec& a, const Vec& b);

}  // namespace harnack

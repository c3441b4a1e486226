#pragma once

#include "harnack/halfspace_geometry.hpp"

namespace harnack {

/// Extremizers of the shifted kernel ratio y -> K(B.x - y, t_B)/K(A.x - y, t_A).
struct ExtremalResult {
    Vec argmin;
    double min_value = 0.0;
    Vec argmax;
    double max_value = 0.0;
    bool min_attained = true;
    bool max_attained = true;
};

/// The shifted kernel ratio K(B; y)/K(A; y), computed as
/// (t_B/t_A) * ((t_A^2 + |y-A'|^2)/(t_B^2 + |y-B'|^2))^((n+1)/2) so the
/// |y| -> inf limit t_B/t_A is reachable without overflow.
double ratio_profile(const HalfSpacePoint& a, const HalfSpacePoint& b,
                     const Vec& y);

/// Restricts y to the line through A' and B', solves the critical-point
/// quadratic of the reduced profile, and refines each root by
/// golden-section search on the profile itself. Requires A' != B'.
ExtremalResult extremize_line(const HalfSpacePoint& a, const HalfSpacePoint& b);

/// Full-grid scan over [mid - box, mid + box]^n (mid = midpoint of A'B')
/// followed by derivative-free coordinate-descent refinement.
/// box_halfwidth <= 0 selects the default 10 * (|A'-B'| + t_A + t_B);
/// resolution_per_axis^n must not exceed 1e7. n <= 3.
ExtremalResult extremize_grid(const HalfSpacePoint& a, const HalfSpacePoint& b,
                              double box_halfwidth = 0.0,
                              long resolution_per_axis = 401);

/// Perpendicular distance from y to the line through A' and B'.
double line_offset(const HalfSpacePoint& a, const HalfSpacePoint& b,
                   const Vec& y);

}  // namespace harnack

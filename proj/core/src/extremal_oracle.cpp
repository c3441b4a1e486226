#include "harnack/extremal_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <tuple>
#include <vector>

#include "harnack/errors.hpp"

namespace harnack {

double ratio_profile(const HalfSpacePoint& a, const HalfSpacePoint& b,
                     const Vec& y) {
    validate_pair(a, b);
    if (y.size() != a.x.size())
        throw DimensionMismatch("profile shift has wrong dimension");
    const int n = a.dim();
    const double da = a.t * a.t + distance_squared(y, a.x);
    const double db = b.t * b.t + distance_squared(y, b.x);
    return (b.t / a.t) * std::pow(da / db, 0.5 * (n + 1));
}

namespace {

// Reduced on-line profile g(s) = ratio_profile at y = A' + s u.
struct LineProfile {
    double ta, tb, a2;
    int n;
    double operator()(double s) const {
        const double da = ta * ta + s * s;
        const double db = tb * tb + (s - a2) * (s - a2);
        return (tb / ta) * std::pow(da / db, 0.5 * (n + 1));
    }
};

// Golden-section search for the minimum of f on [lo, hi].
template <class F>
double golden_section_min(F&& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 300 && (hi - lo) > tol; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ExtremalResult extremize_line(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    validate_pair(a, b);
    const double a2 = distance(a.x, b.x);
    if (a2 == 0.0)
        throw DegenerateDirection("line extremization needs A' != B'");
    const int n = a.dim();
    const LineProfile g{a.t, b.t, a2, n};

    // d/ds of (t_A^2 + s^2)/(t_B^2 + (s-a2)^2) vanishes on the roots of
    // s^2 - 2 b s - t_A^2 = 0 with b = (a2^2 + t_B^2 - t_A^2)/(2 a2);
    // the root product -t_A^2 recovers the small root stably. The power
    // (n+1)/2 is monotone, so the critical points do not depend on n.
    const double bq = (a2 * a2 + b.t * b.t - a.t * a.t) / (2.0 * a2);
    const double disc = std::hypot(bq, a.t);
    double s_lo, s_hi;
    if (bq >= 0.0) {
        s_hi = bq + disc;
        s_lo = -(a.t * a.t) / s_hi;
    } else {
        s_lo = bq - disc;
        s_hi = -(a.t * a.t) / s_lo;
    }

    // Refine each root inside a bracket that contains exactly one critical
    // point (the roots are 2*disc apart).
    const double w = 0.45 * (s_hi - s_lo);
    auto refine = [&](double root, bool minimize) {
        auto objective = [&](double s) { return minimize ? g(s) : -g(s); };
        const double tol = 1e-10 * (1.0 + std::fabs(root));
        return golden_section_min(objective, root - w, root + w, tol);
    };

    const bool lo_is_min = g(s_lo) <= g(s_hi);
    const double s_min = refine(lo_is_min ? s_lo : s_hi, true);
    const double s_max = refine(lo_is_min ? s_hi : s_lo, false);

    ExtremalResult out;
    out.argmin.resize(n);
    out.argmax.resize(n);
    for (int i = 0; i < n; ++i) {
        const double u = (b.x[i] - a.x[i]) / a2;
        out.argmin[i] = a.x[i] + s_min * u;
        out.argmax[i] = a.x[i] + s_max * u;
    }
    out.min_value = g(s_min);
    out.max_value = g(s_max);
    return out;
}

namespace {

struct GridBest {
    double min_value, max_value;
    long min_index, max_index;
};

}  // namespace

ExtremalResult extremize_grid(const HalfSpacePoint& a, const HalfSpacePoint& b,
                              double box_halfwidth, long resolution_per_axis) {
    validate_pair(a, b);
    const int n = a.dim();
    if (n > 3)
        throw UnsupportedDimension("grid extremization supports n <= 3");
    if (resolution_per_axis < 2)
        throw ResolutionExceeded("grid needs at least 2 points per axis");
    double total_points = 1.0;
    for (int i = 0; i < n; ++i) total_points *= static_cast<double>(resolution_per_axis);
    if (total_points > 1e7)
        throw ResolutionExceeded("grid exceeds the 1e7 total point budget");

    const double a2 = distance(a.x, b.x);
    const double box =
        box_halfwidth > 0.0 ? box_halfwidth : 10.0 * (a2 + a.t + b.t);

    Vec mid(n);
    for (int i = 0; i < n; ++i) mid[i] = 0.5 * (a.x[i] + b.x[i]);
    const long m = resolution_per_axis;
    const double spacing = 2.0 * box / static_cast<double>(m - 1);

    auto point_at = [&](long index, Vec& y) {
        for (int i = 0; i < n; ++i) {
            const long k = index % m;
            index /= m;
            y[i] = mid[i] - box + spacing * static_cast<double>(k);
        }
    };

    const long total = static_cast<long>(total_points);
    const unsigned hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    const unsigned workers = total > 20000 ? hw : 1u;
    std::vector<GridBest> best(workers);

    auto scan = [&](unsigned w) {
        const long lo = static_cast<long>(w) * total / workers;
        const long hi = static_cast<long>(w + 1) * total / workers;
        GridBest gb{std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity(), lo, lo};
        Vec y(n);
        for (long idx = lo; idx < hi; ++idx) {
            point_at(idx, y);
            const double v = ratio_profile(a, b, y);
            if (v < gb.min_value) {
                gb.min_value = v;
                gb.min_index = idx;
            }
            if (v > gb.max_value) {
                gb.max_value = v;
                gb.max_index = idx;
            }
        }
        best[w] = gb;
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: ties resolved by the smaller linear index,
    // so the result does not depend on the chunking.
    GridBest gb = best[0];
    for (unsigned w = 1; w < workers; ++w) {
        const GridBest& c = best[w];
        if (c.min_value < gb.min_value ||
            (c.min_value == gb.min_value && c.min_index < gb.min_index)) {
            gb.min_value = c.min_value;
            gb.min_index = c.min_index;
        }
        if (c.max_value > gb.max_value ||
            (c.max_value == gb.max_value && c.max_index < gb.max_index)) {
            gb.max_value = c.max_value;
            gb.max_index = c.max_index;
        }
    }

    // Coordinate descent with shrinking step, derivative-free.
    auto descend = [&](Vec y, bool minimize) {
        double step = spacing;
        double fy = ratio_profile(a, b, y);
        for (int sweep = 0; sweep < 60; ++sweep) {
            for (int i = 0; i < n; ++i) {
                for (double dir : {+1.0, -1.0}) {
                    Vec trial = y;
                    trial[i] += dir * step;
                    const double ft = ratio_profile(a, b, trial);
                    if (minimize ? ft < fy : ft > fy) {
                        y = trial;
                        fy = ft;
                    }
                }
            }
            step *= 0.5;
        }
        return std::pair<Vec, double>{y, fy};
    };

    ExtremalResult out;
    Vec y(n);
    point_at(gb.min_index, y);
    std::tie(out.argmin, out.min_value) = descend(y, true);
    point_at(gb.max_index, y);
    std::tie(out.argmax, out.max_value) = descend(y, false);
    return out;
}

double line_offset(const HalfSpacePoint& a, const HalfSpacePoint& b,
                   const Vec& y) {
    validate_pair(a, b);
    const double a2 = distance(a.x, b.x);
    if (a2 == 0.0)
        throw DegenerateDirection("line offset needs A' != B'");
    double par = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        par += (y[i] - a.x[i]) * (b.x[i] - a.x[i]) / a2;
    double perp2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = (y[i] - a.x[i]) - par * (b.x[i] - a.x[i]) / a2;
        perp2 += d * d;
    }
    return std::sqrt(perp2);
}

}  // namespace harnack

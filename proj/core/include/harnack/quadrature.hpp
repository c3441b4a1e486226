#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "harnack/errors.hpp"

namespace harnack {

/// Knobs for the adaptive Gauss-Kronrod integrators.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    int max_depth = 40;
    double truncation_radius = 0.0;  // 0 = choose automatically

    void validate() const {
        if (!(rel_tol > 0.0) || rel_tol > 1e-2)
            throw InvalidConfig("quadrature rel_tol must lie in (0, 1e-2]");
        if (max_depth < 1 || max_depth > 64)
            throw InvalidConfig("quadrature max_depth must lie in [1, 64]");
        if (!(truncation_radius >= 0.0) || !std::isfinite(truncation_radius))
            throw InvalidConfig("quadrature truncation_radius must be >= 0 and finite");
    }
};

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
};

namespace detail {

// 15-point Kronrod nodes (positive half) with embedded 7-point Gauss rule.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
inline void gk15(F&& f, double a, double b, double& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kGK15WeightsK[7] * fc;
    double resg = kGK15WeightsG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGK15Nodes[i];
        const double fs = f(c - dx) + f(c + dx);
        resk += kGK15WeightsK[i] * fs;
        if (i % 2 == 1) resg += kGK15WeightsG[i / 2] * fs;
    }
    value = resk * h;
    err = std::fabs((resk - resg) * h);
}

struct Segment {
    double a, b, value, err;
    int depth;
    bool operator<(const Segment& o) const {
        if (err != o.err) return err < o.err;
        return a > o.a;  // total order keeps the refinement deterministic
    }
};

}  // namespace detail

/// Globally adaptive GK15 on [a, b]. Stops once the accumulated error
/// estimate drops below max(rel_tol * |integral|, abs_floor); throws
/// QuadratureNonConvergence when the worst segment hits max_depth first.
template <class F>
IntegralResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                                  int max_depth = 40, double abs_floor = 0.0) {
    IntegralResult out;
    if (a == b) return out;

    std::priority_queue<detail::Segment> heap;
    double total = 0.0, total_err = 0.0;

    auto push = [&](double lo, double hi, int depth) {
        detail::Segment s{lo, hi, 0.0, 0.0, depth};
        detail::gk15(f, lo, hi, s.value, s.err);
        out.evaluations += 15;
        total += s.value;
        total_err += s.err;
        heap.push(s);
    };

    push(a, b, 0);
    const std::size_t kMaxSegments = 200000;
    while (total_err > std::max(rel_tol * std::fabs(total), abs_floor)) {
        detail::Segment worst = heap.top();
        heap.pop();
        if (worst.depth >= max_depth)
            throw QuadratureNonConvergence(
                "adaptive quadrature: max_depth exhausted before tolerance");
        if (heap.size() + 2 > kMaxSegments)
            throw QuadratureNonConvergence(
                "adaptive quadrature: segment budget exhausted before tolerance");
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureNonConvergence(
                "adaptive quadrature: interval no longer splittable");
        push(worst.a, mid, worst.depth + 1);
        push(mid, worst.b, worst.depth + 1);
    }
    out.value = total;
    out.error = total_err;
    return out;
}

/// \int_R^inf g(h) dh via the substitution h = 1/s (quadpack dqk15i idiom):
/// the image integral runs over (0, 1/R] and never evaluates at s = 0.
template <class F>
IntegralResult integrate_to_infinity(F&& g, double R, double rel_tol,
                                     int max_depth = 40, double abs_floor = 0.0) {
    if (!(R > 0.0)) throw InvalidConfig("tail integration requires R > 0");
    auto transformed = [&g](double s) {
        const double h = 1.0 / s;
        return g(h) * h * h;
    };
    try {
        return integrate_adaptive(transformed, 0.0, 1.0 / R, rel_tol, max_depth,
                                  abs_floor);
    } catch (const QuadratureNonConvergence& e) {
        throw TailEstimateFailure(e.what());
    }
}

namespace detail {

template <class F>
double integrate_box_rec(F&& f, const std::vector<double>& lo,
                         const std::vector<double>& hi, std::vector<double>& point,
                         std::size_t axis, double rel_tol, int max_depth) {
    if (axis + 1 == lo.size()) {
        auto line = [&](double x) {
            point[axis] = x;
            return f(point);
        };
        return integrate_adaptive(line, lo[axis], hi[axis], rel_tol, max_depth).value;
    }
    auto slice = [&](double x) {
        point[axis] = x;
        return integrate_box_rec(f, lo, hi, point, axis + 1, rel_tol, max_depth);
    };
    return integrate_adaptive(slice, lo[axis], hi[axis], rel_tol, max_depth).value;
}

}  // namespace detail

/// Nested adaptive tensor quadrature of f over the axis-aligned box
/// [lo, hi]. f receives the full coordinate vector.
template <class F>
double integrate_box_nd(F&& f, const std::vector<double>& lo,
                        const std::vector<double>& hi, double rel_tol,
                        int max_depth = 40) {
    if (lo.empty() || lo.size() != hi.size())
        throw InvalidConfig("integrate_box_nd: empty or mismatched bounds");
    std::vector<double> point(lo.size(), 0.0);
    return detail::integrate_box_rec(f, lo, hi, point, 0, rel_tol, max_depth);
}

}  // namespace harnack

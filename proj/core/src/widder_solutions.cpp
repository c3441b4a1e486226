#include "harnack/widder_solutions.hpp"

#include <cmath>
#include <string>

#include "harnack/cauchy_kernel.hpp"
#include "harnack/errors.hpp"
#include "harnack/harnack_bounds.hpp"

namespace harnack {

namespace {

void check_finite_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidScenario(std::string(what) + " must be positive and finite");
}

}  // namespace

void InitialMeasure::validate(int dim) const {
    if (empty())
        throw InvalidScenario("measure must contain at least one component");
    for (const auto& a : atoms) {
        if (static_cast<int>(a.location.size()) != dim)
            throw InvalidScenario("atom location has wrong dimension");
        for (double c : a.location)
            if (!std::isfinite(c)) throw InvalidScenario("atom location must be finite");
        check_finite_positive(a.mass, "atom mass");
    }
    for (const auto& g : gaussians) {
        if (static_cast<int>(g.center.size()) != dim)
            throw InvalidScenario("gaussian center has wrong dimension");
        for (double c : g.center)
            if (!std::isfinite(c)) throw InvalidScenario("gaussian center must be finite");
        check_finite_positive(g.sigma, "gaussian sigma");
        check_finite_positive(g.mass, "gaussian mass");
    }
    for (const auto& b : boxes) {
        if (static_cast<int>(b.center.size()) != dim ||
            b.halfwidths.size() != b.center.size())
            throw InvalidScenario("box center/halfwidths have wrong dimension");
        for (double c : b.center)
            if (!std::isfinite(c)) throw InvalidScenario("box center must be finite");
        for (double w : b.halfwidths) check_finite_positive(w, "box halfwidth");
        check_finite_positive(b.height, "box height");
    }
}

double evaluate(const WidderSolution& sol, const HalfSpacePoint& p) {
    validate_point(p);
    if (p.dim() != sol.dimension)
        throw DimensionMismatch("evaluation point has wrong dimension");
    sol.measure.validate(sol.dimension);
    sol.quadrature.validate();
    const int n = sol.dimension;
    if (n > 3 && (!sol.measure.gaussians.empty() || !sol.measure.boxes.empty()))
        throw UnsupportedDimension("density quadrature supports n <= 3");

    double u = 0.0;
    for (const auto& atom : sol.measure.atoms)
        u += atom.mass * kernel(p.x, p.t, atom.location);

    const double tol = sol.quadrature.rel_tol;
    const int depth = sol.quadrature.max_depth;

    for (const auto& g : sol.measure.gaussians) {
        const double norm =
            g.mass * std::pow(2.0 * M_PI * g.sigma * g.sigma, -0.5 * n);
        Vec lo(n), hi(n);
        for (int i = 0; i < n; ++i) {
            lo[i] = g.center[i] - 12.0 * g.sigma;
            hi[i] = g.center[i] + 12.0 * g.sigma;
        }
        auto integrand = [&](const Vec& y) {
            const double r2 = distance_squared(y, g.center);
            return kernel(p.x, p.t, y) *
                   std::exp(-0.5 * r2 / (g.sigma * g.sigma));
        };
        u += norm * integrate_box_nd(integrand, lo, hi, tol, depth);
    }

    for (const auto& b : sol.measure.boxes) {
        Vec lo(n), hi(n);
        for (int i = 0; i < n; ++i) {
            lo[i] = b.center[i] - b.halfwidths[i];
            hi[i] = b.center[i] + b.halfwidths[i];
        }
        auto integrand = [&](const Vec& y) { return kernel(p.x, p.t, y); };
        u += b.height * integrate_box_nd(integrand, lo, hi, tol, depth);
    }
    return u;
}

HarnackRatio harnack_ratio(const WidderSolution& sol, const HalfSpacePoint& a,
                           const HalfSpacePoint& b, double epsilon) {
    validate_pair(a, b);
    const HarnackBounds hb = sharp_bounds(a, b);

    HarnackRatio out;
    out.lower = hb.lower;
    out.upper = hb.upper;
    out.ratio = evaluate(sol, b) / evaluate(sol, a);
    out.contained = out.ratio >= hb.lower * (1.0 - epsilon) &&
                    out.ratio <= hb.upper * (1.0 + epsilon);
    out.margin = std::min((out.ratio - hb.lower) / hb.lower,
                          (hb.upper - out.ratio) / hb.upper);
    return out;
}

SharpnessProbe sharpness_probe(const HalfSpacePoint& a,
                               const HalfSpacePoint& b) {
    validate_pair(a, b);
    const int n = a.dim();
    const HarnackBounds hb = sharp_bounds(a, b);

    auto atom_ratio = [&](const Vec& y) {
        WidderSolution sol;
        sol.dimension = n;
        sol.measure.atoms.push_back({y, 1.0});
        return evaluate(sol, b) / evaluate(sol, a);
    };

    SharpnessProbe probe;
    if (hb.kind == ArcKind::circular) {
        const GeodesicArc arc = geodesic_through(a, b);
        probe.lower_gap =
            std::fabs(atom_ratio(arc.foot_minus) - hb.lower) / hb.lower;
        probe.upper_gap =
            std::fabs(atom_ratio(arc.foot_plus) - hb.upper) / hb.upper;
        return probe;
    }

    // Vertical: the common foot attains (t_A/t_B)^n; the other bound is a
    // limit as the atom escapes to infinity.
    const double foot_value = atom_ratio(a.x);
    const double far_bound = b.t / a.t;
    const bool foot_is_lower = b.t > a.t;
    const double attained = foot_is_lower ? hb.lower : hb.upper;
    const double attained_gap = std::fabs(foot_value - attained) / attained;

    for (int k = 1; k <= 6; ++k) {
        Vec y = a.x;
        y[0] += std::pow(10.0, k);
        probe.escape_sequence.emplace_back(std::pow(10.0, k), atom_ratio(y));
    }
    const double last = probe.escape_sequence.back().second;
    const double escape_gap = std::fabs(last - far_bound) / far_bound;
    probe.lower_gap = foot_is_lower ? attained_gap : escape_gap;
    probe.upper_gap = foot_is_lower ? escape_gap : attained_gap;
    return probe;
}

}  // namespace harnack

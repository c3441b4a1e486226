#pragma once

#include <vector>

#include "harnack/halfspace_geometry.hpp"
#include "harnack/quadrature.hpp"

namespace harnack {

struct Atom {
    Vec location;
    double mass = 1.0;
};

/// Mass-normalized isotropic gaussian bump: density
/// mass * (2 pi sigma^2)^(-n/2) exp(-|y - center|^2 / (2 sigma^2)).
struct GaussianBump {
    Vec center;
    double sigma = 1.0;
    double mass = 1.0;
};

/// Constant density `height` on the axis-aligned box center +- halfwidths.
struct BoxBump {
    Vec center;
    Vec halfwidths;
    double height = 1.0;
};

/// Nonnegative initial datum: atoms plus parametric densities.
struct InitialMeasure {
    std::vector<Atom> atoms;
    std::vector<GaussianBump> gaussians;
    std::vector<BoxBump> boxes;

    bool empty() const {
        return atoms.empty() && gaussians.empty() && boxes.empty();
    }
    /// Throws InvalidScenario unless non-empty, positive and dimensionally
    /// consistent with `dim`.
    void validate(int dim) const;
};

/// A positive solution realized as the kernel convolution of the measure.
struct WidderSolution {
    InitialMeasure measure;
    int dimension = 1;
    QuadratureConfig quadrature;
};

/// u(P) = sum_i m_i K(P.x - y_i, P.t) + int K(P.x - y, P.t) f(y) dy.
/// Densities use nested adaptive tensor quadrature (n <= 3); gaussian
/// supports are truncated at 12 sigma, leaving a relative tail below 4e-32.
double evaluate(const WidderSolution& sol, const HalfSpacePoint& p);

struct HarnackRatio {
    double ratio = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool contained = false;
    double margin = 0.0;  // relative signed distance to the nearer bound
};

/// ratio = u(B)/u(A) checked against the sharp bounds with relative slack
/// epsilon; margin = min((ratio-lower)/lower, (upper-ratio)/upper).
HarnackRatio harnack_ratio(const WidderSolution& sol, const HalfSpacePoint& a,
                           const HalfSpacePoint& b, double epsilon = 1e-9);

/// Attainment probe: relative gaps between single-atom ratios at the feet
/// and the sharp bounds. On vertical configurations the receding foot is
/// replaced by an escape sequence of atoms at distance 10^k, k = 1..6,
/// whose ratios approach the unattained bound; the matching gap slot then
/// reports the last sequence element.
struct SharpnessProbe {
    double lower_gap = 0.0;
    double upper_gap = 0.0;
    std::vector<std::pair<double, double>> escape_sequence;  // (distance, ratio)
};

SharpnessProbe sharpness_probe(const HalfSpacePoint& a, const HalfSpacePoint& b);

}  // namespace harnack

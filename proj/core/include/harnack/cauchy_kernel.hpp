#pragma once

#include <functional>

#include "harnack/halfspace_geometry.hpp"
#include "harnack/quadrature.hpp"

namespace harnack {

/// Sign convention for the half-Laplacian. `standard` is the positive
/// singular-integral operator (symbol |xi|), under which the Cauchy-Poisson
/// kernel solves u_t + (-Lap)^{1/2} u = 0; `paper` carries the opposite
/// sign and is kept selectable for the Li-Yau report.
enum class Convention { standard, paper };

struct KernelParams {
    int dimension = 1;
    Convention sign_convention = Convention::standard;

    void validate() const;
};

/// c_n = Gamma((n+1)/2) / pi^((n+1)/2), evaluated in the log domain.
double normalization_constant(int n);

/// K(x, t; y) = c_n * t * (t^2 + |x-y|^2)^(-(n+1)/2) with n = x.size().
double kernel(const Vec& x, double t, const Vec& y);
/// 1-D kernel as a function of the offset dx = x - y.
double kernel_1d(double dx, double t);

/// Analytic time derivative of the 1-D kernel.
double kernel_dt_1d(double x, double t);
/// Analytic standard-convention half-Laplacian of the 1-D kernel,
/// (1/pi) (t^2 - x^2) / (t^2 + x^2)^2.
double half_laplacian_kernel_reference(double x, double t);

/// Principal-value half-Laplacian of a scalar function at x, via the
/// symmetrized second-difference form
///   (1/pi) * int_0^inf (2 f(x) - f(x+h) - f(x-h)) / h^2 dh
/// (standard convention; the paper convention is its negative).
/// The singular end is integrated by a Taylor segment, the tail by the
/// h -> 1/h substitution, the middle by adaptive GK15.
double half_laplacian_1d(const std::function<double(double)>& f, double x,
                         const QuadratureConfig& cfg = {},
                         Convention convention = Convention::standard);

/// Heat-equation residual of the kernel at (x, t):
/// d_t k + (-Lap)^{1/2} k  (standard convention; analytic time derivative,
/// PV quadrature for the nonlocal term).
double kernel_residual(double x, double t, const QuadratureConfig& cfg = {});

struct LiYauResult {
    double nonlocal = 0.0;            // -(-Lap)^{1/2} ln k(., t) at x, by PV quadrature
    double nonlocal_reference = 0.0;  // closed form -+ 2t / (t^2 + x^2)
    double threshold = 0.0;           // -1 / (2t)
    double value = 0.0;               // L = nonlocal + 1/(2t)
    double reference = 0.0;           // closed-form L
};

/// Li-Yau expression for the kernel as test solution: evaluates
/// L(x, t) = -(-Lap)^{1/2} ln k(., t)(x) + 1/(2t) under the chosen
/// convention, together with its closed-form reference.
LiYauResult li_yau_gap(double x, double t, const QuadratureConfig& cfg = {},
                       Convention convention = Convention::standard);

}  // namespace harnack

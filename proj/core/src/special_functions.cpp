#include "harnack/special_functions.hpp"

#include <cmath>
#include <limits>

namespace harnack {

namespace {

// Godfrey's g = 7 coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2
constexpr double kLogPi = 1.1447298858494001741;

}  // namespace

double log_gamma(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.5) {
        // log Gamma(x) = log(pi / sin(pi x)) - log Gamma(1 - x)
        const double s = std::sin(M_PI * x);
        if (s == 0.0) return std::numeric_limits<double>::infinity();
        return kLogPi - std::log(std::fabs(s)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    const double base = z + kLanczosG + 0.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(base) - base + std::log(a);
}

}  // namespace harnack

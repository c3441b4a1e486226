#pragma once

namespace harnack {

/// Natural log of the gamma function, Lanczos approximation (g = 7, 9 terms)
/// in the log domain. Accurate to ~1e-15 relative for x >= 0.5; the
/// reflection formula covers x < 0.5 (non-pole arguments).
double log_gamma(double x);

}  // namespace harnack

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "harnack/cauchy_kernel.hpp"
#include "harnack/errors.hpp"
#include "harnack/special_functions.hpp"

using namespace harnack;

TEST_CASE("log_gamma matches exact factorials at integers") {
    double log_fact = 0.0;  // log((k-1)!)
    for (int k = 1; k <= 20; ++k) {
        CHECK(log_gamma(k) == doctest::Approx(log_fact).epsilon(1e-14));
        log_fact += std::log(static_cast<double>(k));
    }
}

TEST_CASE("log_gamma matches exact half-integer values") {
    // Gamma(1/2) = sqrt(pi), Gamma(k + 1/2) = (2k-1)!! / 2^k * sqrt(pi)
    double value = std::sqrt(M_PI);
    for (int k = 0; k <= 15; ++k) {
        CHECK(log_gamma(k + 0.5) == doctest::Approx(std::log(value)).epsilon(1e-14));
        value *= k + 0.5;
    }
}

TEST_CASE("log_gamma agrees with the C library across a grid") {
    for (double x = 0.5; x <= 40.0; x += 0.25)
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    // reflection region
    for (double x : {0.1, 0.25, 0.4, -0.5, -1.3})
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
}

TEST_CASE("normalization constant c_n") {
    CHECK(normalization_constant(1) == doctest::Approx(1.0 / M_PI).epsilon(1e-14));
    CHECK(normalization_constant(2) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));
    // n = 3: Gamma(2) = 1 via the independent C-library oracle
    CHECK(normalization_constant(3) ==
          doctest::Approx(std::exp(std::lgamma(2.0)) / (M_PI * M_PI)).epsilon(1e-14));
    CHECK(normalization_constant(3) == doctest::Approx(0.10132118364233778).epsilon(1e-9));
    CHECK_THROWS_AS(normalization_constant(0), NonPositiveDimension);
    CHECK_THROWS_AS(normalization_constant(-2), NonPositiveDimension);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "harnack/cauchy_kernel.hpp"
#include "harnack/errors.hpp"
#include "harnack/harnack_bounds.hpp"
#include "harnack/widder_solutions.hpp"
#include "support/generators.hpp"

using namespace harnack;
using namespace harnack::testing;

namespace {

WidderSolution atom_solution(int n, const Vec& y, double mass = 1.0) {
    WidderSolution sol;
    sol.dimension = n;
    sol.measure.atoms.push_back({y, mass});
    return sol;
}

const HalfSpacePoint kA1{{0.0}, 1.0};
const HalfSpacePoint kB1{{1.0}, 2.0};

}  // namespace

TEST_CASE("single atoms evaluate to kernel values") {
    CHECK(evaluate(atom_solution(1, {0.0}), {{0.0}, 1.0}) ==
          doctest::Approx(1.0 / M_PI).epsilon(1e-14));

    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Vec y = random_vec(rng, n, -4.0, 4.0);
        const HalfSpacePoint p{random_vec(rng, n, -4.0, 4.0), 0.5 + (rng() % 100) / 40.0};
        const double mass = 0.25 + (rng() % 100) / 25.0;
        CHECK(evaluate(atom_solution(n, y, mass), p) ==
              doctest::Approx(mass * kernel(p.x, p.t, y)).epsilon(1e-15));
    }
}

TEST_CASE("narrow gaussians converge to atoms") {
    WidderSolution sol;
    sol.dimension = 1;
    sol.measure.gaussians.push_back({{0.0}, 1e-3, 1.0});
    const double g = evaluate(sol, {{0.0}, 1.0});
    const double a = evaluate(atom_solution(1, {0.0}), {{0.0}, 1.0});
    CHECK(rel_err(g, a) < 1e-5);
}

TEST_CASE("box density has an arctangent closed form in 1-D") {
    WidderSolution sol;
    sol.dimension = 1;
    sol.measure.boxes.push_back({{0.5}, {1.5}, 2.0});
    const HalfSpacePoint p{{0.3}, 1.2};
    // h/pi * (atan((x - c + w)/t) - atan((x - c - w)/t))
    const double exact =
        2.0 / M_PI * (std::atan((0.3 - 0.5 + 1.5) / 1.2) - std::atan((0.3 - 0.5 - 1.5) / 1.2));
    CHECK(evaluate(sol, p) == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("gaussian density in 2-D keeps unit mass") {
    // wide-time limit: u(0, t) ~ c_n t / (t^2)^{(n+1)/2} * mass for t >> sigma
    WidderSolution sol;
    sol.dimension = 2;
    sol.quadrature.rel_tol = 1e-9;
    sol.measure.gaussians.push_back({{0.0, 0.0}, 0.05, 1.0});
    const HalfSpacePoint p{{0.0, 0.0}, 50.0};
    const double expected = kernel(p.x, p.t, {0.0, 0.0});
    CHECK(rel_err(evaluate(sol, p), expected) < 1e-5);
}

TEST_CASE("delta data at the feet attain the bounds") {
    const GeodesicArc arc = geodesic_through(kA1, kB1);
    const HarnackBounds hb = sharp_bounds(kA1, kB1);

    const HarnackRatio at_top =
        harnack_ratio(atom_solution(1, arc.foot_plus), kA1, kB1);
    CHECK(rel_err(at_top.ratio, hb.upper) < 1e-9);
    CHECK(at_top.ratio == doctest::Approx(2.6180340).epsilon(1e-6));
    CHECK(at_top.contained);

    const HarnackRatio at_bottom =
        harnack_ratio(atom_solution(1, arc.foot_minus), kA1, kB1);
    CHECK(rel_err(at_bottom.ratio, hb.lower) < 1e-9);
    CHECK(at_bottom.ratio == doctest::Approx(0.3819660).epsilon(1e-6));
    CHECK(at_bottom.contained);
}

TEST_CASE("mirror-symmetric data pin the ratio to one") {
    WidderSolution sol;
    sol.dimension = 1;
    sol.measure.atoms.push_back({{-10.0}, 1.0});
    sol.measure.atoms.push_back({{10.0}, 1.0});
    const HarnackRatio hr = harnack_ratio(sol, {{-1.0}, 1.0}, {{1.0}, 1.0});
    CHECK(hr.ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hr.contained);
    CHECK(hr.margin > 0.0);
}

TEST_CASE("sharpness probe on circular configurations") {
    const SharpnessProbe p1 = sharpness_probe(kA1, kB1);
    CHECK(p1.lower_gap <= 1e-9);
    CHECK(p1.upper_gap <= 1e-9);
    CHECK(p1.escape_sequence.empty());

    const SharpnessProbe p2 =
        sharpness_probe({{0.0, 0.0}, 1.0}, {{1.0, 0.0}, 2.0});
    CHECK(p2.lower_gap <= 1e-9);
    CHECK(p2.upper_gap <= 1e-9);
}

TEST_CASE("sharpness probe on the vertical configuration") {
    const SharpnessProbe p = sharpness_probe({{0.0}, 1.0}, {{0.0}, 2.0});
    CHECK(p.lower_gap <= 1e-9);  // the common foot attains the lower bound
    REQUIRE(p.escape_sequence.size() == 6);
    // atoms at |y| = 10^k approach the unattained supremum monotonically
    double prev = 0.0;
    for (const auto& [dist, ratio] : p.escape_sequence) {
        CHECK(ratio > prev);
        CHECK(ratio < 2.0);
        prev = ratio;
    }
    CHECK(std::fabs(p.escape_sequence[2].second - 2.0) < 1e-5);  // |y| = 10^3
}

TEST_CASE("containment holds for random measures") {
    Rng rng(515);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 150; ++i) {
        auto [a, b] = random_pair(
            rng, {.n_max = 2, .coord_lo = -3.0, .coord_hi = 3.0, .t_lo = 0.5, .t_hi = 3.0});
        const int n = a.dim();
        WidderSolution sol;
        sol.dimension = n;
        sol.quadrature.rel_tol = 1e-8;
        const int atoms = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < atoms; ++k)
            sol.measure.atoms.push_back(
                {random_vec(rng, n, -8.0, 8.0), 0.1 + 3.0 * unit(rng)});
        if (unit(rng) < 0.3)
            sol.measure.gaussians.push_back(
                {random_vec(rng, n, -4.0, 4.0), 0.2 + unit(rng), 0.5 + unit(rng)});
        if (unit(rng) < 0.3) {
            Vec hw = random_vec(rng, n, 0.3, 1.5);
            sol.measure.boxes.push_back(
                {random_vec(rng, n, -4.0, 4.0), hw, 0.5 + unit(rng)});
        }
        const HarnackRatio hr = harnack_ratio(sol, a, b);
        CHECK(hr.contained);
    }
}

TEST_CASE("two-atom ratios obey the mediant inequality") {
    Rng rng(606);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        auto [a, b] = random_pair(rng, {.n_max = 3, .coord_lo = -3.0, .coord_hi = 3.0});
        const int n = a.dim();
        const Vec y1 = random_vec(rng, n, -6.0, 6.0);
        const Vec y2 = random_vec(rng, n, -6.0, 6.0);
        const double r1 = harnack_ratio(atom_solution(n, y1), a, b).ratio;
        const double r2 = harnack_ratio(atom_solution(n, y2), a, b).ratio;

        WidderSolution both;
        both.dimension = n;
        both.measure.atoms.push_back({y1, 0.2 + unit(rng)});
        both.measure.atoms.push_back({y2, 0.2 + unit(rng)});
        const double r = harnack_ratio(both, a, b).ratio;
        CHECK(r >= std::min(r1, r2) - 1e-13);
        CHECK(r <= std::max(r1, r2) + 1e-13);
    }
}

TEST_CASE("the ratio is invariant under mass scaling") {
    WidderSolution sol;
    sol.dimension = 1;
    sol.measure.atoms.push_back({{0.5}, 1.0});
    sol.measure.atoms.push_back({{-2.0}, 2.5});
    const double base = harnack_ratio(sol, kA1, kB1).ratio;
    for (double lambda : {1e-3, 7.0, 1e4}) {
        WidderSolution scaled = sol;
        for (auto& atom : scaled.measure.atoms) atom.mass *= lambda;
        CHECK(rel_err(harnack_ratio(scaled, kA1, kB1).ratio, base) < 1e-13);
    }
}

TEST_CASE("validation rejects bad measures") {
    InitialMeasure empty;
    CHECK_THROWS_AS(empty.validate(1), InvalidScenario);

    InitialMeasure bad_mass;
    bad_mass.atoms.push_back({{0.0}, -1.0});
    CHECK_THROWS_AS(bad_mass.validate(1), InvalidScenario);

    InitialMeasure bad_dim;
    bad_dim.atoms.push_back({{0.0, 0.0}, 1.0});
    CHECK_THROWS_AS(bad_dim.validate(1), InvalidScenario);

    InitialMeasure bad_sigma;
    bad_sigma.gaussians.push_back({{0.0}, 0.0, 1.0});
    CHECK_THROWS_AS(bad_sigma.validate(1), InvalidScenario);

    // densities above n = 3 are unsupported
    WidderSolution sol;
    sol.dimension = 4;
    sol.measure.gaussians.push_back({{0.0, 0.0, 0.0, 0.0}, 1.0, 1.0});
    CHECK_THROWS_AS(evaluate(sol, {{0.0, 0.0, 0.0, 0.0}, 1.0}), UnsupportedDimension);
}

TEST_CASE("positivity of evaluated solutions") {
    Rng rng(919);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 3);
        WidderSolution sol;
        sol.dimension = n;
        sol.measure.atoms.push_back({random_vec(rng, n, -50.0, 50.0), 1e-6});
        const HalfSpacePoint p{random_vec(rng, n, -50.0, 50.0), 1e-3 + (rng() % 10)};
        CHECK(evaluate(sol, p) > 0.0);
    }
}

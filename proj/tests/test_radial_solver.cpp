#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supinf/bubble.hpp"
#include "supinf/errors.hpp"
#include "supinf/shooting.hpp"

#include <cmath>
#include <vector>

using namespace supinf;

namespace {

ShootingConfig canonical_config(int n, double u0) {
    ShootingConfig cfg;
    cfg.u0 = u0;
    cfg.r_max = 1.0;
    cfg.step = 1e-4;
    cfg.tolerance = 1e-8;
    cfg.expo = make_exponents(n);
    cfg.curvature = make_constant_curvature(static_cast<double>(n * (n - 2)));
    return cfg;
}

double sup_error_vs_family(const SolutionProfile& p, double lambda) {
    BubbleParams bp;
    bp.lambda = lambda;
    bp.expo = p.expo;
    double worst = 0.0;
    for (std::size_t j = 0; j < p.grid.size(); ++j)
        worst = std::max(worst,
                         std::abs(p.values[j] - bubble_family_eval(bp, p.grid.nodes[j])));
    return worst;
}

} // namespace

TEST_CASE("shooting from the explicit centre value reproduces the explicit solution") {
    for (int n : {3, 4, 5}) {
        const SolutionProfile p = solve_shoot(canonical_config(n, 1.0));
        REQUIRE(p.ball_radius() == 1.0); // no truncation on this domain
        CHECK(sup_error_vs_family(p, 1.0) < 1e-6);
    }
}

TEST_CASE("centre value 2 lands on the rescaled family member") {
    // with the canonical potential, u(0) = s^((n-2)/2) forces the member of
    // scale s; at n = 4 the centre value 2 means scale 2
    const SolutionProfile p = solve_shoot(canonical_config(4, 2.0));
    CHECK(sup_error_vs_family(p, 2.0) < 1e-8);
}

TEST_CASE("march error decays at fourth order in the step") {
    auto err_at = [](double step) {
        ShootingConfig cfg = canonical_config(4, 1.0);
        cfg.step = step;
        return sup_error_vs_family(solve_shoot(cfg), 1.0);
    };
    const double e1 = err_at(4e-3);
    const double e2 = err_at(2e-3);
    const double e3 = err_at(1e-3);
    CHECK(e1 / e2 > 12.0);
    CHECK(e1 / e2 < 20.0);
    CHECK(e2 / e3 > 12.0);
    CHECK(e2 / e3 < 20.0);
}

TEST_CASE("subcritical absorption pulls the profile down") {
    ShootingConfig cfg = canonical_config(4, 1.0);
    const SolutionProfile base = solve_shoot(cfg);
    cfg.include_subcritical = true;
    const SolutionProfile damped = solve_shoot(cfg);
    REQUIRE(base.grid.size() == damped.grid.size());
    CHECK(damped.values.back() < base.values.back());
    for (std::size_t j = 1; j < base.grid.size(); ++j)
        CHECK(damped.values[j] <= base.values[j] + 1e-15);
    CHECK(damped.has_subcritical);
}

TEST_CASE("the march truncates where positivity is lost") {
    ShootingConfig cfg = canonical_config(4, 1.0);
    cfg.r_max = 50.0;
    cfg.step = 0.05;
    cfg.tolerance = 1e-3;
    // the solved profile decays like 1/r^2, crossing 1e-3 near r = 31.6
    const SolutionProfile p = solve_shoot(cfg);
    CHECK(p.ball_radius() < 50.0);
    CHECK(p.ball_radius() > 20.0);
    for (double v : p.values) CHECK(v > cfg.tolerance);
}

TEST_CASE("a domain that fits almost no positive nodes is rejected") {
    ShootingConfig cfg = canonical_config(4, 1e-4);
    cfg.tolerance = 1e-3; // above the centre value: dead on arrival
    CHECK_THROWS_AS(solve_shoot(cfg), DomainError);
}

TEST_CASE("configuration validation") {
    ShootingConfig cfg = canonical_config(4, 1.0);
    cfg.u0 = 0.0;
    CHECK_THROWS_AS(solve_shoot(cfg), ConfigError);
    cfg = canonical_config(4, 1.0);
    cfg.step = cfg.r_max / 10.0; // too coarse
    CHECK_THROWS_AS(solve_shoot(cfg), ConfigError);
    cfg = canonical_config(4, 1.0);
    cfg.tolerance = 1e-2; // too lax
    CHECK_THROWS_AS(solve_shoot(cfg), ConfigError);
    cfg = canonical_config(4, 1.0);
    cfg.expo = Exponents{};
    CHECK_THROWS_AS(solve_shoot(cfg), ConfigError);
}

TEST_CASE("residual of a constant profile equals the nonlinearity exactly") {
    SolutionProfile p;
    p.grid = make_uniform_grid(1.0, 1e-2);
    p.values.assign(p.grid.size(), 1.0);
    p.expo = make_exponents(4);
    p.curvature = make_constant_curvature(8.0);

    CHECK(pde_residual(p) == doctest::Approx(8.0).epsilon(1e-12));
    p.has_subcritical = true;
    CHECK(pde_residual(p) == doctest::Approx(9.0).epsilon(1e-12));

    p.has_subcritical = false;
    p.values.assign(p.grid.size(), 2.0);
    CHECK(pde_residual(p) == doctest::Approx(8.0 * 8.0).epsilon(1e-12)); // 8 * 2^3
}

TEST_CASE("solved profiles have small discrete residuals") {
    ShootingConfig cfg = canonical_config(4, 1.0);
    cfg.step = 1e-3;
    cfg.r_max = 1.0;
    const SolutionProfile p = solve_shoot(cfg);
    CHECK(pde_residual(p) < 1e-4);
}

TEST_CASE("polynomial potential: values, gradient, centre curvature") {
    const CurvatureProfile V = make_polynomial_curvature(8.0, 0.1, 2.0, 1.0);
    CHECK(V.value(0.0) == doctest::Approx(8.0));
    CHECK(V.value(1.0) == doctest::Approx(8.8));
    CHECK(V.gradient(0.5) == doctest::Approx(8.0 * 0.1 * 2.0 * 0.5));
    CHECK(V.second_derivative_at_zero() == doctest::Approx(1.6)); // 2 v0 eps
    CHECK(V.a == doctest::Approx(8.0));
    CHECK(V.b == doctest::Approx(8.8));

    const CurvatureProfile cubic = make_polynomial_curvature(8.0, 0.1, 3.0, 1.0);
    CHECK(cubic.second_derivative_at_zero() == 0.0);
    // decreasing perturbation swaps the declared bounds
    const CurvatureProfile dec = make_polynomial_curvature(8.0, -0.1, 2.0, 1.0);
    CHECK(dec.a == doctest::Approx(7.2));
    CHECK(dec.b == doctest::Approx(8.0));
}

TEST_CASE("sinusoidal potential: values and signed line gradient") {
    const CurvatureProfile V = make_sinusoidal_curvature(8.0, 0.1, 2.0);
    CHECK(V.value(0.0) == doctest::Approx(8.0));
    CHECK(V.gradient(0.0) == doctest::Approx(8.0 * 0.1 * 2.0));
    // the radial gradient flips sign across the centre
    CHECK(V.line_gradient(-0.3) == doctest::Approx(-V.line_gradient(0.3)));
    CHECK(V.line_gradient(0.0) == doctest::Approx(V.gradient(0.0)));
}

TEST_CASE("potential validation rejects out-of-range families") {
    CHECK_THROWS_AS(make_constant_curvature(0.0), ConfigError);
    CHECK_THROWS_AS(make_polynomial_curvature(8.0, 1.5, 2.0, 1.0), ConfigError);
    CHECK_THROWS_AS(make_polynomial_curvature(8.0, 0.1, 0.5, 1.0), ConfigError);
    CHECK_THROWS_AS(make_sinusoidal_curvature(8.0, 0.1, 0.0), ConfigError);
}

TEST_CASE("gradient modulus check accepts honest declarations") {
    const CurvatureProfile V = make_polynomial_curvature(8.0, 0.1, 2.0, 1.0);
    std::vector<double> t_samples;
    for (int t = -10; t <= -1; ++t) t_samples.push_back(t);
    t_samples.push_back(-std::log(2.0));
    const HolderReport rep = holder_bound_check(V, 0.35, V.holder_A, V.alpha, t_samples);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
}

TEST_CASE("gradient modulus check refutes an understated constant") {
    const CurvatureProfile V = make_sinusoidal_curvature(8.0, 0.1, 3.0);
    std::vector<double> t_samples{-3.0, -2.0, -1.0};
    const HolderReport rep = holder_bound_check(V, 0.2, V.holder_A / 10.0, 1.0, t_samples);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
    for (const HolderViolation& v : rep.violations) CHECK(v.measured > v.allowed);
}

TEST_CASE("gradient modulus check rejects samples past the half-ball scale") {
    const CurvatureProfile V = make_constant_curvature(8.0);
    CHECK_THROWS_AS(holder_bound_check(V, 0.0, 0.0, 1.0, {0.0}), DomainError);
    CHECK_THROWS_AS(holder_bound_check(V, -0.1, 0.0, 1.0, {-1.0}), DomainError);
}

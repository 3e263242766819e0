#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supinf/bubble.hpp"
#include "supinf/errors.hpp"
#include "supinf/exponents.hpp"
#include "supinf/interp.hpp"
#include "supinf/profile.hpp"
#include "supinf/region.hpp"

#include <cmath>
#include <vector>

using namespace supinf;

TEST_CASE("exponent tables carry the expected exact values") {
    const Exponents e3 = make_exponents(3);
    CHECK(e3.critical == Rational(5, 1));
    CHECK(e3.subcritical == Rational(3, 1));
    CHECK(e3.half_power == Rational(1, 2));
    CHECK(e3.l_const == Rational(1, 4));

    const Exponents e4 = make_exponents(4);
    CHECK(e4.critical == Rational(3, 1));
    CHECK(e4.subcritical == Rational(2, 1));
    CHECK(e4.half_power == Rational(1, 1));
    CHECK(e4.l_const == Rational(1, 1));

    const Exponents e6 = make_exponents(6);
    CHECK(e6.critical == Rational(2, 1));
    CHECK(e6.subcritical == Rational(3, 2));
    CHECK(e6.half_power == Rational(2, 1));
    CHECK(e6.l_const == Rational(4, 1));
}

TEST_CASE("exponent identities hold exactly in every dimension") {
    for (int n = 3; n <= 12; ++n) {
        const Exponents e = make_exponents(n);
        // the two growth rates differ by exactly 2/(n-2)
        CHECK(e.critical - e.subcritical == Rational(2, n - 2));
        // the zeroth-order constant is the square of the radial weight
        CHECK(e.l_const == e.half_power * e.half_power);
        // and the weight times (critical - 1) is exactly 2
        CHECK(e.half_power * (e.critical - Rational(1, 1)) == Rational(2, 1));
    }
}

TEST_CASE("dimensions below 3 are rejected") {
    CHECK_THROWS_AS(make_exponents(2), DomainError);
    CHECK_THROWS_AS(make_exponents(1), DomainError);
    CHECK_THROWS_AS(make_exponents(-4), DomainError);
}

TEST_CASE("uniform grids land boundary radii on nodes") {
    const RadialGrid g = make_uniform_grid(1.0, 1e-3);
    REQUIRE(g.size() == 1001);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g.uniform_step() == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(g.nodes[500] == 0.5);
}

TEST_CASE("grid factories reject degenerate input") {
    CHECK_THROWS_AS(make_uniform_grid(-1.0, 1e-3), DomainError);
    CHECK_THROWS_AS(make_uniform_grid(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(make_uniform_grid(1e-3, 1e-3), DomainError); // too few nodes
    CHECK_THROWS_AS(make_geometric_grid(0.0, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(make_geometric_grid(0.1, 1.0, 1.0), DomainError);
}

TEST_CASE("uniform_step rejects non-uniform grids") {
    RadialGrid g;
    g.nodes = {0.0, 0.1, 0.2, 0.35, 0.4, 0.5, 0.6, 0.7};
    CHECK_THROWS_AS(g.uniform_step(), DomainError);
}

TEST_CASE("geometric grids stay ordered and capped") {
    const RadialGrid g = make_geometric_grid(1e-3, 1.0, 2.0);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK_NOTHROW(g.validate());
}

TEST_CASE("profile validation catches structural defects") {
    BubbleParams bp;
    bp.expo = make_exponents(4);
    SolutionProfile p = bubble_profile(bp, 1.0, 1e-2);
    CHECK_NOTHROW(p.validate());

    SolutionProfile broken = p;
    broken.values.pop_back();
    CHECK_THROWS_AS(broken.validate(), DomainError);

    broken = p;
    broken.values[3] = 0.0;
    CHECK_THROWS_AS(broken.validate(), DomainError);

    broken = p;
    broken.expo = Exponents{};
    CHECK_THROWS_AS(broken.validate(), DomainError);
}

TEST_CASE("profile evaluation is exact at nodes and rejects points outside") {
    BubbleParams bp;
    bp.expo = make_exponents(4);
    const SolutionProfile p = bubble_profile(bp, 6.0, 1e-3);
    // r = 0.5 is a node; the n = 4 standard profile takes the exact value 0.8
    CHECK(eval_profile(p, 0.5) == 0.8);
    // off-node values agree with the closed form to interpolation order
    CHECK(eval_profile(p, 0.50037) ==
          doctest::Approx(1.0 / (1.0 + 0.50037 * 0.50037)).epsilon(1e-10));
    CHECK_THROWS_AS(eval_profile(p, -1e-9), DomainError);
    CHECK_THROWS_AS(eval_profile(p, 6.0 + 1e-9), DomainError);
}

TEST_CASE("cubic interpolation reproduces cubics and stays exact at nodes") {
    std::vector<double> nodes, linear, cubic;
    for (int j = 0; j <= 10; ++j) {
        const double x = 0.1 * j;
        nodes.push_back(x);
        linear.push_back(3.0 * x + 2.0);
        cubic.push_back(x * x * x - 2.0 * x + 1.0);
    }
    for (double x : {0.05, 0.31, 0.777, 0.999}) {
        CHECK(cubic_interp(nodes, linear, x) == doctest::Approx(3.0 * x + 2.0).epsilon(1e-13));
        CHECK(cubic_interp(nodes, cubic, x) ==
              doctest::Approx(x * x * x - 2.0 * x + 1.0).epsilon(1e-12));
    }
    for (std::size_t j = 0; j < nodes.size(); ++j)
        CHECK(cubic_interp(nodes, cubic, nodes[j]) == cubic[j]);
}

TEST_CASE("window-clamped interpolation suppresses oscillation across jumps") {
    // steeply decaying data: the raw cubic between the 2nd and 3rd node
    // overshoots to a large negative value, which no positive profile attains
    const std::vector<double> nodes{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> values{1048576.0, 0.95, 0.24, 0.107};
    const double raw = cubic_interp(nodes, values, 1.5);
    CHECK(raw < 0.0);
    const double guarded = cubic_interp_within(nodes, values, 1.5);
    CHECK(guarded >= 0.107);
    CHECK(guarded <= 1048576.0);
}

TEST_CASE("region validation") {
    CHECK_NOTHROW(ball(1.0).validate());
    CHECK_NOTHROW(annulus(0.25, 0.5).validate());
    CHECK_THROWS_AS(ball(0.0), DomainError);
    CHECK_THROWS_AS(ball(1.0, -0.5), DomainError);
    CHECK_THROWS_AS(annulus(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(annulus(0.5, 0.5), DomainError);
    CHECK_THROWS_AS(annulus(0.7, 0.5), DomainError);
    RegionSpec bad = ball(1.0);
    bad.inner = 0.1; // a ball with a hole is not a ball
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("radial intervals of centred and off-centre regions") {
    auto iv = ball(1.0).radial_interval();
    CHECK(iv.first == 0.0);
    CHECK(iv.second == 1.0);

    iv = ball(0.5, 2.0).radial_interval();
    CHECK(iv.first == doctest::Approx(1.5));
    CHECK(iv.second == doctest::Approx(2.5));

    iv = annulus(0.25, 0.5).radial_interval();
    CHECK(iv.first == doctest::Approx(0.25));
    CHECK(iv.second == doctest::Approx(0.5));

    // off-centre annulus still reaches radii inside its hole's distance band
    iv = annulus(2.0, 3.0, 0.5).radial_interval();
    CHECK(iv.first == doctest::Approx(1.5));
    CHECK(iv.second == doctest::Approx(3.5));

    // a ball containing the origin covers radius 0
    iv = ball(2.0, 0.5).radial_interval();
    CHECK(iv.first == 0.0);
    CHECK(iv.second == doctest::Approx(2.5));
}

TEST_CASE("extrema over regions: monotone profile endpoints") {
    BubbleParams bp; // decreasing in radius
    bp.expo = make_exponents(4);
    const SolutionProfile p = bubble_profile(bp, 2.0, 1e-3);

    const RegionSpec K = ball(0.5);
    CHECK(extremum_on(p, K, Extremum::Sup) == doctest::Approx(1.0));
    CHECK(extremum_on(p, K, Extremum::Inf) == doctest::Approx(0.8));

    const RegionSpec A = annulus(0.5, 1.0);
    CHECK(extremum_on(p, A, Extremum::Sup) == doctest::Approx(0.8));
    CHECK(extremum_on(p, A, Extremum::Inf) == doctest::Approx(0.5));
}

TEST_CASE("extrema of the concentrated family reproduce the closed product") {
    // lambda = 3, n = 4: sup over K = B(0, 1/2) is u(0) = lambda,
    // inf over Omega = B(0, 1) is u(1) = lambda / (1 + lambda^2)
    BubbleParams bp;
    bp.lambda = 3.0;
    bp.expo = make_exponents(4);
    const SolutionProfile p = bubble_profile(bp, 1.0, 1e-3);
    const double sup = extremum_on(p, ball(0.5), Extremum::Sup);
    const double inf = extremum_on(p, ball(1.0), Extremum::Inf);
    CHECK(sup == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(inf == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(sup * inf == doctest::Approx(0.9).epsilon(1e-11));
}

TEST_CASE("sup is never below inf on nested regions") {
    BubbleParams bp;
    bp.lambda = 2.0;
    bp.expo = make_exponents(5);
    const SolutionProfile p = bubble_profile(bp, 1.5, 1e-3);
    for (double radius : {0.25, 0.5, 1.0, 1.5}) {
        const RegionSpec K = ball(radius);
        CHECK(extremum_on(p, K, Extremum::Sup) >= extremum_on(p, K, Extremum::Inf));
    }
}

TEST_CASE("regions outside the sampled ball are rejected") {
    BubbleParams bp;
    bp.expo = make_exponents(4);
    const SolutionProfile p = bubble_profile(bp, 1.0, 1e-2);
    CHECK_THROWS_AS(extremum_on(p, ball(1.5), Extremum::Sup), DomainError);
    CHECK_THROWS_AS(extremum_on(p, ball(0.5, 0.75), Extremum::Inf), DomainError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supinf/bubble.hpp"
#include "supinf/emden_fowler.hpp"
#include "supinf/errors.hpp"

#include <cmath>
#include <vector>

using namespace supinf;

namespace {

const double kLogHalf = -std::log(2.0);

// cylindrical image of the normalised member: (2 cosh t)^{-(n-2)/2}
double cosh_form(double t, int n) {
    return std::pow(2.0 * std::cosh(t), -0.5 * (n - 2));
}

EFProfile cylindrical_bubble(int n, double t_min, double t_max, double step) {
    EFProfile w;
    const auto m = static_cast<std::size_t>(std::llround((t_max - t_min) / step)) + 1;
    for (std::size_t j = 0; j < m; ++j) {
        const double t = t_min + static_cast<double>(j) * step;
        w.t_nodes.push_back(t);
        w.w_values.push_back(cosh_form(t, n));
    }
    w.origin = 0.0;
    w.origin_value = 1.0;
    w.expo = make_exponents(n);
    w.curvature_id = "constant";
    w.validate();
    return w;
}

EFProfile bubble_window(int n, double t_min, double t_max, std::size_t m) {
    BubbleParams bp;
    bp.expo = make_exponents(n);
    const SolutionProfile p = bubble_profile(bp, 0.6, 1e-4);
    return to_ef(p, 0.0, t_min, t_max, m);
}

} // namespace

TEST_CASE("the transformed normalised member takes the value 2/5 at -log 2") {
    const EFProfile w = bubble_window(4, -5.0, kLogHalf, 4308);
    CHECK(w.t_max() == kLogHalf);
    CHECK(w.w_values.back() == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(w.origin_value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.within_halfball());
}

TEST_CASE("the transformed member matches its hyperbolic closed form") {
    for (int n : {3, 4, 6}) {
        const EFProfile w = bubble_window(n, -4.0, kLogHalf, 2048);
        for (std::size_t j = 0; j < w.t_nodes.size(); j += 97)
            CHECK(w.w_values[j] == doctest::Approx(cosh_form(w.t_nodes[j], n)).epsilon(1e-10));
    }
}

TEST_CASE("a constant radial profile transforms to a pure exponential") {
    SolutionProfile p;
    p.grid = make_uniform_grid(1.0, 1e-3);
    p.values.assign(p.grid.size(), 3.0);
    p.expo = make_exponents(5);
    p.curvature = make_constant_curvature(1.0);
    const EFProfile w = to_ef(p, 0.25, -6.0, kLogHalf, 1024);
    for (std::size_t j = 0; j < w.t_nodes.size(); j += 111)
        CHECK(w.w_values[j] ==
              doctest::Approx(3.0 * std::exp(1.5 * w.t_nodes[j])).epsilon(1e-12));
    CHECK(w.origin == 0.25);
    CHECK(w.origin_value == doctest::Approx(3.0));
}

TEST_CASE("the inverse transform restores the radial profile") {
    BubbleParams bp;
    bp.expo = make_exponents(4);
    const SolutionProfile p = bubble_profile(bp, 0.6, 1e-4);
    const EFProfile w = to_ef(p, 0.0, -5.0, kLogHalf, 2048);
    const SolutionProfile back = from_ef(w, make_constant_curvature(8.0));
    REQUIRE(back.grid.size() == w.t_nodes.size());
    CHECK(back.grid.policy == StepPolicy::Custom);
    CHECK(back.grid.front() == doctest::Approx(std::exp(-5.0)).epsilon(1e-14));
    for (std::size_t j = 0; j < back.grid.size(); j += 53) {
        const double r = back.grid.nodes[j];
        CHECK(back.values[j] == doctest::Approx(1.0 / (1.0 + r * r)).epsilon(1e-12));
    }
    CHECK(back.curvature.v0 == 8.0);
    // the one-argument form keeps only the coefficient label
    CHECK(from_ef(w).curvature.id == "constant");
}

TEST_CASE("grid spacing and window flags") {
    const EFProfile w = bubble_window(4, -5.0, kLogHalf, 4308);
    CHECK(w.spacing() == doctest::Approx((kLogHalf + 5.0) / 4307.0).epsilon(1e-12));
    const EFProfile wide = cylindrical_bubble(4, -3.0, 0.0, 1e-2);
    CHECK_FALSE(wide.within_halfball());
}

TEST_CASE("transform window validation") {
    BubbleParams bp;
    bp.expo = make_exponents(4);
    const SolutionProfile p = bubble_profile(bp, 0.6, 1e-4);
    CHECK_THROWS_AS(to_ef(p, 0.0, -5.0, -0.2, 1024), DomainError);  // past -log 2
    CHECK_THROWS_AS(to_ef(p, 0.0, -0.7, -0.71, 1024), DomainError); // inverted
    CHECK_THROWS_AS(to_ef(p, 0.0, -5.0, kLogHalf, 5), DomainError); // too few nodes
    CHECK_THROWS_AS(to_ef(p, 0.2, -5.0, kLogHalf, 1024), DomainError); // reach > ball
    CHECK_THROWS_AS(to_ef(p, -0.1, -5.0, kLogHalf, 1024), DomainError);
}

TEST_CASE("profile validation catches broken cylindrical data") {
    EFProfile w = cylindrical_bubble(4, -3.0, -1.0, 1e-2);
    CHECK_NOTHROW(w.validate());
    EFProfile bad = w;
    bad.w_values[5] = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = w;
    bad.t_nodes[7] = bad.t_nodes[6]; // not increasing
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = w;
    bad.t_nodes[7] += 3e-3; // increasing but non-uniform
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("exponential kernel fields are annihilated on far windows") {
    // e^{(n-2)t/2} lies in the kernel of d^2/dt^2 - (n-2)^2/4; sample far
    // enough out that the discretisation error of the second difference
    // (~ h^2/12 times the field) is far below the field scale
    for (int n : {4, 5}) {
        const double a = 0.5 * (n - 2);
        const double t_hi = -std::log(2000.0) / a;
        const double h = 2e-4;
        std::vector<double> t, v;
        for (int j = 0; j <= 10000; ++j) {
            t.push_back(t_hi - 2.0 + j * h);
            v.push_back(std::exp(a * t.back()));
        }
        const SampledField Lv = apply_L(t, v, make_exponents(n));
        for (double x : Lv.v) CHECK(std::abs(x) < 1e-10);
    }
}

TEST_CASE("in dimension 4 the plain exponential is also in the kernel") {
    const double t_hi = -std::log(2000.0);
    const double h = 2e-4;
    std::vector<double> t, v;
    for (int j = 0; j <= 10000; ++j) {
        t.push_back(t_hi - 2.0 + j * h);
        v.push_back(std::exp(t.back()));
    }
    const SampledField Lv = apply_L(t, v, make_exponents(4));
    for (double x : Lv.v) CHECK(std::abs(x) < 1e-10);
    // in dimension 5 the same field is not annihilated
    const SampledField Lv5 = apply_L(t, v, make_exponents(5));
    double worst = 0.0;
    for (double x : Lv5.v) worst = std::max(worst, std::abs(x));
    CHECK(worst > 1e-7);
}

TEST_CASE("operator stencil interface") {
    std::vector<double> t{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    std::vector<double> v(7, 1.0);
    CHECK_THROWS_AS(apply_L(t, v, make_exponents(4)), DomainError); // < 8 nodes
    t.push_back(0.75);                                              // non-uniform
    v.push_back(1.0);
    CHECK_THROWS_AS(apply_L(t, v, make_exponents(4)), DomainError);
    t.back() = 0.7;
    const SampledField Lv = apply_L(t, v, make_exponents(4));
    REQUIRE(Lv.t.size() == 6);
    CHECK(Lv.t.front() == doctest::Approx(0.1));
    CHECK(Lv.t.back() == doctest::Approx(0.6));
    // constant field: second difference 0, so L v = -l_const
    for (double x : Lv.v) CHECK(x == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("the transformed equation balances for the normalised member") {
    const EFProfile w = bubble_window(4, -5.0, kLogHalf, 4308);
    CHECK(ef_residual(w, make_constant_curvature(8.0), false) < 1e-6);
}

TEST_CASE("a wrong constant potential leaves the cube of the peak as residual") {
    // on a window reaching t = 0 the transformed member peaks at 1/2, so
    // claiming potential 9 instead of 8 leaves max |w^3| = 1/8
    const EFProfile w = cylindrical_bubble(4, -3.0, 0.0, 1e-3);
    const double res = ef_residual(w, make_constant_curvature(9.0), false);
    CHECK(res == doctest::Approx(0.125).epsilon(1e-3));
}

TEST_CASE("shifted field subtracts half the shift times the exponential") {
    const EFProfile w = bubble_window(4, -5.0, kLogHalf, 4308);
    const SampledField s = shift_profile(w, 1.0);
    REQUIRE(s.t.size() == w.t_nodes.size());
    // at t = -log 2: w = 2/5 and (m/2) e^t = 1/4
    CHECK(s.v.back() == doctest::Approx(0.15).epsilon(1e-11));
    CHECK(s.t.back() == w.t_max());
}

TEST_CASE("the shift does not change operator images in dimension 4") {
    const double t_hi = -5.6;
    const double h = 2e-4;
    EFProfile w;
    for (int j = 0; j <= 5000; ++j) {
        w.t_nodes.push_back(t_hi - 1.0 + j * h);
        w.w_values.push_back(cosh_form(w.t_nodes.back(), 4));
    }
    w.origin = 0.0;
    w.origin_value = 1.0;
    w.expo = make_exponents(4);
    const SampledField base = apply_L(w);
    const SampledField shifted = shift_profile(w, 0.1);
    const SampledField after = apply_L(shifted.t, shifted.v, w.expo);
    REQUIRE(base.v.size() == after.v.size());
    for (std::size_t j = 0; j < base.v.size(); ++j)
        CHECK(std::abs(after.v[j] - base.v[j]) < 1e-10);
}

TEST_CASE("the shifted field is a four-dimensional construction") {
    const EFProfile w5 = cylindrical_bubble(5, -4.0, -1.0, 1e-2);
    CHECK_THROWS_AS(shift_profile(w5, 0.1), DomainError);
    const EFProfile w4 = cylindrical_bubble(4, -4.0, -1.0, 1e-2);
    CHECK_THROWS_AS(shift_profile(w4, 0.0), DomainError);
    CHECK_THROWS_AS(shift_profile(w4, -0.1), DomainError);
}

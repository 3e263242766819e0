#include "supinf/region.hpp"

#include "supinf/interp.hpp"

#include <algorithm>
#include <cmath>

namespace supinf {

void RegionSpec::validate() const {
    if (center < 0.0) throw DomainError("region center distance must be >= 0");
    if (!(outer > 0.0)) throw DomainError("region outer radius must be positive");
    if (kind == RegionKind::Ball) {
        if (inner != 0.0) throw DomainError("a ball has inner radius 0");
    } else {
        if (!(inner > 0.0 && inner < outer)) throw DomainError("annulus needs 0 < inner < outer");
    }
}

std::pair<double, double> RegionSpec::radial_interval() const {
    validate();
    const double lo = std::max({0.0, center - outer, inner - center});
    const double hi = center + outer;
    if (lo > hi) throw DomainError("region covers no radii");
    return {lo, hi};
}

RegionSpec ball(double radius, double center) {
    RegionSpec r;
    r.kind = RegionKind::Ball;
    r.center = center;
    r.inner = 0.0;
    r.outer = radius;
    r.validate();
    return r;
}

RegionSpec annulus(double inner, double outer, double center) {
    RegionSpec r;
    r.kind = RegionKind::Annulus;
    r.center = center;
    r.inner = inner;
    r.outer = outer;
    r.validate();
    return r;
}

double extremum_on(const SolutionProfile& p, const RegionSpec& region, Extremum which) {
    p.validate();
    auto [lo, hi] = region.radial_interval();
    if (hi > p.ball_radius() * (1.0 + 1e-12) + 1e-300)
        throw DomainError("region reaches outside the profile's ball");
    hi = std::min(hi, p.grid.back());
    lo = std::max(lo, p.grid.front());
    if (lo > hi) throw DomainError("region does not meet the profile's grid");

    // candidate radii: interval ends and contained nodes...
    std::vector<double> base;
    base.push_back(lo);
    for (double r : p.grid.nodes) {
        if (r > lo && r < hi) base.push_back(r);
    }
    if (hi > lo) base.push_back(hi);

    double best = eval_profile(p, base.front());
    for (std::size_t j = 1; j < base.size(); ++j) {
        const double v = eval_profile(p, base[j]);
        if (which == Extremum::Sup ? v > best : v < best) best = v;
    }
    // ...refined by window-clamped interpolant values at the midpoints
    for (std::size_t j = 0; j + 1 < base.size(); ++j) {
        const double v =
            cubic_interp_within(p.grid.nodes, p.values, 0.5 * (base[j] + base[j + 1]));
        if (which == Extremum::Sup ? v > best : v < best) best = v;
    }
    return best;
}

} // namespace supinf

#pragma once

#include "supinf/profile.hpp"

namespace supinf {

enum class RegionKind { Ball, Annulus };
enum class Extremum { Sup, Inf };

/// A ball or annulus whose center may sit off the origin. For radial profiles
/// only the distance of the center to the origin matters: the region meets
/// the sphere of radius r exactly when  |r - center| <= outer  and
/// r + center >= inner,  which reduces every extremum over the region to an
/// extremum over an interval of radii.
struct RegionSpec {
    RegionKind kind = RegionKind::Ball;
    double center = 0.0; // distance of the region's center to the origin
    double inner = 0.0;  // 0 for balls
    double outer = 0.0;

    void validate() const;

    /// [lo, hi] of radii the region covers. Throws DomainError when empty
    /// (an annulus whose hole swallows the origin-side radii completely).
    std::pair<double, double> radial_interval() const;
};

RegionSpec ball(double radius, double center = 0.0);
RegionSpec annulus(double inner, double outer, double center = 0.0);

/// Extremum of the profile over region: candidates are the grid nodes inside
/// the region's radial interval, the interval endpoints (interpolated), and
/// the interpolant's value at every midpoint between consecutive candidates.
/// Midpoint values are window-clamped (cubic_interp_within), so the estimate
/// is resolution-limited: it refines smooth sub-grid extrema but never trusts
/// interpolant oscillation across an under-resolved jump. The region must lie
/// inside the profile's ball.
double extremum_on(const SolutionProfile& p, const RegionSpec& region, Extremum which);

} // namespace supinf

#pragma once

#include <vector>

#include "supinf/curvature.hpp"
#include "supinf/exponents.hpp"

namespace supinf {

enum class StepPolicy { Uniform, Geometric, Custom };

/// Strictly increasing radii. Factory grids (the ones integrators and
/// samplers produce) start at r = 0; transform-image grids may not contain
/// the origin, and evaluation never extrapolates past either end.
struct RadialGrid {
    std::vector<double> nodes;
    StepPolicy policy = StepPolicy::Custom;

    std::size_t size() const { return nodes.size(); }
    double front() const { return nodes.front(); }
    double back() const { return nodes.back(); }

    /// Uniform spacing, or throws if the grid is not uniform to ~1e-12.
    double uniform_step() const;

    void validate() const;
};

/// Uniform grid {0, step, 2 step, ..., r_max}, last node pinned to exactly
/// r_max so region boundaries given as round numbers land on a node.
RadialGrid make_uniform_grid(double r_max, double step);

/// {0, r_first, r_first*factor, ...} capped at r_max - dense near the origin
/// for blow-up studies.
RadialGrid make_geometric_grid(double r_first, double r_max, double factor);

/// A positive radial function sampled on a grid, together with the equation
/// data it is supposed to satisfy: -Laplace(u) = V(r) u^critical
/// (+ u^subcritical when has_subcritical).
struct SolutionProfile {
    RadialGrid grid;
    std::vector<double> values;
    Exponents expo;
    bool has_subcritical = false;
    CurvatureProfile curvature;

    double ball_radius() const { return grid.back(); }

    void validate() const;
};

/// Value at radius r by cubic interpolation; exact at grid nodes. Throws
/// DomainError outside [grid.front(), grid.back()].
double eval_profile(const SolutionProfile& p, double r);

} // namespace supinf

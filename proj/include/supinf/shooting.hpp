#pragma once

#include "supinf/curvature.hpp"
#include "supinf/exponents.hpp"
#include "supinf/profile.hpp"

namespace supinf {

// Radial initial-value solve for
//
//   u'' + (n-1)/r u' + V(r) u^p + [subcritical] u^q = 0,   u(0) = u0, u'(0) = 0,
//
// with p the critical exponent and q the subcritical one.  Integration starts
// from a fourth-order series expansion at the first grid node and continues
// with a classical fourth-order Runge-Kutta march on the pair (u, u').
struct ShootingConfig {
    double u0 = 1.0;               // centre value, > 0
    double r_max = 1.0;            // requested domain radius
    double step = 1e-3;            // uniform step, <= r_max / 100
    double tolerance = 1e-8;       // positivity cut-off, in (0, 1e-3]
    bool include_subcritical = false;
    Exponents expo;
    CurvatureProfile curvature;

    void validate() const;
};

// Integrate the ODE on a uniform grid.  The march stops early when the value
// falls to or below the tolerance; the returned profile is truncated at the
// last node with u > tolerance.  A non-finite state raises SolverError; a
// truncation so early that fewer than eight nodes survive raises DomainError
// (the requested domain does not fit a positive solution).
SolutionProfile solve_shoot(const ShootingConfig& cfg);

// Max absolute discrete elliptic residual of a profile over the evaluable
// stencil nodes: radial Laplacian plus V(r) u^p (plus u^q when the profile
// carries the subcritical term).
double pde_residual(const SolutionProfile& p);

} // namespace supinf

#pragma once

#include "supinf/exponents.hpp"
#include "supinf/profile.hpp"

namespace supinf {

// One-parameter family of explicit entire solutions, scaled and optionally
// re-centred along the radial axis.  With the canonical constant potential
// n(n-2) the member with scale lambda is
//
//     u_lambda(r) = lambda^((n-2)/2) * (1 + lambda^2 (r - c0)^2)^(-(n-2)/2),
//
// evaluated here as a one-dimensional radial section: off-centre members use
// the distance |r - c0| along the axis through the origin and the centre.
struct BubbleParams {
    double lambda = 1.0;        // concentration scale, > 0
    double center_offset = 0.0; // c0 >= 0, distance of the peak from the origin
    Exponents expo;

    void validate() const;
};

// Normalised profile shape g(y) = (1 + y^2)^(-(n-2)/2); peak value 1 at y = 0.
double bubble_eval(double y, int n);

// Full family member at radius r.
double bubble_family_eval(const BubbleParams& p, double r);

// Discrete elliptic residual of the family member on a uniform radial grid
// covering [0, r_max]: applies the radial second-difference field to the
// sampled member, adds n(n-2) * u^((n+2)/(n-2)), takes the max absolute value
// over the evaluable nodes, and divides by lambda^((n+2)/2) so members of
// every scale are measured against their own amplitude (the divisor is 1 at
// lambda = 1).  Only origin-centred members are accepted.
double bubble_pde_residual(const BubbleParams& p, double r_max, double step);

// Sampled member as a SolutionProfile on a uniform grid over [0, r_max],
// carrying the canonical constant potential n(n-2) and no subcritical term.
SolutionProfile bubble_profile(const BubbleParams& p, double r_max, double step);

} // namespace supinf

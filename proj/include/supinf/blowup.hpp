#pragma once

#include "supinf/emden_fowler.hpp"
#include "supinf/profile.hpp"

#include <vector>

namespace supinf {

/// Per-member diagnostics of the concentration analysis. With c the member's
/// centre value u(0):
///   y      selected concentration radius (argmax of the weighted profile)
///   l      distance budget R - y
///   L      rescaled-domain radius  l * u(y)^{2/(n-2)} / c^{1/(2(n-2))}
///   delta  c^{-1/(2(n-2))}
///   beta   (1/(1-delta))^{(n-2)/2}, the sup bound on the rescaled profile
///          (+inf when delta >= 1; the bound 2^{(n-2)/2} applies in the
///          concentrated regime delta <= 1/2, reported via beta_in_range)
///   bubble_distance  sup |v - standard profile| over the rescaled nodes in
///                    [0, R_tilde]
struct BlowupDiagnostics {
    double u0 = 0.0; // centre value of the member, the family parameter
    double y = 0.0;
    double l = 0.0;
    double L = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double bubble_distance = 0.0;
    double R_tilde = 0.0;
    bool beta_in_range = false; // delta <= 1/2, regime where beta <= 2^{(n-2)/2}
};

struct BlowupReport {
    std::vector<BlowupDiagnostics> rows;
    bool distances_decreasing = false;
};

/// Weighted profile s(r) = (R - r)^{(n-2)/2} u(r) at grid nodes r < R, with
/// the vanishing endpoint (R, 0) appended. Requires R <= ball radius.
SampledField concentration_function(const SolutionProfile& p, double R);

struct BlowupSelection {
    double y = 0.0;
    double l = 0.0;
    double u_at_y = 0.0;
};

/// Argmax of s (smallest radius on ties) restricted to grid nodes of p, with
/// l = R - y and the profile value there. The selected maximum always
/// dominates s(0).
BlowupSelection select_blowup_point(const SampledField& s, const SolutionProfile& p, double R);

/// Zoom in at a grid node y: v(z) = u(y + z u(y)^{-2/(n-2)}) / u(y) on the
/// affine image of the grid nodes >= y, so v(0) = 1 exactly and no
/// interpolation enters. Rejects rescaled domains of fewer than 8 nodes.
/// The coefficient field is carried over untransformed (diagnostic only).
SolutionProfile rescale(const SolutionProfile& p, double y);

/// Sup distance of the rescaled profile to the standard shape
/// (1 + z^2)^{-(n-2)/2} over nodes in [0, R_tilde].
double bubble_distance(const SolutionProfile& rescaled, double R_tilde);

/// Full pipeline over a family ordered by increasing centre value. R = 0
/// weighs each member by its own ball radius (families whose domains shrink
/// with the centre value); R > 0 uses that common radius for every member.
BlowupReport blowup_report(const std::vector<SolutionProfile>& family, double R, double R_tilde);

} // namespace supinf

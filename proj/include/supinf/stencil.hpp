#pragma once

#include <cstddef>
#include <vector>

namespace supinf {

// Discrete radial Laplacian  u'' + (n-1)/r * u'  on a uniform grid whose
// first node is r = 0.  Design notes:
//
//  * centre node: the regularised value n * u''(0), with the fourth-order
//    one-sided second-difference (16 u_1 - u_2 - 15 u_0) / (6 h^2), valid for
//    even radial profiles;
//  * first interior node: the fourth-order five-point first derivative with
//    an even extension u_{-1} := u_1 folded in;
//  * remaining interior nodes: three-point second difference plus the
//    five-point fourth-order first difference.
//
// The last two nodes have no full stencil and are not evaluable; the result
// has size m - 2 for an m-node grid.  The overall truncation order is h^2
// (from the second difference); the higher-order first-derivative pieces keep
// the near-axis error from dominating.
std::vector<double> radial_laplacian(const std::vector<double>& u, double h, int n);

// Number of evaluable nodes for an m-node grid (m - 2; throws for m < 8).
std::size_t radial_laplacian_size(std::size_t m);

// Plain three-point second difference on a uniform grid; evaluable on the
// interior nodes only (result size m - 2, aligned with indices 1 .. m-2).
std::vector<double> second_difference(const std::vector<double>& u, double h);

} // namespace supinf

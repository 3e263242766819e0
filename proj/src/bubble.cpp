#include "supinf/bubble.hpp"

#include "supinf/errors.hpp"
#include "supinf/stencil.hpp"

#include <algorithm>
#include <cmath>

namespace supinf {

void BubbleParams::validate() const {
    if (!(lambda > 0.0)) throw DomainError("bubble scale lambda must be positive");
    if (center_offset < 0.0) throw DomainError("bubble center offset must be >= 0");
    if (expo.n < 3) throw DomainError("dimension must be >= 3");
}

double bubble_eval(double y, int n) {
    if (n < 3) throw DomainError("dimension must be >= 3");
    const double a = 0.5 * static_cast<double>(n - 2);
    return std::pow(1.0 + y * y, -a);
}

double bubble_family_eval(const BubbleParams& p, double r) {
    p.validate();
    const double a = 0.5 * static_cast<double>(p.expo.n - 2);
    const double d = r - p.center_offset;
    return std::pow(p.lambda, a) * std::pow(1.0 + p.lambda * p.lambda * d * d, -a);
}

double bubble_pde_residual(const BubbleParams& p, double r_max, double step) {
    p.validate();
    if (p.center_offset != 0.0)
        throw DomainError("residual check is defined for origin-centred members only");
    const RadialGrid grid = make_uniform_grid(r_max, step);
    const int n = p.expo.n;

    std::vector<double> u(grid.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = bubble_family_eval(p, grid.nodes[j]);

    const std::vector<double> lap = radial_laplacian(u, grid.uniform_step(), n);
    const double v0 = static_cast<double>(n * (n - 2));
    const double crit = p.expo.crit();

    double worst = 0.0;
    for (std::size_t j = 0; j < lap.size(); ++j) {
        const double res = lap[j] + v0 * std::pow(u[j], crit);
        worst = std::max(worst, std::abs(res));
    }
    // measure against the member's own amplitude scale
    return worst / std::pow(p.lambda, 0.5 * static_cast<double>(n + 2));
}

SolutionProfile bubble_profile(const BubbleParams& p, double r_max, double step) {
    p.validate();
    SolutionProfile out;
    out.grid = make_uniform_grid(r_max, step);
    out.values.resize(out.grid.size());
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] = bubble_family_eval(p, out.grid.nodes[j]);
    out.expo = p.expo;
    out.has_subcritical = false;
    out.curvature = make_constant_curvature(static_cast<double>(p.expo.n * (p.expo.n - 2)));
    out.validate();
    return out;
}

} // namespace supinf

#include "supinf/shooting.hpp"

#include "supinf/errors.hpp"
#include "supinf/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace supinf {

namespace {

struct Rhs {
    int n;
    double crit;
    double sub;
    bool with_sub;
    const CurvatureProfile* V;

    // nonlinearity; clamped to 0 once positivity is lost so that RK stages
    // stay finite even when a stage dips below zero
    double f(double r, double u) const {
        if (u <= 0.0) return 0.0;
        double val = V->value(r) * std::pow(u, crit);
        if (with_sub) val += std::pow(u, sub);
        return val;
    }

    double dp(double r, double u, double p) const {
        return -(static_cast<double>(n - 1) / r) * p - f(r, u);
    }
};

} // namespace

void ShootingConfig::validate() const {
    if (!(u0 > 0.0)) throw ConfigError("centre value u0 must be positive");
    if (!(r_max > 0.0)) throw ConfigError("domain radius must be positive");
    if (!(step > 0.0) || step > r_max / 100.0)
        throw ConfigError("step must be positive and at most r_max / 100");
    if (!(tolerance > 0.0) || tolerance > 1e-3)
        throw ConfigError("tolerance must lie in (0, 1e-3]");
    if (expo.n < 3) throw ConfigError("dimension must be >= 3");
    curvature.validate();
}

SolutionProfile solve_shoot(const ShootingConfig& cfg) {
    cfg.validate();
    const int n = cfg.expo.n;
    const double crit = cfg.expo.crit();
    const double sub = cfg.expo.sub();
    const double h = cfg.step;
    const Rhs rhs{n, crit, sub, cfg.include_subcritical, &cfg.curvature};

    const RadialGrid grid = make_uniform_grid(cfg.r_max, h);
    std::vector<double> values;
    values.reserve(grid.size());
    values.push_back(cfg.u0);

    // series expansion at the first step:
    //   u(r) = u0 + a r^2 + b3 r^3 + b4 r^4 + O(r^5)
    // obtained by matching the radial Laplacian term-by-term against the
    // Taylor expansion of -V(r) u^p - [sub] u^q around r = 0.
    const double v0 = cfg.curvature.value(0.0);
    const double vp0 = cfg.curvature.gradient(0.0);
    const double vpp0 = cfg.curvature.second_derivative_at_zero();
    const double f0 = v0 * std::pow(cfg.u0, crit) +
                      (cfg.include_subcritical ? std::pow(cfg.u0, sub) : 0.0);
    const double fu0 = v0 * crit * std::pow(cfg.u0, crit - 1.0) +
                       (cfg.include_subcritical ? sub * std::pow(cfg.u0, sub - 1.0) : 0.0);
    const double a = -f0 / (2.0 * n);
    const double b3 = -vp0 * std::pow(cfg.u0, crit) / (3.0 * (n + 1));
    const double b4 = -(fu0 * a + 0.5 * vpp0 * std::pow(cfg.u0, crit)) / (4.0 * (n + 2));

    double u = cfg.u0 + a * h * h + b3 * h * h * h + b4 * h * h * h * h;
    double p = 2.0 * a * h + 3.0 * b3 * h * h + 4.0 * b4 * h * h * h;

    bool truncated = false;
    for (std::size_t j = 1; j < grid.size(); ++j) {
        if (!std::isfinite(u) || !std::isfinite(p) || std::abs(u) > 1e12)
            throw SolverError("radial march left the finite range near r = " +
                              std::to_string(grid.nodes[j]));
        if (u <= cfg.tolerance) {
            truncated = true;
            break;
        }
        values.push_back(u);
        if (j + 1 == grid.size()) break;

        const double r = grid.nodes[j];
        // classical RK4 on (u, p)
        const double k1u = p;
        const double k1p = rhs.dp(r, u, p);
        const double k2u = p + 0.5 * h * k1p;
        const double k2p = rhs.dp(r + 0.5 * h, u + 0.5 * h * k1u, p + 0.5 * h * k1p);
        const double k3u = p + 0.5 * h * k2p;
        const double k3p = rhs.dp(r + 0.5 * h, u + 0.5 * h * k2u, p + 0.5 * h * k2p);
        const double k4u = p + h * k3p;
        const double k4p = rhs.dp(r + h, u + h * k3u, p + h * k3p);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }

    if (values.size() < 8)
        throw DomainError("positive solution exists on fewer than eight grid nodes; "
                          "shrink the requested domain");

    SolutionProfile out;
    if (truncated || values.size() < grid.size()) {
        const double end = static_cast<double>(values.size() - 1) * h;
        out.grid = make_uniform_grid(end, h);
    } else {
        out.grid = grid;
    }
    out.values = std::move(values);
    out.expo = cfg.expo;
    out.has_subcritical = cfg.include_subcritical;
    out.curvature = cfg.curvature;
    out.validate();
    return out;
}

double pde_residual(const SolutionProfile& p) {
    p.validate();
    const double h = p.grid.uniform_step();
    const std::vector<double> lap = radial_laplacian(p.values, h, p.expo.n);
    const double crit = p.expo.crit();
    const double sub = p.expo.sub();
    double worst = 0.0;
    for (std::size_t j = 0; j < lap.size(); ++j) {
        double res = lap[j] + p.curvature.value(p.grid.nodes[j]) * std::pow(p.values[j], crit);
        if (p.has_subcritical) res += std::pow(p.values[j], sub);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

} // namespace supinf

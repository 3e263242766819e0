#include "supinf/profile.hpp"

#include <cmath>
#include <string>

#include "supinf/interp.hpp"

namespace supinf {

namespace {
constexpr std::size_t kMinNodes = 8;
}

double RadialGrid::uniform_step() const {
    validate();
    const double h = nodes[1] - nodes[0];
    for (std::size_t j = 1; j + 1 < nodes.size(); ++j) {
        const double hj = nodes[j + 1] - nodes[j];
        if (std::fabs(hj - h) > 1e-12 * (1.0 + std::fabs(h)))
            throw DomainError("grid is not uniformly spaced");
    }
    return h;
}

void RadialGrid::validate() const {
    if (nodes.size() < kMinNodes)
        throw DomainError("grid needs at least " + std::to_string(kMinNodes) + " nodes, got " +
                          std::to_string(nodes.size()));
    if (nodes.front() < 0.0) throw DomainError("grid radii must be >= 0");
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
        if (!(nodes[j] < nodes[j + 1])) throw DomainError("grid radii must be strictly increasing");
    }
}

RadialGrid make_uniform_grid(double r_max, double step) {
    if (!(r_max > 0.0) || !(step > 0.0)) throw DomainError("grid needs positive extent and step");
    const auto m = static_cast<std::size_t>(std::llround(r_max / step));
    if (m + 1 < kMinNodes) throw DomainError("grid needs at least 8 nodes; shrink the step");
    RadialGrid g;
    g.policy = StepPolicy::Uniform;
    g.nodes.resize(m + 1);
    for (std::size_t j = 0; j < m; ++j) g.nodes[j] = static_cast<double>(j) * step;
    g.nodes[m] = r_max;
    g.validate();
    return g;
}

RadialGrid make_geometric_grid(double r_first, double r_max, double factor) {
    if (!(r_first > 0.0) || !(r_max > r_first)) throw DomainError("geometric grid needs 0 < r_first < r_max");
    if (!(factor > 1.0)) throw DomainError("geometric grid needs factor > 1");
    RadialGrid g;
    g.policy = StepPolicy::Geometric;
    g.nodes.push_back(0.0);
    double r = r_first;
    while (r < r_max) {
        g.nodes.push_back(r);
        r *= factor;
    }
    g.nodes.push_back(r_max);
    g.validate();
    return g;
}

void SolutionProfile::validate() const {
    grid.validate();
    if (values.size() != grid.size()) throw DomainError("profile values/grid size mismatch");
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("profile values must be positive and finite");
    }
    if (expo.n < 3) throw DomainError("profile carries no valid exponent table");
}

double eval_profile(const SolutionProfile& p, double r) {
    if (r < p.grid.front() || r > p.grid.back())
        throw DomainError("eval_profile: radius " + std::to_string(r) + " outside [" +
                          std::to_string(p.grid.front()) + ", " + std::to_string(p.grid.back()) + "]");
    return cubic_interp(p.grid.nodes, p.values, r);
}

} // namespace supinf

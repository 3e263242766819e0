#include "supinf/blowup.hpp"

#include "supinf/bubble.hpp"
#include "supinf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace supinf {

SampledField concentration_function(const SolutionProfile& p, double R) {
    p.validate();
    if (!(R > 0.0) || R > p.ball_radius() * (1.0 + 1e-12))
        throw DomainError("weight radius R must lie in (0, ball radius]");
    const double a = p.expo.half();
    SampledField s;
    for (std::size_t j = 0; j < p.grid.size(); ++j) {
        const double r = p.grid.nodes[j];
        if (r >= R) break;
        s.t.push_back(r);
        s.v.push_back(std::pow(R - r, a) * p.values[j]);
    }
    s.t.push_back(R);
    s.v.push_back(0.0);
    return s;
}

BlowupSelection select_blowup_point(const SampledField& s, const SolutionProfile& p, double R) {
    if (s.t.size() < 2 || s.t.size() != s.v.size())
        throw DomainError("weighted profile is empty or mismatched");
    std::size_t best = 0;
    for (std::size_t j = 1; j < s.v.size(); ++j) {
        if (s.v[j] > s.v[best]) best = j; // ties keep the smaller radius
    }
    BlowupSelection sel;
    sel.y = s.t[best];
    sel.l = R - sel.y;
    sel.u_at_y = eval_profile(p, sel.y);
    if (s.v[best] + 1e-12 * (1.0 + s.v[best]) < s.v.front())
        throw SolverError("weighted maximum fell below its centre value");
    return sel;
}

SolutionProfile rescale(const SolutionProfile& p, double y) {
    p.validate();
    const double h = p.grid.uniform_step();
    // y must be a grid node: the zoomed grid is the affine image of the
    // node set at and beyond y, which keeps v(0) = 1 free of interpolation
    const double pos = (y - p.grid.front()) / h;
    const auto j0 = static_cast<std::size_t>(std::llround(pos));
    if (j0 >= p.grid.size() || std::abs(pos - static_cast<double>(j0)) > 1e-9)
        throw DomainError("zoom centre must be a grid node");
    const double uy = p.values[j0];
    if (!(uy > 0.0)) throw DomainError("zoom centre value must be positive");

    const std::size_t count = p.grid.size() - j0;
    if (count < 8) throw DomainError("zoomed domain has fewer than 8 nodes");

    const double scale = std::pow(uy, 2.0 / (p.expo.n - 2));
    const double step_z = h * scale;

    SolutionProfile out;
    out.grid = make_uniform_grid(static_cast<double>(count - 1) * step_z, step_z);
    out.values.resize(count);
    out.values[0] = 1.0;
    for (std::size_t j = 1; j < count; ++j) out.values[j] = p.values[j0 + j] / uy;
    out.expo = p.expo;
    out.has_subcritical = p.has_subcritical;
    out.curvature = p.curvature;
    out.validate();
    return out;
}

double bubble_distance(const SolutionProfile& rescaled, double R_tilde) {
    rescaled.validate();
    if (!(R_tilde > 0.0)) throw DomainError("comparison radius must be positive");
    double worst = 0.0;
    for (std::size_t j = 0; j < rescaled.grid.size(); ++j) {
        const double z = rescaled.grid.nodes[j];
        if (z > R_tilde) break;
        worst = std::max(worst,
                         std::abs(rescaled.values[j] - bubble_eval(z, rescaled.expo.n)));
    }
    return worst;
}

BlowupReport blowup_report(const std::vector<SolutionProfile>& family, double R, double R_tilde) {
    if (family.empty()) throw DomainError("family must be nonempty");
    BlowupReport report;
    report.rows.reserve(family.size());
    for (const SolutionProfile& p : family) {
        p.validate();
        if (p.grid.front() != 0.0)
            throw DomainError("family members must be sampled from the centre r = 0");
        const double c = p.values.front();
        const double R_member = R > 0.0 ? R : p.ball_radius();
        const SampledField s = concentration_function(p, R_member);
        const BlowupSelection sel = select_blowup_point(s, p, R_member);
        const SolutionProfile v = rescale(p, sel.y);

        BlowupDiagnostics d;
        d.u0 = c;
        d.y = sel.y;
        d.l = sel.l;
        d.delta = std::pow(c, -1.0 / (2.0 * (p.expo.n - 2)));
        d.L = sel.l * std::pow(sel.u_at_y, 2.0 / (p.expo.n - 2)) /
              std::pow(c, 1.0 / (2.0 * (p.expo.n - 2)));
        d.beta = d.delta < 1.0
                     ? std::pow(1.0 / (1.0 - d.delta), p.expo.half())
                     : std::numeric_limits<double>::infinity();
        d.beta_in_range = d.delta <= 0.5;
        d.R_tilde = R_tilde;
        d.bubble_distance = bubble_distance(v, R_tilde);
        report.rows.push_back(d);
    }
    report.distances_decreasing = true;
    for (std::size_t j = 1; j < report.rows.size(); ++j)
        if (report.rows[j].bubble_distance >= report.rows[j - 1].bubble_distance)
            report.distances_decreasing = false;
    return report;
}

} // namespace supinf

#include "supinf/emden_fowler.hpp"

#include "supinf/errors.hpp"
#include "supinf/stencil.hpp"

#include <algorithm>
#include <cmath>

namespace supinf {

namespace {
constexpr double kLogHalf = -0.6931471805599453; // -log 2
}

double EFProfile::spacing() const {
    if (t_nodes.size() < 2) throw DomainError("cylindrical grid needs at least 2 nodes");
    const double h = (t_nodes.back() - t_nodes.front()) / static_cast<double>(t_nodes.size() - 1);
    for (std::size_t j = 1; j < t_nodes.size(); ++j) {
        const double step = t_nodes[j] - t_nodes[j - 1];
        if (std::abs(step - h) > 1e-12 * (1.0 + std::abs(h)))
            throw DomainError("cylindrical grid is not uniformly spaced");
    }
    return h;
}

bool EFProfile::within_halfball() const {
    return t_nodes.back() <= kLogHalf + 1e-12;
}

void EFProfile::validate() const {
    if (t_nodes.size() < 8) throw DomainError("cylindrical profile needs at least 8 nodes");
    if (t_nodes.size() != w_values.size())
        throw DomainError("cylindrical profile has mismatched node and value counts");
    for (std::size_t j = 1; j < t_nodes.size(); ++j)
        if (!(t_nodes[j] > t_nodes[j - 1]))
            throw DomainError("cylindrical grid must be strictly increasing");
    for (double w : w_values)
        if (!(w > 0.0) || !std::isfinite(w))
            throw DomainError("cylindrical profile values must be positive and finite");
    if (origin < 0.0) throw DomainError("cylindrical base radius must be >= 0");
    if (expo.n < 3) throw DomainError("dimension must be >= 3");
    spacing();
}

EFProfile to_ef(const SolutionProfile& p, double origin, double t_min, double t_max,
                std::size_t m_nodes) {
    p.validate();
    if (origin < 0.0) throw DomainError("cylindrical base radius must be >= 0");
    if (!(t_min < t_max)) throw DomainError("cylindrical window needs t_min < t_max");
    if (t_max > kLogHalf + 1e-12)
        throw DomainError("cylindrical window must end at or below -log 2");
    if (m_nodes < 8) throw DomainError("cylindrical profile needs at least 8 nodes");
    const double reach = origin + std::exp(t_max);
    if (reach > p.ball_radius() * (1.0 + 1e-12))
        throw DomainError("cylindrical window reaches outside the profile's ball");

    EFProfile out;
    out.t_nodes.resize(m_nodes);
    out.w_values.resize(m_nodes);
    const double h = (t_max - t_min) / static_cast<double>(m_nodes - 1);
    const double a = p.expo.half();
    for (std::size_t j = 0; j < m_nodes; ++j) {
        const double t = (j + 1 == m_nodes) ? t_max : t_min + static_cast<double>(j) * h;
        out.t_nodes[j] = t;
        out.w_values[j] = std::exp(a * t) * eval_profile(p, origin + std::exp(t));
    }
    out.origin = origin;
    out.origin_value = eval_profile(p, origin);
    out.expo = p.expo;
    out.curvature_id = p.curvature.id;
    out.validate();
    return out;
}

SolutionProfile from_ef(const EFProfile& w, const CurvatureProfile& V) {
    w.validate();
    SolutionProfile out;
    out.grid.nodes.resize(w.t_nodes.size());
    out.grid.policy = StepPolicy::Custom;
    out.values.resize(w.t_nodes.size());
    const double a = w.expo.half();
    for (std::size_t j = 0; j < w.t_nodes.size(); ++j) {
        const double s = std::exp(w.t_nodes[j]);
        out.grid.nodes[j] = w.origin + s;
        out.values[j] = std::pow(s, -a) * w.w_values[j];
    }
    out.expo = w.expo;
    out.has_subcritical = false;
    out.curvature = V;
    out.validate();
    return out;
}

SolutionProfile from_ef(const EFProfile& w) {
    CurvatureProfile placeholder = make_constant_curvature(1.0);
    placeholder.id = w.curvature_id.empty() ? "unset" : w.curvature_id;
    return from_ef(w, placeholder);
}

SampledField apply_L(const std::vector<double>& t, const std::vector<double>& v,
                     const Exponents& expo) {
    if (t.size() != v.size()) throw DomainError("sampled field has mismatched sizes");
    if (t.size() < 8) throw DomainError("operator stencil needs at least 8 nodes");
    const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
    for (std::size_t j = 1; j < t.size(); ++j)
        if (std::abs(t[j] - t[j - 1] - h) > 1e-12 * (1.0 + std::abs(h)))
            throw DomainError("operator stencil needs a uniform grid");

    const std::vector<double> second = second_difference(v, h);
    const double c = expo.lconst();
    SampledField out;
    out.t.assign(t.begin() + 1, t.end() - 1);
    out.v.resize(second.size());
    for (std::size_t j = 0; j < second.size(); ++j) out.v[j] = second[j] - c * v[j + 1];
    return out;
}

SampledField apply_L(const EFProfile& w) {
    w.validate();
    return apply_L(w.t_nodes, w.w_values, w.expo);
}

double ef_residual(const EFProfile& w, const CurvatureProfile& V, bool include_subcritical) {
    w.validate();
    V.validate();
    const SampledField Lw = apply_L(w);
    const double crit = w.expo.crit();
    const double sub = w.expo.sub();
    double worst = 0.0;
    for (std::size_t j = 0; j < Lw.t.size(); ++j) {
        const double t = Lw.t[j];
        const double wv = w.w_values[j + 1];
        double res = -Lw.v[j] - V.value(w.origin + std::exp(t)) * std::pow(wv, crit);
        if (include_subcritical) res -= std::exp(t) * std::pow(wv, sub);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

SampledField shift_profile(const EFProfile& w, double m) {
    w.validate();
    if (w.expo.n != 4)
        throw DomainError("the shifted field is defined for dimension 4 only");
    if (!(m > 0.0)) throw DomainError("shift amount m must be positive");
    SampledField out;
    out.t = w.t_nodes;
    out.v.resize(w.w_values.size());
    for (std::size_t j = 0; j < out.v.size(); ++j)
        out.v[j] = w.w_values[j] - 0.5 * m * std::exp(w.t_nodes[j]);
    return out;
}

} // namespace supinf

#include "supinf/moving_plane.hpp"

#include "supinf/errors.hpp"
#include "supinf/interp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace supinf {

namespace {

constexpr double kStrictTol = 1e-12;
const double kNan = std::numeric_limits<double>::quiet_NaN();

// index of the first grid node whose mirror 2 lambda - t stays at or above
// t_min; throws when the reflection is inadmissible altogether
std::size_t first_reflectable(const std::vector<double>& t, double lambda) {
    const double t_min = t.front();
    const double t_max = t.back();
    const double tol = 1e-9 * (1.0 + std::abs(t_min) + std::abs(t_max));
    if (lambda > t_max + tol)
        throw DomainError("reflection plane " + std::to_string(lambda) +
                          " lies above the grid top " + std::to_string(t_max));
    if (2.0 * lambda - t_max < t_min - tol)
        throw DomainError("reflection at plane " + std::to_string(lambda) +
                          " leaves the grid; the grid would need t_min <= " +
                          std::to_string(2.0 * lambda - t_max));
    const double lowest = 2.0 * lambda - t_max; // node whose mirror is t_max
    auto it = std::lower_bound(t.begin(), t.end(), lowest - tol);
    return static_cast<std::size_t>(it - t.begin());
}

double clamped_interp(const std::vector<double>& t, const std::vector<double>& v, double x) {
    const double lo = t.front();
    const double hi = t.back();
    if (x < lo) x = lo;
    if (x > hi) x = hi;
    return cubic_interp(t, v, x);
}

// indices of grid nodes in the window (lambda, t1]
std::pair<std::size_t, std::size_t> window_nodes(const std::vector<double>& t, double lambda,
                                                 double t1) {
    const double tol = 1e-12 * (1.0 + std::abs(lambda) + std::abs(t1));
    auto lo = std::upper_bound(t.begin(), t.end(), lambda + tol);
    auto hi = std::upper_bound(t.begin(), t.end(), t1 + tol);
    return {static_cast<std::size_t>(lo - t.begin()), static_cast<std::size_t>(hi - t.begin())};
}

} // namespace

SampledField reflect(const std::vector<double>& t, const std::vector<double>& v, double lambda) {
    if (t.size() != v.size() || t.size() < 4)
        throw DomainError("reflection needs at least 4 matching nodes");
    const std::size_t j0 = first_reflectable(t, lambda);
    SampledField out;
    out.t.reserve(t.size() - j0);
    out.v.reserve(t.size() - j0);
    for (std::size_t j = j0; j < t.size(); ++j) {
        out.t.push_back(t[j]);
        out.v.push_back(clamped_interp(t, v, 2.0 * lambda - t[j]));
    }
    return out;
}

SampledField reflect(const EFProfile& w, double lambda) {
    w.validate();
    return reflect(w.t_nodes, w.w_values, lambda);
}

CompareResult compare(const EFProfile& w, double lambda, double t1) {
    w.validate();
    if (!(lambda < t1) || t1 > w.t_max() + 1e-12)
        throw DomainError("comparison window needs lambda < t1 <= t_max");
    const auto [jb, je] = window_nodes(w.t_nodes, lambda, t1);
    if (jb >= je) throw DomainError("comparison window contains no grid nodes");
    const std::size_t j0 = first_reflectable(w.t_nodes, lambda);
    if (j0 > jb)
        throw DomainError("comparison window reflects off the grid; extend the grid downwards");

    CompareResult res;
    res.max_gap = -std::numeric_limits<double>::infinity();
    for (std::size_t j = jb; j < je; ++j) {
        const double gap =
            clamped_interp(w.t_nodes, w.w_values, 2.0 * lambda - w.t_nodes[j]) - w.w_values[j];
        if (gap > res.max_gap) { // strict: ties keep the smallest t
            res.max_gap = gap;
            res.first_contact = w.t_nodes[j];
        }
    }
    return res;
}

ZDecomposition z_decomposition(const EFProfile& w, double xi, const CurvatureProfile& V,
                               bool include_subcritical, double t1) {
    w.validate();
    V.validate();
    const auto [jb, je] = window_nodes(w.t_nodes, xi, t1);
    if (jb >= je) throw DomainError("sign decomposition needs a nonempty window");
    if (first_reflectable(w.t_nodes, xi) > jb)
        throw DomainError("sign decomposition window reflects off the grid");

    const double crit = w.expo.crit();
    const double sub = w.expo.sub();
    ZDecomposition out;
    out.z1.t.reserve(je - jb);
    out.z1.v.reserve(je - jb);
    out.z2.t.reserve(je - jb);
    out.z2.v.reserve(je - jb);
    for (std::size_t j = jb; j < je; ++j) {
        const double t = w.t_nodes[j];
        const double t_ref = 2.0 * xi - t;
        const double wv = w.w_values[j];
        const double wr = clamped_interp(w.t_nodes, w.w_values, t_ref);
        const double vbar = V.value(w.origin + std::exp(t));
        const double vbar_ref = V.value(w.origin + std::exp(t_ref));
        const double z1 = (vbar_ref - vbar) * std::pow(wr, crit) +
                          vbar * (std::pow(wr, crit) - std::pow(wv, crit));
        double z2 = 0.0;
        if (include_subcritical) {
            z2 = std::exp(t_ref) * (std::pow(wr, sub) - std::pow(wv, sub)) +
                 std::pow(wv, sub) * (std::exp(t_ref) - std::exp(t));
        }
        out.z1.t.push_back(t);
        out.z1.v.push_back(z1);
        out.z2.t.push_back(t);
        out.z2.v.push_back(z2);
    }
    return out;
}

namespace {

// measured variation rate of the coefficient across the plane:
// sup over the window of |Vbar(2 lambda - t) - Vbar(t)| / (e^t - e^{2 lambda - t})
double measure_epsilon(const EFProfile& w, double lambda, const CurvatureProfile& V,
                       std::size_t jb, std::size_t je) {
    if (V.family == CurvatureFamily::Constant) return 0.0;
    double eps = 0.0;
    for (std::size_t j = jb; j < je; ++j) {
        const double t = w.t_nodes[j];
        const double t_ref = 2.0 * lambda - t;
        const double denom = std::exp(t) - std::exp(t_ref);
        if (denom <= 0.0) continue;
        const double num =
            std::abs(V.value(w.origin + std::exp(t_ref)) - V.value(w.origin + std::exp(t)));
        eps = std::max(eps, num / denom);
    }
    return eps;
}

// -L_h applied to the gap field (reflected minus straight) over the window
// interior; gap values are supplied on the contiguous node range [j0, m)
double stencil_max_neg_L(const std::vector<double>& t, const std::vector<double>& gap,
                         std::size_t j0, const Exponents& expo, double lambda, double t1) {
    const std::vector<double> sub_t(t.begin() + static_cast<std::ptrdiff_t>(j0), t.end());
    const SampledField L = apply_L(sub_t, gap, expo);
    double worst = -std::numeric_limits<double>::infinity();
    const double tol = 1e-12 * (1.0 + std::abs(lambda) + std::abs(t1));
    for (std::size_t k = 0; k < L.t.size(); ++k) {
        if (L.t[k] > lambda + tol && L.t[k] <= t1 + tol)
            worst = std::max(worst, -L.v[k]);
    }
    if (!std::isfinite(worst))
        throw DomainError("operator window contains no interior nodes");
    return worst;
}

} // namespace

Lemma2Report lemma2_check(const EFProfile& w, double lambda, const CurvatureProfile& V,
                          bool include_subcritical, double t1, double tolerance) {
    (void)include_subcritical; // the sign chain is the same with or without
                               // the lower-order term; kept for CLI symmetry
    w.validate();
    V.validate();
    const CompareResult cmp = compare(w, lambda, t1);
    const auto [jb, je] = window_nodes(w.t_nodes, lambda, t1);

    Lemma2Report rep;
    rep.max_gap = cmp.max_gap;
    rep.applies = cmp.max_gap <= kStrictTol;

    const std::size_t j0 = first_reflectable(w.t_nodes, lambda);
    std::vector<double> gap(w.t_nodes.size() - j0);
    for (std::size_t j = j0; j < w.t_nodes.size(); ++j)
        gap[j - j0] = clamped_interp(w.t_nodes, w.w_values, 2.0 * lambda - w.t_nodes[j]) -
                      w.w_values[j];
    rep.stencil_max = stencil_max_neg_L(w.t_nodes, gap, j0, w.expo, lambda, t1);
    rep.sign_holds = rep.stencil_max <= tolerance;

    rep.epsilon = measure_epsilon(w, lambda, V, jb, je);
    const double p = 2.0 / static_cast<double>(w.expo.n - 2);
    rep.sufficient_max = 0.0;
    for (std::size_t j = jb; j < je; ++j) {
        const double wr =
            clamped_interp(w.t_nodes, w.w_values, 2.0 * lambda - w.t_nodes[j]);
        rep.sufficient_max = std::max(rep.sufficient_max, rep.epsilon * std::pow(wr, p));
    }
    rep.sufficient_holds = rep.sufficient_max <= 1.0 + kStrictTol;
    return rep;
}

LemmaN4Report lemma_n4_check(const EFProfile& w, double lambda, const CurvatureProfile& V,
                             double m, double t1, double tolerance) {
    w.validate();
    V.validate();
    if (w.expo.n != 4) throw DomainError("the shifted comparison chain requires dimension 4");
    if (!(m > 0.0)) throw DomainError("shift amount m must be positive");
    if (!(lambda < t1) || t1 > w.t_max() + 1e-12)
        throw DomainError("comparison window needs lambda < t1 <= t_max");

    const auto [jb, je] = window_nodes(w.t_nodes, lambda, t1);
    if (jb >= je) throw DomainError("comparison window contains no grid nodes");
    const std::size_t j0 = first_reflectable(w.t_nodes, lambda);
    if (j0 > jb)
        throw DomainError("comparison window reflects off the grid; extend the grid downwards");

    LemmaN4Report rep;
    rep.epsilon = measure_epsilon(w, lambda, V, jb, je);
    rep.apriori_bound = 2.0 * std::exp(2.0) * std::sqrt(8.0 / V.a);

    // gap fields on the reflectable range: straight, and with both copies
    // shifted by -(m/2) e^t
    const std::size_t count = w.t_nodes.size() - j0;
    std::vector<double> gap(count), shifted_gap(count);
    for (std::size_t j = j0; j < w.t_nodes.size(); ++j) {
        const double t = w.t_nodes[j];
        const double t_ref = 2.0 * lambda - t;
        const double wr = clamped_interp(w.t_nodes, w.w_values, t_ref);
        gap[j - j0] = wr - w.w_values[j];
        shifted_gap[j - j0] = gap[j - j0] - 0.5 * m * (std::exp(t_ref) - std::exp(t));
    }

    rep.shifted_max_gap = -std::numeric_limits<double>::infinity();
    rep.gap_bound_margin = -std::numeric_limits<double>::infinity();
    rep.cubic_margin = -std::numeric_limits<double>::infinity();
    rep.final_sign_max = -std::numeric_limits<double>::infinity();
    rep.w_reflected_max = 0.0;
    for (std::size_t j = jb; j < je; ++j) {
        const double t = w.t_nodes[j];
        const double t_ref = 2.0 * lambda - t;
        const double wv = w.w_values[j];
        const double wr = gap[j - j0] + wv;
        const double exp_drop = std::exp(t_ref) - std::exp(t); // < 0 on the window

        rep.shifted_max_gap = std::max(rep.shifted_max_gap, shifted_gap[j - j0]);
        rep.gap_bound_margin = std::max(rep.gap_bound_margin, gap[j - j0] - 0.5 * m * exp_drop);
        const double cubic_lhs = wr * wr * wr - wv * wv * wv;
        const double cubic_rhs = 3.0 * (wr - wv) * wr * wr;
        rep.cubic_margin = std::max(rep.cubic_margin, cubic_lhs - cubic_rhs);
        const double vbar = V.value(w.origin + std::exp(t));
        rep.final_sign_max =
            std::max(rep.final_sign_max, (1.5 * m * vbar - rep.epsilon * wr) * exp_drop);
        rep.w_reflected_max = std::max(rep.w_reflected_max, wr);
    }
    rep.applies = rep.shifted_max_gap <= kStrictTol;
    rep.gap_bound_holds = rep.gap_bound_margin <= kStrictTol;
    rep.cubic_holds = rep.cubic_margin <= kStrictTol;
    rep.final_sign_holds = rep.final_sign_max <= kStrictTol;
    rep.apriori_holds = rep.w_reflected_max <= rep.apriori_bound;

    rep.stencil_max = stencil_max_neg_L(w.t_nodes, shifted_gap, j0, w.expo, lambda, t1);
    rep.sign_holds = rep.stencil_max <= tolerance;

    // e^t lies in the kernel of L in dimension 4: the shifted and unshifted
    // operator images should agree to stencil rounding
    const SampledField L_gap = apply_L(
        std::vector<double>(w.t_nodes.begin() + static_cast<std::ptrdiff_t>(j0), w.t_nodes.end()),
        gap, w.expo);
    const SampledField L_shifted = apply_L(
        std::vector<double>(w.t_nodes.begin() + static_cast<std::ptrdiff_t>(j0), w.t_nodes.end()),
        shifted_gap, w.expo);
    rep.kernel_gap = 0.0;
    for (std::size_t k = 0; k < L_gap.v.size(); ++k)
        rep.kernel_gap = std::max(rep.kernel_gap, std::abs(L_gap.v[k] - L_shifted.v[k]));
    return rep;
}

MovingPlaneReport find_xi(const EFProfile& w, double lambda_bar, double t1,
                          const CurvatureProfile& V, bool include_subcritical) {
    w.validate();
    V.validate();
    if (t1 > w.t_max() + 1e-12 || t1 <= w.t_min())
        throw DomainError("window end t1 must lie in (t_min, t_max]");

    const double floor_plane = 0.5 * (w.t_min() + t1);
    const double h = w.spacing();

    auto strictly_separated = [&](double lambda) {
        if (lambda >= t1) return true; // empty window: vacuously separated
        const auto [jb, je] = window_nodes(w.t_nodes, lambda, t1);
        if (jb >= je) return true;
        return compare(w, lambda, t1).max_gap < -kStrictTol;
    };

    double lo = kNan;
    double hi = kNan;
    for (double lambda = lambda_bar; lambda >= floor_plane - 1e-12; lambda -= 0.1) {
        if (strictly_separated(lambda)) {
            lo = lambda;
            break;
        }
        hi = lambda;
    }
    if (std::isnan(lo))
        throw SolverError("no strictly separated plane found scanning [" +
                          std::to_string(floor_plane) + ", " + std::to_string(lambda_bar) +
                          "] from above");
    if (!std::isnan(hi)) {
        while (hi - lo > h) {
            const double mid = 0.5 * (lo + hi);
            if (strictly_separated(mid)) lo = mid;
            else hi = mid;
        }
    }

    MovingPlaneReport rep;
    rep.xi = lo;
    rep.lambda_bar = lambda_bar;
    rep.eta = w.origin_value > 0.0
                  ? std::pow(w.origin_value, -2.0 / static_cast<double>(w.expo.n - 2))
                  : kNan;
    rep.t1 = t1;
    rep.window_vacuous = rep.xi >= t1;

    if (rep.window_vacuous) {
        rep.max_gap = kNan;
        rep.first_contact = kNan;
        rep.z1_max = kNan;
        rep.z2_max = kNan;
        rep.lemma_holds = true; // nothing to compare: the implication is vacuous
        rep.hopf_holds = false;
        return rep;
    }

    const CompareResult cmp = compare(w, rep.xi, t1);
    rep.max_gap = cmp.max_gap;
    rep.first_contact = cmp.first_contact;

    const ZDecomposition zd = z_decomposition(w, rep.xi, V, include_subcritical, t1);
    rep.z1_max = *std::max_element(zd.z1.v.begin(), zd.z1.v.end());
    rep.z2_max = include_subcritical ? *std::max_element(zd.z2.v.begin(), zd.z2.v.end()) : 0.0;

    const Lemma2Report lem = lemma2_check(w, rep.xi, V, include_subcritical, t1);
    rep.lemma_holds = lem.applies && lem.sign_holds;

    const double t_ref = 2.0 * rep.xi - t1;
    if (t_ref >= w.t_min() - 1e-12 && t_ref <= w.t_max() + 1e-12) {
        const double w_t1 = clamped_interp(w.t_nodes, w.w_values, t1);
        const double w_ref = clamped_interp(w.t_nodes, w.w_values, t_ref);
        rep.hopf_holds = w_t1 <= w_ref + kStrictTol;
    } else {
        rep.hopf_holds = false;
    }
    return rep;
}

HopfReport hopf_conclusion_check(const EFProfile& w, double xi, double t1,
                                 const SolutionProfile& profile, const RegionSpec& omega,
                                 double l) {
    w.validate();
    profile.validate();
    if (!(l > 0.0)) throw DomainError("distance budget l must be positive");
    const double t_ref = 2.0 * xi - t1;
    if (t1 > w.t_max() + 1e-12 || t1 < w.t_min() - 1e-12)
        throw DomainError("window end t1 lies outside the grid");
    if (t_ref > w.t_max() + 1e-12 || t_ref < w.t_min() - 1e-12)
        throw DomainError("reflected endpoint 2 xi - t1 lies outside the grid");

    HopfReport rep;
    rep.w_t1 = clamped_interp(w.t_nodes, w.w_values, t1);
    rep.w_reflected = clamped_interp(w.t_nodes, w.w_values, t_ref);
    rep.boundary_holds = rep.w_t1 <= rep.w_reflected + kStrictTol;
    rep.u_at_y = eval_profile(profile, w.origin);
    rep.inf_omega = extremum_on(profile, omega, Extremum::Inf);
    rep.product = std::pow(l, profile.expo.half()) * rep.u_at_y * rep.inf_omega;
    return rep;
}

} // namespace supinf

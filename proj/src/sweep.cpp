#include "supinf/sweep.hpp"

#include "supinf/bubble.hpp"
#include "supinf/errors.hpp"
#include "supinf/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace supinf {

namespace {
const double kNan = std::numeric_limits<double>::quiet_NaN();
}

double SweepConfig::profile_extent() const {
    return r_max > 0.0 ? r_max : Omega.radial_interval().second;
}

void SweepConfig::validate() const {
    if (theorem < 1 || theorem > 4) throw ConfigError("theorem must be 1, 2, 3 or 4");
    if (n < 3) throw ConfigError("dimension must be >= 3");
    if (theorem >= 3) {
        if (n != 4) throw ConfigError("theorems 3 and 4 are four-dimensional statements");
        if (!(m > 0.0)) throw ConfigError("theorems 3 and 4 need an admission threshold m > 0");
    }
    if (parameters.empty()) throw ConfigError("sweep needs at least one family parameter");
    for (double p : parameters)
        if (!(p > 0.0)) throw ConfigError("family parameters must be positive");
    curvature.validate();
    K.validate();
    Omega.validate();

    const auto [klo, khi] = K.radial_interval();
    const auto [olo, ohi] = Omega.radial_interval();
    if (!(khi < ohi) || klo < olo || (olo > 0.0 && klo <= olo))
        throw ConfigError("K must be compactly contained in Omega");

    if (!(step > 0.0)) throw ConfigError("step must be positive");
    if (r_max > 0.0 && r_max < ohi)
        throw ConfigError("profile extent r_max must cover Omega");
    if (family == SweepFamily::Bubble) {
        const double canonical = static_cast<double>(n * (n - 2));
        if (curvature.family != CurvatureFamily::Constant ||
            std::abs(curvature.v0 - canonical) > 1e-12 * canonical)
            throw ConfigError("the bubble family calibrates the constant coefficient n(n-2); "
                              "use the shooting family for other coefficients");
    }
}

namespace {

// analytic product reference: bubble member over origin-centred balls
bool closed_form_applies(const SweepConfig& cfg) {
    return cfg.family == SweepFamily::Bubble && cfg.wants_product() &&
           cfg.K.kind == RegionKind::Ball && cfg.K.center == 0.0 &&
           cfg.Omega.kind == RegionKind::Ball && cfg.Omega.center == 0.0;
}

// sup sits at the bubble peak lambda^{(n-2)/2}; inf at the Omega boundary
double closed_form_product(double lambda, double omega_radius, int n) {
    const double a = 0.5 * static_cast<double>(n - 2);
    const double q = lambda * lambda / (1.0 + lambda * lambda * omega_radius * omega_radius);
    return std::pow(q, a);
}

} // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const Exponents expo = make_exponents(cfg.n);
    const double extent = cfg.profile_extent();
    const bool reference = closed_form_applies(cfg);
    const double omega_radius = cfg.Omega.outer;

    SweepReport report;
    report.rows.reserve(cfg.parameters.size());

    for (double param : cfg.parameters) {
        SweepRow row;
        row.parameter = param;
        row.sup_K = kNan;
        row.inf_Omega = kNan;
        row.value = kNan;
        row.closed_form = kNan;
        try {
            SolutionProfile member;
            if (cfg.family == SweepFamily::Bubble) {
                BubbleParams bp;
                bp.lambda = param;
                bp.center_offset = 0.0;
                bp.expo = expo;
                member = bubble_profile(bp, extent, cfg.step);
            } else {
                ShootingConfig sc;
                sc.u0 = param;
                sc.r_max = extent;
                sc.step = cfg.step;
                sc.tolerance = cfg.shoot_tolerance;
                sc.include_subcritical = cfg.wants_subcritical();
                sc.expo = expo;
                sc.curvature = cfg.curvature;
                member = solve_shoot(sc);
            }
            row.sup_K = extremum_on(member, cfg.K, Extremum::Sup);
            row.inf_Omega = extremum_on(member, cfg.Omega, Extremum::Inf);
            if (cfg.wants_product()) {
                row.value = row.sup_K * row.inf_Omega;
                row.status = "ok";
                if (reference) row.closed_form = closed_form_product(param, omega_radius, cfg.n);
            } else if (row.inf_Omega >= cfg.m) {
                row.value = row.sup_K;
                row.status = "ok";
            } else {
                row.status = "filtered";
            }
        } catch (const SolverError& e) {
            row.status = "skipped";
            row.error = e.what();
        } catch (const DomainError& e) {
            row.status = "skipped";
            row.error = e.what();
        }
        report.rows.push_back(std::move(row));
    }

    report.empirical_c = kNan;
    report.monotone = true;
    report.closed_form_error = kNan;
    double prev = -std::numeric_limits<double>::infinity();
    for (const SweepRow& row : report.rows) {
        if (row.status != "ok") continue;
        if (std::isnan(report.empirical_c) || row.value > report.empirical_c)
            report.empirical_c = row.value;
        if (row.value < prev) report.monotone = false;
        prev = row.value;
        if (!std::isnan(row.closed_form)) {
            const double err = std::abs(row.value - row.closed_form);
            if (std::isnan(report.closed_form_error) || err > report.closed_form_error)
                report.closed_form_error = err;
        }
    }
    return report;
}

AuditReport theorem_hypothesis_audit(const SweepConfig& cfg) {
    cfg.validate();
    AuditReport report;
    const CurvatureProfile& V = cfg.curvature;
    const double reach = cfg.profile_extent();
    const bool check_upper = cfg.theorem == 1 || cfg.theorem == 3;
    report.holder_checked = check_upper;

    // value bounds by sampling at the sweep's own resolution
    const auto samples = static_cast<std::size_t>(std::floor(reach / cfg.step)) + 1;
    for (std::size_t j = 0; j <= samples; ++j) {
        const double r = std::min(static_cast<double>(j) * cfg.step, reach);
        const double v = V.value(r);
        const double tol = 1e-12 * (1.0 + std::abs(v));
        if (v < V.a - tol) report.violations.push_back({"lower-bound", r, v, V.a});
        if (check_upper && v > V.b + tol)
            report.violations.push_back({"upper-bound", r, v, V.b});
        if (r >= reach) break;
    }

    // gradient modulus at a mesh of base points, offsets e^t <= 1/2
    if (check_upper) {
        std::vector<double> t_samples;
        for (int t = -10; t <= -1; ++t) t_samples.push_back(static_cast<double>(t));
        t_samples.push_back(-std::log(2.0));
        const int ys = 33;
        for (int i = 0; i < ys; ++i) {
            const double y = 0.7 * static_cast<double>(i) / (ys - 1);
            const HolderReport h = holder_bound_check(V, y, V.holder_A, V.alpha, t_samples);
            for (const HolderViolation& viol : h.violations)
                report.violations.push_back({"modulus", y, viol.measured, viol.allowed});
        }
    }

    report.ok = report.violations.empty();
    return report;
}

} // namespace supinf

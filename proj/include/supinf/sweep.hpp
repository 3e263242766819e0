#pragma once

#include "supinf/curvature.hpp"
#include "supinf/region.hpp"

#include <string>
#include <vector>

namespace supinf {

enum class SweepFamily { Bubble, Shooting };

/// A sup/inf sweep over a one-parameter solution family.
///
/// theorem selects the quantity:
///   1, 2: rows carry sup_K u * inf_Omega u (the product bound), and the
///         shooting family integrates with the subcritical term on;
///   3, 4: rows carry sup_K u alone, members are admitted only when
///         min_Omega u >= m (the conditional form of the bound); n must be 4
///         and the equation is pure-critical.
///
/// The bubble family is a pure-critical calibration: members solve the
/// equation with the canonical constant coefficient n(n-2), so the config
/// must declare exactly that coefficient; products over origin-centred balls
/// then have a closed form to compare against.
struct SweepConfig {
    int theorem = 1;
    int n = 4;
    SweepFamily family = SweepFamily::Bubble;
    std::vector<double> parameters; // bubble scales or shooting centre values
    CurvatureProfile curvature;
    RegionSpec K = ball(0.5);
    RegionSpec Omega = ball(1.0);
    double m = 0.0;      // admission threshold, theorems 3/4 only
    double step = 1e-3;  // sampling / integration step
    double r_max = 0.0;  // profile extent; 0 means "reach of Omega"
    double shoot_tolerance = 1e-8;

    bool wants_product() const { return theorem == 1 || theorem == 2; }
    bool wants_subcritical() const {
        return wants_product() && family == SweepFamily::Shooting;
    }
    double profile_extent() const;

    void validate() const;
};

struct SweepRow {
    double parameter = 0.0;
    std::string status;        // "ok" | "skipped" | "filtered"
    double sup_K = 0.0;        // NaN unless ok or filtered
    double inf_Omega = 0.0;    // NaN unless ok or filtered
    double value = 0.0;        // product (thm 1/2) or sup (thm 3/4); NaN unless ok
    double closed_form = 0.0;  // analytic reference when one exists, else NaN
    std::string error;         // solver message for skipped rows
};

struct SweepReport {
    std::vector<SweepRow> rows;
    double empirical_c = 0.0;       // max value over ok rows (NaN if none)
    bool monotone = false;          // values non-decreasing across ok rows
    double closed_form_error = 0.0; // max |value - closed_form| (NaN if no reference)
};

/// Run the sweep row by row in parameter order. A member whose solve or
/// evaluation fails is recorded as a skipped row carrying the error message;
/// a member below the admission threshold (theorems 3/4) is a filtered row.
SweepReport run_sweep(const SweepConfig& cfg);

struct AuditViolation {
    std::string kind;      // "lower-bound" | "upper-bound" | "modulus"
    double location = 0.0; // radius (bounds) or probe base point (modulus)
    double measured = 0.0;
    double allowed = 0.0;
};

struct AuditReport {
    bool ok = true;
    bool holder_checked = false; // theorems 1/3 verify the gradient modulus
    std::vector<AuditViolation> violations;
};

/// Verify the declared coefficient hypotheses against the analytic family:
/// theorems 1/3 check a <= V <= b by sampling and the gradient modulus via
/// holder_bound_check over a mesh of base points; theorems 2/4 check only
/// the lower bound (the families here are differentiable by construction).
AuditReport theorem_hypothesis_audit(const SweepConfig& cfg);

} // namespace supinf

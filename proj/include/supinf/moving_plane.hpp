#pragma once

#include "supinf/emden_fowler.hpp"
#include "supinf/region.hpp"

namespace supinf {

/// Outcome of the critical-plane search and the checks run at the plane.
/// All quantities live on the cylindrical t-axis; the comparison window is
/// (xi, t1]. When the window at xi is empty (xi >= t1) the comparison is
/// vacuous: max_gap and first_contact are NaN and the flags report the
/// vacuous truth.
struct MovingPlaneReport {
    double xi = 0.0;         // critical plane: largest strictly separated plane found
    double lambda_bar = 0.0; // search cap
    double eta = 0.0;        // u(y)^{-2/(n-2)} of the source profile
    double t1 = 0.0;         // right end of the comparison window
    double first_contact = 0.0; // t where the reflected gap attains its max
    double max_gap = 0.0;       // max of w^xi - w over (xi, t1]
    double z1_max = 0.0;        // max of the leading-term difference field
    double z2_max = 0.0;        // max of the lower-order difference field
    bool lemma_holds = false;   // comparison configuration + operator sign at xi
    bool hopf_holds = false;    // boundary comparison w(t1) <= w(2 xi - t1)
    bool window_vacuous = false;
};

/// Reflected field w(2 lambda - t) at every grid node whose mirror stays on
/// the grid (an interval of nodes containing (lambda, t_max] and, space
/// permitting, nodes below lambda as well). Cubic interpolation; exact where
/// 2 lambda - t lands on a node. Throws when even t_max cannot be reflected,
/// naming the t_min the grid would need.
SampledField reflect(const std::vector<double>& t, const std::vector<double>& v, double lambda);
SampledField reflect(const EFProfile& w, double lambda);

struct CompareResult {
    double max_gap = 0.0;
    double first_contact = 0.0; // smallest t attaining max_gap
};

/// Max of w^lambda - w over grid nodes in (lambda, t1], with its argmax.
/// The separation property holds strictly iff max_gap < 0.
CompareResult compare(const EFProfile& w, double lambda, double t1);

/// Search for the critical plane xi = sup { lambda <= lambda_bar : w^lambda < w
/// on (lambda, t1] }: coarse downward scan in steps of 0.1 from lambda_bar,
/// then bisection of the bracketing pair down to the grid spacing. Strictness
/// is max_gap < -1e-12; an empty window counts as strictly separated. Planes
/// below (t_min + t1)/2 cannot be compared (their windows reflect off the
/// grid); if no strictly separated plane is found above that floor the search
/// throws SolverError naming the scanned range. V is used to populate the
/// sign-decomposition and lemma fields of the report at the found plane.
MovingPlaneReport find_xi(const EFProfile& w, double lambda_bar, double t1,
                          const CurvatureProfile& V, bool include_subcritical);

/// The two difference fields whose signs drive the comparison argument,
/// sampled on grid nodes in (xi, t1] (with Vbar(t) = V(origin + e^t) and
/// t^xi = 2 xi - t):
///   Z1 = (Vbar^xi - Vbar) (w^xi)^crit + Vbar [(w^xi)^crit - w^crit]
///   Z2 = e^{t^xi} [(w^xi)^sub - w^sub] + w^sub (e^{t^xi} - e^t)
/// Z2 is identically zero when the equation carries no subcritical term.
/// When w solves the transformed equation, Z1 + Z2 = -L(w^xi - w).
struct ZDecomposition {
    SampledField z1;
    SampledField z2;
};
ZDecomposition z_decomposition(const EFProfile& w, double xi, const CurvatureProfile& V,
                               bool include_subcritical, double t1);

/// Comparison-sign check at a plane: given the separation w^lambda <= w on
/// (lambda, t1], the stenciled -L(w^lambda - w) must be <= tolerance there.
/// For nonconstant V also measures eps = sup |Vbar^lambda - Vbar|/(e^t - e^{t^lambda})
/// over the window and evaluates the sufficient condition
/// eps * (w^lambda)^{2/(n-2)} <= 1. Failures are data, not errors.
struct Lemma2Report {
    bool applies = false;      // max_gap <= 1e-12 (comparison configuration)
    double max_gap = 0.0;
    double stencil_max = 0.0;  // max of -L_h(w^lambda - w) over interior window nodes
    bool sign_holds = false;   // stencil_max <= tolerance
    double epsilon = 0.0;      // measured coefficient-variation rate (0 for constant V)
    double sufficient_max = 0.0;  // max of eps * (w^lambda)^{2/(n-2)}
    bool sufficient_holds = false;
};
Lemma2Report lemma2_check(const EFProfile& w, double lambda, const CurvatureProfile& V,
                          bool include_subcritical, double t1, double tolerance = 1e-8);

/// Four-dimensional chain with the shifted field wbar = w - (m/2) e^t:
/// given wbar^lambda <= wbar on the window, checks in order
///   1. the unshifted gap bound  w^lambda - w <= (m/2)(e^{2 lambda - t} - e^t) < 0,
///   2. the cubic bound  (w^lambda)^3 - w^3 <= 3 (w^lambda - w)(w^lambda)^2,
///   3. the final sign  ((3m/2) Vbar - eps w^lambda)(e^{2 lambda - t} - e^t) <= 0
///      with the measured eps,
///   4. the a-priori bound  w^lambda <= 2 e^2 sqrt(8/a)  with a = declared
///      lower bound of V,
///   5. the operator sign  -L_h(wbar^lambda - wbar) <= tolerance,
/// and reports how far the shifted and unshifted operator images differ
/// (kernel_gap; e^t is in the kernel of L for n = 4, so this is pure stencil
/// noise). Rejects n != 4.
struct LemmaN4Report {
    bool applies = false;        // shifted separation holds on the window
    double shifted_max_gap = 0.0;
    bool gap_bound_holds = false;
    double gap_bound_margin = 0.0; // max of (w^l - w) - (m/2)(e^{2l-t} - e^t)
    bool cubic_holds = false;
    double cubic_margin = 0.0;     // max of lhs - rhs
    bool final_sign_holds = false;
    double final_sign_max = 0.0;
    double epsilon = 0.0;
    bool apriori_holds = false;
    double apriori_bound = 0.0;    // 2 e^2 sqrt(8/a)
    double w_reflected_max = 0.0;
    double stencil_max = 0.0;      // max of -L_h(wbar^lambda - wbar)
    bool sign_holds = false;
    double kernel_gap = 0.0;
};
LemmaN4Report lemma_n4_check(const EFProfile& w, double lambda, const CurvatureProfile& V,
                             double m, double t1, double tolerance = 1e-8);

/// Endpoint comparison the boundary-point principle yields at the critical
/// plane, plus the bounded product it controls:
///   boundary:  w(t1) <= w(2 xi - t1),
///   product:   l^{(n-2)/2} * u(y) * inf_omega u,
/// with u the profile w came from, y its base point, and l the distance
/// budget of the blow-up selection.
struct HopfReport {
    bool boundary_holds = false;
    double w_t1 = 0.0;
    double w_reflected = 0.0;
    double product = 0.0;
    double inf_omega = 0.0;
    double u_at_y = 0.0;
};
HopfReport hopf_conclusion_check(const EFProfile& w, double xi, double t1,
                                 const SolutionProfile& profile, const RegionSpec& omega,
                                 double l);

} // namespace supinf

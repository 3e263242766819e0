#pragma once

#include "supinf/curvature.hpp"
#include "supinf/exponents.hpp"
#include "supinf/profile.hpp"

#include <string>
#include <vector>

namespace supinf {

/// A scalar field sampled on a strictly increasing t-grid; the common return
/// type of the cylindrical-operator and reflection helpers.
struct SampledField {
    std::vector<double> t;
    std::vector<double> v;
};

/// Radial profile in cylindrical coordinates around a base point y:
///
///     w(t) = e^{(n-2)t/2} u(y + e^t),
///
/// sampled on a uniform t-grid. The transformed equation reads
///     -L w = Vbar(t) w^critical + e^t w^subcritical,
/// with L = d^2/dt^2 - (n-2)^2/4 on radial fields and Vbar(t) = V(y + e^t).
///
/// Plane-comparison arguments live on t <= -log 2 (offsets inside the half
/// ball); within_halfball() reports whether the grid respects that. Grids
/// built for symmetry tests may extend further.
struct EFProfile {
    std::vector<double> t_nodes;   // uniform, strictly increasing
    std::vector<double> w_values;  // positive
    double origin = 0.0;           // base radius y >= 0
    double origin_value = 0.0;     // u(y), kept for the plane-search cap
    Exponents expo;
    std::string curvature_id;      // label of the coefficient family used

    double t_min() const { return t_nodes.front(); }
    double t_max() const { return t_nodes.back(); }

    /// Uniform spacing, or throws if the grid is not uniform to ~1e-12.
    double spacing() const;

    bool within_halfball() const;

    void validate() const;
};

/// Transform a radial profile to cylindrical coordinates about `origin` on a
/// uniform m_nodes-grid over [t_min, t_max]. Requires t_max <= -log 2 and
/// origin + e^{t_max} inside the profile's ball.
EFProfile to_ef(const SolutionProfile& p, double origin, double t_min, double t_max,
                std::size_t m_nodes);

/// Inverse transform: u(origin + s) = s^{-(n-2)/2} w(log s) on the image grid
/// r_j = origin + e^{t_j}. The coefficient field V is not reconstructed; the
/// one-argument form attaches a placeholder constant carrying only the label,
/// the two-argument form reattaches the caller's field.
SolutionProfile from_ef(const EFProfile& w);
SolutionProfile from_ef(const EFProfile& w, const CurvatureProfile& V);

/// Discrete L = d^2/dt^2 - l_const on a uniform grid, three-point second
/// difference at the interior nodes (result aligned with t[1..m-2]).
SampledField apply_L(const std::vector<double>& t, const std::vector<double>& v,
                     const Exponents& expo);
SampledField apply_L(const EFProfile& w);

/// Max over interior nodes of |-L_h w - Vbar(t) w^critical - [flag] e^t w^subcritical|.
double ef_residual(const EFProfile& w, const CurvatureProfile& V, bool include_subcritical);

/// Shifted field w(t) - (m/2) e^t used by the four-dimensional comparison
/// argument; e^t lies in the kernel of L exactly when n = 4, so the shift
/// leaves L-images unchanged. The result may take negative values, hence the
/// plain sampled-field return type.
SampledField shift_profile(const EFProfile& w, double m);

} // namespace supinf

#include "supinf/curvature.hpp"

#include <cmath>
#include <limits>

namespace supinf {

double CurvatureProfile::value(double r) const {
    switch (family) {
        case CurvatureFamily::Constant: return v0;
        case CurvatureFamily::Polynomial: return v0 * (1.0 + eps * std::pow(r, k));
        case CurvatureFamily::Sinusoidal: return v0 * (1.0 + eps * std::sin(omega * r));
    }
    throw Error("unreachable curvature family");
}

double CurvatureProfile::gradient(double r) const {
    switch (family) {
        case CurvatureFamily::Constant: return 0.0;
        case CurvatureFamily::Polynomial:
            if (k == 1.0) return v0 * eps;
            return v0 * eps * k * std::pow(r, k - 1.0);
        case CurvatureFamily::Sinusoidal: return v0 * eps * omega * std::cos(omega * r);
    }
    throw Error("unreachable curvature family");
}

double CurvatureProfile::line_gradient(double xi) const {
    const double g = gradient(std::fabs(xi));
    return xi < 0.0 ? -g : g;
}

double CurvatureProfile::second_derivative_at_zero() const {
    switch (family) {
        case CurvatureFamily::Constant: return 0.0;
        case CurvatureFamily::Polynomial: return k == 2.0 ? 2.0 * v0 * eps : 0.0;
        case CurvatureFamily::Sinusoidal: return 0.0; // -v0 eps omega^2 sin(0)
    }
    throw Error("unreachable curvature family");
}

void CurvatureProfile::validate() const {
    if (!(v0 > 0.0)) throw ConfigError("curvature v0 must be positive");
    if (!(a > 0.0)) throw ConfigError("curvature lower bound a must be positive");
    if (!(b >= a)) throw ConfigError("curvature bounds need a <= b");
    if (!(holder_A >= 0.0)) throw ConfigError("curvature modulus constant must be >= 0");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("curvature modulus exponent must lie in (0, 1]");
    if (family == CurvatureFamily::Polynomial && !(k >= 1.0))
        throw ConfigError("polynomial curvature needs k >= 1");
    if (family == CurvatureFamily::Sinusoidal && !(omega > 0.0))
        throw ConfigError("sinusoidal curvature needs omega > 0");
    if (family != CurvatureFamily::Constant && std::fabs(eps) >= 1.0)
        throw ConfigError("curvature perturbation |eps| must stay below 1");
}

CurvatureProfile make_constant_curvature(double v0) {
    CurvatureProfile c;
    c.family = CurvatureFamily::Constant;
    c.v0 = v0;
    c.a = v0;
    c.b = v0;
    c.holder_A = 0.0;
    c.alpha = 1.0;
    c.id = "constant";
    c.validate();
    return c;
}

CurvatureProfile make_polynomial_curvature(double v0, double eps, double k, double r_max) {
    CurvatureProfile c;
    c.family = CurvatureFamily::Polynomial;
    c.v0 = v0;
    c.eps = eps;
    c.k = k;
    const double edge = v0 * (1.0 + eps * std::pow(r_max, k));
    c.a = eps >= 0.0 ? v0 : edge;
    c.b = eps >= 0.0 ? edge : v0;
    // |V''| <= v0 |eps| k (k-1) r^{k-2} on [0, r_max] gives the Lipschitz
    // constant of V'; for k = 1 the gradient is constant.
    c.holder_A = k == 1.0 ? 0.0 : v0 * std::fabs(eps) * k * (k - 1.0) * std::pow(r_max, k - 2.0);
    c.alpha = 1.0;
    c.id = "polynomial";
    c.validate();
    return c;
}

CurvatureProfile make_sinusoidal_curvature(double v0, double eps, double omega) {
    CurvatureProfile c;
    c.family = CurvatureFamily::Sinusoidal;
    c.v0 = v0;
    c.eps = eps;
    c.omega = omega;
    c.a = v0 * (1.0 - std::fabs(eps));
    c.b = v0 * (1.0 + std::fabs(eps));
    c.holder_A = v0 * std::fabs(eps) * omega * omega; // |V''| <= v0 |eps| omega^2
    c.alpha = 1.0;
    c.id = "sinusoidal";
    c.validate();
    return c;
}

HolderReport holder_bound_check(const CurvatureProfile& V, double y, double A, double alpha,
                                const std::vector<double>& t_samples) {
    if (y < 0.0) throw DomainError("holder_bound_check: base radius must be >= 0");
    const double log_half = -std::log(2.0);
    HolderReport report;
    const double g0 = V.line_gradient(y);
    for (double t : t_samples) {
        if (t > log_half + 1e-12)
            throw DomainError("holder_bound_check: sample exponents must satisfy e^t <= 1/2");
        const double s = std::exp(t);
        const double allowed = A * std::exp(alpha * t);
        for (int dir : {+1, -1}) {
            const double g1 = V.line_gradient(y + dir * s);
            const double measured = std::fabs(g1 - g0);
            // absolute slack for the cancellation in g1 - g0: at small offsets
            // the difference is computed from gradients of much larger
            // magnitude, and an equality-tight declaration must not be refuted
            // by their rounding alone
            const double slack =
                16.0 * std::numeric_limits<double>::epsilon() * (std::fabs(g0) + std::fabs(g1));
            if (measured > allowed * (1.0 + 1e-12) + slack) {
                report.ok = false;
                report.violations.push_back({t, dir, measured, allowed});
            }
        }
    }
    return report;
}

} // namespace supinf

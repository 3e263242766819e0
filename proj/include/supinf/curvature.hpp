#pragma once

#include <string>
#include <vector>

#include "supinf/errors.hpp"

namespace supinf {

enum class CurvatureFamily { Constant, Polynomial, Sinusoidal };

/// Radial coefficient V(r) of the leading nonlinearity, one of three analytic
/// families, together with the bounds the caller declares for it:
///
///   Constant:    V(r) = v0
///   Polynomial:  V(r) = v0 * (1 + eps * r^k)
///   Sinusoidal:  V(r) = v0 * (1 + eps * sin(omega * r))
///
/// a, b bound the values (0 < a <= V <= b), and (holder_A, alpha) declare the
/// modulus |V'(x) - V'(y)| <= holder_A * |x - y|^alpha used by the plane
/// comparison estimates. Declarations are not trusted: the hypothesis audit
/// and holder_bound_check exist to verify or refute them.
struct CurvatureProfile {
    CurvatureFamily family = CurvatureFamily::Constant;
    double v0 = 0.0;
    double eps = 0.0;   // Polynomial, Sinusoidal
    double k = 2.0;     // Polynomial
    double omega = 1.0; // Sinusoidal

    double a = 0.0;        // declared lower bound of V
    double b = 0.0;        // declared upper bound of V
    double holder_A = 0.0; // declared gradient modulus constant
    double alpha = 1.0;    // declared modulus exponent, in (0, 1]

    std::string id; // short label carried into profiles and reports

    double value(double r) const;

    /// dV/dr at radius r >= 0.
    double gradient(double r) const;

    /// Signed derivative along a line through the center: the coordinate xi
    /// may be negative (a point on the far side of the center), where the
    /// radial gradient flips sign.
    double line_gradient(double xi) const;

    /// V''(0), needed by the series start of the shooting integrator.
    double second_derivative_at_zero() const;

    void validate() const;
};

CurvatureProfile make_constant_curvature(double v0);
CurvatureProfile make_polynomial_curvature(double v0, double eps, double k, double r_max);
CurvatureProfile make_sinusoidal_curvature(double v0, double eps, double omega);

struct HolderViolation {
    double t = 0.0;        // sample exponent, offset was e^t
    int direction = +1;    // +1 or -1 side of the base point
    double measured = 0.0; // |V'(y + s) - V'(y)|
    double allowed = 0.0;  // A * e^{alpha t}
};

struct HolderReport {
    bool ok = true;
    std::vector<HolderViolation> violations;
};

/// Check |V'(y + e^t theta) - V'(y)| <= A e^{alpha t} for theta = +-1 at each
/// sample exponent. Samples must satisfy e^t <= 1/2 (offsets stay inside the
/// half-ball scale the comparison argument works on).
HolderReport holder_bound_check(const CurvatureProfile& V, double y, double A, double alpha,
                                const std::vector<double>& t_samples);

} // namespace supinf

#pragma once

#include "supinf/rational.hpp"

namespace supinf {

/// The four dimension-dependent exponents that drive everything downstream,
/// kept as exact rationals so that identities between them can be checked
/// without floating error.
///
///   critical    = (n+2)/(n-2)   growth of the leading nonlinearity
///   subcritical = n/(n-2)       growth of the lower-order term
///   half_power  = (n-2)/2       radial weight in the cylindrical transform
///   l_const     = (n-2)^2/4     zeroth-order constant of the transformed operator
struct Exponents {
    int n = 0;
    Rational critical;
    Rational subcritical;
    Rational half_power;
    Rational l_const;

    double crit() const { return critical.value(); }
    double sub() const { return subcritical.value(); }
    double half() const { return half_power.value(); }
    double lconst() const { return l_const.value(); }
};

/// Build the exponent table for dimension n. Throws DomainError for n < 3
/// (the exponents degenerate at n = 2).
Exponents make_exponents(int n);

} // namespace supinf

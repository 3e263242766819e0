#include "supinf/exponents.hpp"

#include <string>

namespace supinf {

Exponents make_exponents(int n) {
    if (n < 3) {
        throw DomainError("dimension must be >= 3, got " + std::to_string(n));
    }
    Exponents e;
    e.n = n;
    e.critical = Rational(n + 2, n - 2);
    e.subcritical = Rational(n, n - 2);
    e.half_power = Rational(n - 2, 2);
    e.l_const = Rational(static_cast<std::int64_t>(n - 2) * (n - 2), 4);
    return e;
}

} // namespace supinf

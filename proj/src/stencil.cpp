#include "supinf/stencil.hpp"

#include "supinf/errors.hpp"

namespace supinf {

std::size_t radial_laplacian_size(std::size_t m) {
    if (m < 8) throw DomainError("radial stencil needs at least 8 nodes");
    return m - 2;
}

std::vector<double> radial_laplacian(const std::vector<double>& u, double h, int n) {
    const std::size_t m = u.size();
    const std::size_t out = radial_laplacian_size(m);
    if (!(h > 0.0)) throw DomainError("stencil step must be positive");
    if (n < 3) throw DomainError("dimension must be >= 3");

    std::vector<double> lap(out);
    const double h2 = h * h;
    const double inv12h = 1.0 / (12.0 * h);

    // r = 0: regularised limit n * u''(0), fourth order for even profiles.
    lap[0] = static_cast<double>(n) * (16.0 * u[1] - u[2] - 15.0 * u[0]) / (6.0 * h2);

    // j = 1: even extension u_{-1} := u_1 in the five-point first difference.
    {
        const double upp = (u[0] - 2.0 * u[1] + u[2]) / h2;
        const double up = (u[1] - 8.0 * u[0] + 8.0 * u[2] - u[3]) * inv12h;
        lap[1] = upp + (n - 1) * up / h;
    }

    for (std::size_t j = 2; j + 2 < m; ++j) {
        const double upp = (u[j - 1] - 2.0 * u[j] + u[j + 1]) / h2;
        const double up = (u[j - 2] - 8.0 * u[j - 1] + 8.0 * u[j + 1] - u[j + 2]) * inv12h;
        lap[j] = upp + (n - 1) * up / (static_cast<double>(j) * h);
    }
    return lap;
}

std::vector<double> second_difference(const std::vector<double>& u, double h) {
    if (u.size() < 3) throw DomainError("second difference needs at least 3 nodes");
    if (!(h > 0.0)) throw DomainError("stencil step must be positive");
    std::vector<double> d(u.size() - 2);
    const double h2 = h * h;
    for (std::size_t j = 1; j + 1 < u.size(); ++j) {
        d[j - 1] = (u[j - 1] - 2.0 * u[j] + u[j + 1]) / h2;
    }
    return d;
}

} // namespace supinf

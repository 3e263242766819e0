#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "supinf/errors.hpp"

namespace supinf {

/// Four-point Lagrange cubic through the nodes bracketing x. Exact at nodes
/// (the vanishing factors make the off-node basis terms exactly zero), exact
/// on cubics up to rounding, never extrapolates.
///
/// Nodes must be strictly increasing with at least 4 entries; x must lie in
/// [nodes.front(), nodes.back()].
inline double cubic_interp(const std::vector<double>& nodes, const std::vector<double>& values,
                           double x) {
    const std::size_t m = nodes.size();
    if (m < 4 || values.size() != m)
        throw DomainError("cubic_interp: need at least 4 matching nodes/values");
    if (x < nodes.front() || x > nodes.back())
        throw DomainError("cubic_interp: point outside the sampled range");

    // bracketing interval [j, j+1], then a 4-node window clamped to the ends
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    std::size_t j = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    if (j >= m - 1) j = m - 2;
    std::size_t lo = j == 0 ? 0 : j - 1;
    if (lo + 3 >= m) lo = m - 4;

    double acc = 0.0;
    for (std::size_t i = lo; i < lo + 4; ++i) {
        double basis = 1.0;
        for (std::size_t q = lo; q < lo + 4; ++q) {
            if (q == i) continue;
            basis *= (x - nodes[q]) / (nodes[i] - nodes[q]);
        }
        acc += basis * values[i];
    }
    return acc;
}

/// Like cubic_interp, but the result is clamped into the value range of the
/// 4-node interpolation window. Lagrange cubics oscillate wildly across
/// under-resolved jumps; extremum scans use this guarded form so a steep,
/// barely-sampled profile cannot manufacture spurious sub-grid extrema. A
/// genuinely smooth dip between nodes is flattened by at most O(h^2), the
/// same order the node sampling itself resolves.
inline double cubic_interp_within(const std::vector<double>& nodes,
                                  const std::vector<double>& values, double x) {
    const std::size_t m = nodes.size();
    if (m < 4 || values.size() != m)
        throw DomainError("cubic_interp: need at least 4 matching nodes/values");
    if (x < nodes.front() || x > nodes.back())
        throw DomainError("cubic_interp: point outside the sampled range");

    const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    std::size_t j = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    if (j >= m - 1) j = m - 2;
    std::size_t lo = j == 0 ? 0 : j - 1;
    if (lo + 3 >= m) lo = m - 4;

    const double raw = cubic_interp(nodes, values, x);
    double wlo = values[lo];
    double whi = values[lo];
    for (std::size_t i = lo + 1; i < lo + 4; ++i) {
        wlo = std::min(wlo, values[i]);
        whi = std::max(whi, values[i]);
    }
    return std::clamp(raw, wlo, whi);
}

} // namespace supinf

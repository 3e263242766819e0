#pragma once

#include <cstdio>
#include <map>
#include <ostream>
#include <string>

namespace supinf {

/// Shortest round-trippable decimal for a double, C locale, '.' separator.
/// Used for every number written to CSV so reruns are byte-identical.
inline std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Sorted "# key = value" banner echoed at the top of every CSV artifact,
/// so a file alone identifies the run that produced it (no timestamps:
/// identical configs must produce identical bytes).
inline void write_config_echo(std::ostream& out,
                              const std::map<std::string, std::string>& echo) {
    for (const auto& [key, value] : echo) out << "# " << key << " = " << value << "\n";
}

} // namespace supinf

#pragma once

#include "supinf/errors.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace supinf {

/// Flat key/value configuration parsed from an INI-style text:
///
///   # comment
///   dimension = 4
///   [curvature]
///   family = constant    # keys inside a section become curvature.family
///
/// Values are kept as strings; the typed getters convert on demand and
/// throw ConfigError carrying the file name and line number on bad input.
/// Every key read is marked consumed; check_all_consumed() turns leftover
/// keys (typos, misplaced sections) into errors as well.
class Config {
public:
    static Config from_file(const std::string& path);
    static Config from_text(const std::string& text, const std::string& origin);

    /// Apply a "key=value" override (command line); overrides replace file
    /// values and report "command line" as their location.
    void apply_override(const std::string& assignment);

    bool has(const std::string& key) const;

    std::string str(const std::string& key, const std::string& fallback);
    std::string require_str(const std::string& key);

    double number(const std::string& key, double fallback);
    double require_number(const std::string& key);

    int integer(const std::string& key, int fallback);

    bool flag(const std::string& key, bool fallback);

    /// Comma- or space-separated list of numbers.
    std::vector<double> number_list(const std::string& key, std::vector<double> fallback);

    /// Location string "origin:line" for error messages about a key.
    std::string where(const std::string& key) const;

    /// Throw ConfigError naming the key's location; used by range checks.
    [[noreturn]] void fail(const std::string& key, const std::string& reason) const;

    /// Error out on any key that was never consumed by a getter.
    void check_all_consumed() const;

private:
    std::string origin_;
    std::map<std::string, std::string> values_;
    std::map<std::string, int> lines_; // -1 means command-line override
    mutable std::set<std::string> consumed_;

    double parse_number(const std::string& key, const std::string& raw) const;
};

} // namespace supinf

#include "supinf/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace supinf {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
    const auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

} // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path);
}

Config Config::from_text(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(body.substr(1, body.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + body + "'");
        const std::string key_part = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key_part.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        const std::string key = section.empty() ? key_part : section + "." + key_part;
        if (cfg.values_.count(key))
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                              "' (first set at line " + std::to_string(cfg.lines_[key]) + ")");
        cfg.values_[key] = value;
        cfg.lines_[key] = lineno;
    }
    return cfg;
}

void Config::apply_override(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override must look like key=value, got '" + assignment + "'");
    const std::string key = trim(assignment.substr(0, eq));
    values_[key] = trim(assignment.substr(eq + 1));
    lines_[key] = -1;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::where(const std::string& key) const {
    const auto it = lines_.find(key);
    if (it == lines_.end()) return origin_;
    if (it->second < 0) return "command line";
    return origin_ + ":" + std::to_string(it->second);
}

void Config::fail(const std::string& key, const std::string& reason) const {
    throw ConfigError(where(key) + ": " + key + " " + reason);
}

std::string Config::str(const std::string& key, const std::string& fallback) {
    consumed_.insert(key);
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::string Config::require_str(const std::string& key) {
    consumed_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end())
        throw ConfigError(origin_ + ": missing required key '" + key + "'");
    return it->second;
}

double Config::parse_number(const std::string& key, const std::string& raw) const {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(raw.c_str(), &end);
    if (end == raw.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError(where(key) + ": " + key + " is not a number: '" + raw + "'");
    return v;
}

double Config::number(const std::string& key, double fallback) {
    consumed_.insert(key);
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_number(key, it->second);
}

double Config::require_number(const std::string& key) {
    return parse_number(key, require_str(key));
}

int Config::integer(const std::string& key, int fallback) {
    consumed_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const double v = parse_number(key, it->second);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError(where(key) + ": " + key + " must be an integer, got '" + it->second +
                          "'");
    return i;
}

bool Config::flag(const std::string& key, bool fallback) {
    consumed_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "off" || v == "no" || v == "0") return false;
    throw ConfigError(where(key) + ": " + key + " must be a boolean (true/false), got '" + v +
                      "'");
}

std::vector<double> Config::number_list(const std::string& key, std::vector<double> fallback) {
    consumed_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::string token;
    std::istringstream in(it->second);
    while (std::getline(in, token, ',')) {
        std::istringstream parts(token);
        std::string piece;
        while (parts >> piece) out.push_back(parse_number(key, piece));
    }
    if (out.empty())
        throw ConfigError(where(key) + ": " + key + " must list at least one number");
    return out;
}

void Config::check_all_consumed() const {
    for (const auto& [key, value] : values_) {
        if (!consumed_.count(key))
            throw ConfigError(where(key) + ": unknown key '" + key + "'");
    }
}

} // namespace supinf

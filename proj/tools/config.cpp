#include "config.hpp"

#include <cctype>
#include <sstream>

namespace strichartz::tool {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double number_from(const std::string& text, const std::string& key) {
    Rational q;
    if (parse_rational(text, q)) return q.get_d();
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (...) {
    }
    throw ConfigError("key '" + key + "': cannot parse number '" + text +
                      "'");
}

}  // namespace

Config Config::parse(const std::string& text) {
    Config config;
    config.raw_ = text;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected key=value, got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) +
                              ": empty key");
        if (config.values_.count(key))
            throw ConfigError("line " + std::to_string(line_no) +
                              ": duplicate key '" + key + "'");
        config.values_[key] = value;
    }
    return config;
}

void Config::expect_keys(const std::set<std::string>& required,
                         const std::set<std::string>& optional) const {
    std::vector<std::string> unknown, missing;
    for (const auto& [key, value] : values_)
        if (!required.count(key) && !optional.count(key))
            unknown.push_back(key);
    for (const auto& key : required)
        if (!values_.count(key)) missing.push_back(key);
    if (!unknown.empty() || !missing.empty()) {
        std::string message;
        if (!unknown.empty()) {
            message += "unknown keys:";
            for (const auto& k : unknown) message += " " + k;
        }
        if (!missing.empty()) {
            if (!message.empty()) message += "; ";
            message += "missing required keys:";
            for (const auto& k : missing) message += " " + k;
        }
        throw ConfigError(message);
    }
}

std::string Config::get_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw ConfigError("missing required key '" + key + "'");
    return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

long Config::get_int(const std::string& key, long fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t used = 0;
        const long v = std::stol(it->second, &used);
        if (used == it->second.size()) return v;
    } catch (...) {
    }
    throw ConfigError("key '" + key + "': cannot parse integer '" +
                      it->second + "'");
}

std::uint64_t Config::get_u64(const std::string& key,
                              std::uint64_t fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(it->second, &used);
        if (used == it->second.size()) return v;
    } catch (...) {
    }
    throw ConfigError("key '" + key + "': cannot parse integer '" +
                      it->second + "'");
}

double Config::get_number(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return number_from(it->second, key);
}

Rational Config::get_rational(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw ConfigError("missing required key '" + key + "'");
    Rational q;
    if (!parse_rational(it->second, q))
        throw ConfigError("key '" + key + "': cannot parse rational '" +
                          it->second + "'");
    return q;
}

std::vector<double> Config::get_number_list(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw ConfigError("missing required key '" + key + "'");
    std::vector<double> out;
    std::string item;
    std::istringstream is(it->second);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("key '" + key + "': empty list entry");
        out.push_back(number_from(item, key));
    }
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

}  // namespace strichartz::tool

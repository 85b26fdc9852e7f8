#pragma once

// Strict flat key=value configuration for sweep runs. No nesting, '#'
// comments, unknown keys are errors (exponent-tuple keys are typo-prone),
// and missing required keys are reported together.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <strichartz/rational.hpp>

namespace strichartz::tool {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Config {
  public:
    // Parses the given text (usually a file's contents).
    static Config parse(const std::string& text);

    // Validates the key set: every present key must be known, every
    // required key present. Throws ConfigError listing offenders.
    void expect_keys(const std::set<std::string>& required,
                     const std::set<std::string>& optional) const;

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key,
                           const std::string& fallback) const;
    long get_int(const std::string& key, long fallback) const;
    std::uint64_t get_u64(const std::string& key,
                          std::uint64_t fallback) const;
    // Accepts plain decimals and exact fractions like "1/8".
    double get_number(const std::string& key, double fallback) const;
    Rational get_rational(const std::string& key) const;
    // Comma-separated numbers, fractions allowed.
    std::vector<double> get_number_list(const std::string& key) const;

    const std::string& raw_text() const { return raw_; }

  private:
    std::map<std::string, std::string> values_;
    std::string raw_;
};

}  // namespace strichartz::tool

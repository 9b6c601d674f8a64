#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "loglap/errors.hpp"

namespace loglap {

// Parse error carrying the 1-based line number of the offending line.
class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(const std::string& file, int line, const std::string& msg);
    int line;
};

// Plain-text sectioned key-value configuration:
//   [section]
//   key = value
// '#' starts a comment; values are free text (lists are comma-separated).
class Config {
public:
    static Config parse_file(const std::filesystem::path& path);
    static Config parse_string(const std::string& text, const std::string& name = "<config>");

    bool has(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    int get_int(const std::string& section, const std::string& key) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    std::vector<double> get_double_list(const std::string& section,
                                        const std::string& key) const;
    std::vector<int> get_int_list(const std::string& section, const std::string& key) const;

    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return sections_;
    }

private:
    std::string name_;
    std::map<std::string, std::map<std::string, std::string>> sections_;
    std::map<std::string, int> key_lines_;  // "section.key" -> line

    [[noreturn]] void fail(const std::string& section, const std::string& key,
                           const std::string& msg) const;
};

}  // namespace loglap

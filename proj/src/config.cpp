#include "loglap/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace loglap {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

ConfigParseError::ConfigParseError(const std::string& file, int line_no,
                                   const std::string& msg)
    : std::runtime_error(file + ":" + std::to_string(line_no) + ": " + msg), line(line_no) {}

Config Config::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError(path.string(), 0, "cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path.string());
}

Config Config::parse_string(const std::string& text, const std::string& name) {
    Config cfg;
    cfg.name_ = name;
    std::stringstream ss(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        std::string line = trim(raw);
        auto hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigParseError(name, line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigParseError(name, line_no, "empty section name");
            cfg.sections_[section];
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError(name, line_no, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigParseError(name, line_no, "empty key");
        if (section.empty())
            throw ConfigParseError(name, line_no, "key outside of any [section]");
        cfg.sections_[section][key] = value;
        cfg.key_lines_[section + "." + key] = line_no;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) > 0;
}

void Config::fail(const std::string& section, const std::string& key,
                  const std::string& msg) const {
    int line = 0;
    auto it = key_lines_.find(section + "." + key);
    if (it != key_lines_.end()) line = it->second;
    throw ConfigParseError(name_, line, "[" + section + "] " + key + ": " + msg);
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
    if (!has(section, key)) fail(section, key, "missing required key");
    return sections_.at(section).at(key);
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    return has(section, key) ? sections_.at(section).at(key) : fallback;
}

int Config::get_int(const std::string& section, const std::string& key) const {
    std::string v = get_string(section, key);
    char* end = nullptr;
    long out = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0') fail(section, key, "expected an integer");
    return static_cast<int>(out);
}

int Config::get_int(const std::string& section, const std::string& key, int fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    std::string v = get_string(section, key);
    char* end = nullptr;
    double out = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') fail(section, key, "expected a number");
    return out;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
    std::vector<double> out;
    for (const std::string& item : split_list(get_string(section, key))) {
        char* end = nullptr;
        double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0') fail(section, key, "expected numbers");
        out.push_back(v);
    }
    if (out.empty()) fail(section, key, "empty list");
    return out;
}

std::vector<int> Config::get_int_list(const std::string& section,
                                      const std::string& key) const {
    std::vector<int> out;
    for (const std::string& item : split_list(get_string(section, key))) {
        char* end = nullptr;
        long v = std::strtol(item.c_str(), &end, 10);
        if (end == item.c_str() || *end != '\0') fail(section, key, "expected integers");
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) fail(section, key, "empty list");
    return out;
}

}  // namespace loglap

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

namespace loglap {

using Json = nlohmann::ordered_json;

// Shortest round-trip decimal representation (canonical float formatting,
// keeps oracle diffs deterministic).
std::string format_double(double x);

class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& fields);
    std::string str() const { return buffer_; }
    void close();

private:
    std::filesystem::path path_;
    std::string buffer_;
    bool closed_ = false;
};

std::string csv_field(double x);
std::string csv_field(int x);

void write_json(const std::filesystem::path& path, const Json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

// Dense text dump: one row per line, fields separated by single spaces.
void dump_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m);

}  // namespace loglap

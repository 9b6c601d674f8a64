#include "loglap/report.hpp"

#include <charconv>
#include <fstream>

#include "loglap/errors.hpp"

namespace loglap {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : path_(path) {}

void CsvWriter::header(const std::vector<std::string>& names) { row(names); }

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += fields[i];
    }
    buffer_ += '\n';
}

void CsvWriter::close() {
    if (closed_) return;
    write_text(path_, buffer_);
    closed_ = true;
}

std::string csv_field(double x) { return format_double(x); }
std::string csv_field(int x) { return std::to_string(x); }

void write_json(const std::filesystem::path& path, const Json& j) {
    write_text(path, j.dump(2) + "\n");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

void dump_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
    std::string text;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) text += ' ';
            text += format_double(m(i, j));
        }
        text += '\n';
    }
    write_text(path, text);
}

}  // namespace loglap

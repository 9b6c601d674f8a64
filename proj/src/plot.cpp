#include "loglap/plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "loglap/errors.hpp"
#include "loglap/report.hpp"

namespace loglap {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kMarginL = 64, kMarginR = 24, kMarginT = 36, kMarginB = 44;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

void emit_plot(const std::vector<PlotSeries>& series, const std::filesystem::path& path,
               const std::string& title, bool log_x) {
    if (series.empty()) throw IoError("emit_plot: no series to draw");
    for (const auto& s : series) {
        if (s.x.empty() || s.x.size() != s.y.size())
            throw IoError("emit_plot: series '" + s.label + "' is empty or ragged");
    }

    auto tx = [&](double x) { return log_x ? std::log10(x) : x; };
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, tx(s.x[i]));
            xmax = std::max(xmax, tx(s.x[i]));
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;

    auto px = [&](double x) {
        return kMarginL + (tx(x) - xmin) / (xmax - xmin) * (kWidth - kMarginL - kMarginR);
    };
    auto py = [&](double y) {
        return kHeight - kMarginB - (y - ymin) / (ymax - ymin) * (kHeight - kMarginT - kMarginB);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    // axes
    svg << "<line x1=\"" << kMarginL << "\" y1=\"" << kHeight - kMarginB << "\" x2=\""
        << kWidth - kMarginR << "\" y2=\"" << kHeight - kMarginB
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT << "\" x2=\"" << kMarginL
        << "\" y2=\"" << kHeight - kMarginB << "\" stroke=\"black\"/>\n";
    // tick labels at the corners
    svg << "<text x=\"" << kMarginL << "\" y=\"" << kHeight - kMarginB + 16
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << (log_x ? "1e" + fmt(xmin) : fmt(xmin)) << "</text>\n";
    svg << "<text x=\"" << kWidth - kMarginR << "\" y=\"" << kHeight - kMarginB + 16
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << (log_x ? "1e" + fmt(xmax) : fmt(xmax)) << "</text>\n";
    svg << "<text x=\"" << kMarginL - 6 << "\" y=\"" << kHeight - kMarginB
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(ymin)
        << "</text>\n";
    svg << "<text x=\"" << kMarginL - 6 << "\" y=\"" << kMarginT + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(ymax)
        << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kColors[si % 6];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            svg << fmt(px(s.x[i])) << "," << fmt(py(s.y[i])) << " ";
        svg << "\"/>\n";
        svg << "<text x=\"" << kWidth - kMarginR - 4 << "\" y=\""
            << kMarginT + 16 * (static_cast<double>(si) + 1)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << color << "\">" << s.label << "</text>\n";
    }
    svg << "</svg>\n";
    write_text(path, svg.str());
}

}  // namespace loglap

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace loglap {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Standalone SVG line plot (staircases, heat-trace sums, commutator growth).
// log_x plots against log10 of the x values.
void emit_plot(const std::vector<PlotSeries>& series, const std::filesystem::path& path,
               const std::string& title = "", bool log_x = false);

}  // namespace loglap

#include "loglap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace loglap {

namespace {

constexpr int kFitSamples = 400;
constexpr std::size_t kFitMinIndex = 8;
constexpr double kFitResidualLimit = 0.5;

LogGrowthFit fit_samples(std::span<const double> expanded) {
    std::size_t M = expanded.size();
    if (M < 50) throw UndeterminedError("log_growth_fit: need at least 50 eigenvalues");
    // log-uniform subsample of the expanded index range [kFitMinIndex, M]
    std::set<std::size_t> indices;
    double lo = std::log(static_cast<double>(kFitMinIndex));
    double hi = std::log(static_cast<double>(M));
    for (int i = 0; i < kFitSamples; ++i) {
        double x = lo + (hi - lo) * i / (kFitSamples - 1);
        auto m = static_cast<std::size_t>(std::llround(std::exp(x)));
        indices.insert(std::clamp<std::size_t>(m, kFitMinIndex, M));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t m : indices) {
        double x = std::log(static_cast<double>(m));
        double y = expanded[m - 1];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(indices.size());
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) throw UndeterminedError("log_growth_fit: degenerate fit");
    LogGrowthFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (std::size_t m : indices) {
        double r = expanded[m - 1] - (fit.slope * std::log(static_cast<double>(m)) +
                                      fit.intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

TraceVerdict increment_verdict(const std::vector<double>& increments, double total) {
    if (increments.empty()) return TraceVerdict::undetermined;
    if (increments.back() < 1e-10 * total) return TraceVerdict::converged;
    std::size_t window = std::min<std::size_t>(10, increments.size());
    if (window >= 2) {
        bool nondecreasing = true;
        for (std::size_t i = increments.size() - window + 1; i < increments.size(); ++i)
            if (increments[i] < increments[i - 1]) nondecreasing = false;
        if (nondecreasing) return TraceVerdict::diverging;
    }
    return TraceVerdict::undetermined;
}

}  // namespace

const char* to_string(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::converged: return "converged";
        case TraceVerdict::diverging: return "diverging";
        case TraceVerdict::undetermined: return "undetermined";
    }
    return "?";
}

HeatTraceReport heat_trace(const OracleSpectrum& oracle, const std::vector<double>& t_grid,
                           const std::vector<int>& levels) {
    if (t_grid.empty()) throw DataError("heat_trace: empty t grid");
    for (double t : t_grid)
        if (!(t > 0)) throw ParameterDomainError("heat_trace: t must be positive");
    if (levels.empty()) throw DataError("heat_trace: empty level list");

    HeatTraceReport report;
    report.t_grid = t_grid;
    report.levels = levels;
    report.t0_exact = oracle.t0_exact();
    int max_level = *std::max_element(levels.begin(), levels.end());
    for (double t : t_grid) {
        std::vector<double> sums;
        double sum = 0.0;
        std::vector<double> by_level(static_cast<std::size_t>(max_level) + 1);
        for (int level = 0; level <= max_level; ++level) {
            sum += oracle.multiplicity(level) * std::exp(-t * oracle.eigenvalue(level));
            by_level[static_cast<std::size_t>(level)] = sum;
        }
        for (int level : levels)
            sums.push_back(by_level[static_cast<std::size_t>(std::min(level, max_level))]);
        report.partial_sums.push_back(std::move(sums));
        // exact threshold comparison: trace class iff t > t0 in every family
        report.verdicts.push_back(t > oracle.t0_exact() ? TraceVerdict::converged
                                                        : TraceVerdict::diverging);
    }
    try {
        report.t0_estimate = trace_threshold(oracle);
    } catch (const UndeterminedError&) {
        report.t0_estimate = 0.0;
    }
    return report;
}

HeatTraceReport heat_trace(const SpectralModel& model, const std::vector<double>& t_grid,
                           const std::vector<int>& levels) {
    if (model.eigenvalues.empty()) throw DataError("heat_trace: empty model");
    for (double t : t_grid)
        if (!(t > 0)) throw ParameterDomainError("heat_trace: t must be positive");
    std::vector<double> expanded = model.expanded();

    HeatTraceReport report;
    report.t_grid = t_grid;
    report.levels = levels;
    for (double t : t_grid) {
        std::vector<double> sums;
        std::vector<double> increments;
        double sum = 0.0;
        std::size_t at = 0;
        for (int level : levels) {
            auto upto = std::min<std::size_t>(static_cast<std::size_t>(level), expanded.size());
            double before = sum;
            for (; at < upto; ++at) sum += std::exp(-t * expanded[at]);
            sums.push_back(sum);
            increments.push_back(sum - before);
        }
        report.partial_sums.push_back(sums);
        report.verdicts.push_back(increment_verdict(increments, sum));
    }
    try {
        report.t0_estimate = trace_threshold(model);
    } catch (const UndeterminedError&) {
        report.t0_estimate = 0.0;
    }
    return report;
}

LogGrowthFit log_growth_fit(std::span<const double> expanded) { return fit_samples(expanded); }

LogGrowthFit log_growth_fit(const SpectralModel& model) {
    std::vector<double> expanded = model.expanded();
    return fit_samples(expanded);
}

double trace_threshold(const SpectralModel& model) {
    if (model.distinct_count() < 50)
        throw UndeterminedError("trace_threshold: need >= 50 distinct eigenvalues");
    LogGrowthFit fit = log_growth_fit(model);
    if (fit.residual > kFitResidualLimit || fit.slope <= 0) {
        std::ostringstream os;
        os << "trace_threshold: unusable fit, slope " << fit.slope << ", residual "
           << fit.residual;
        throw UndeterminedError(os.str());
    }
    return 1.0 / fit.slope;
}

double trace_threshold(const OracleSpectrum& oracle, std::size_t expanded_count) {
    // stay within the oracle's stated truncation
    double total = 0.0;
    for (int level = 0; level < oracle.level_count(); ++level)
        total += oracle.multiplicity(level);
    if (total < static_cast<double>(expanded_count))
        expanded_count = static_cast<std::size_t>(total);
    std::vector<double> expanded = oracle.expanded(expanded_count);
    LogGrowthFit fit = fit_samples(expanded);
    if (fit.residual > kFitResidualLimit || fit.slope <= 0)
        throw UndeterminedError("trace_threshold: unusable fit");
    return 1.0 / fit.slope;
}

SingularProfile singular_value_profile(std::span<const double> expanded) {
    SingularProfile profile;
    profile.s.reserve(expanded.size());
    for (std::size_t n = 0; n < expanded.size(); ++n) {
        double s = 1.0 / (1.0 + expanded[n]);
        profile.s.push_back(s);
        profile.li_bound = std::max(profile.li_bound,
                                    s * std::log(static_cast<double>(n) + 3.0));
    }
    return profile;
}

SingularProfile singular_value_profile(const SpectralModel& model) {
    std::vector<double> expanded = model.expanded();
    return singular_value_profile(expanded);
}

}  // namespace loglap

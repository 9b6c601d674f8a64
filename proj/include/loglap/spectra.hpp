#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loglap/closed_forms.hpp"
#include "loglap/form_engine.hpp"

namespace loglap {

enum class TraceVerdict { converged, diverging, undetermined };

const char* to_string(TraceVerdict);

struct HeatTraceReport {
    std::vector<double> t_grid;
    std::vector<int> levels;                        // truncation levels
    std::vector<std::vector<double>> partial_sums;  // [t][level]
    std::vector<TraceVerdict> verdicts;             // per t
    double t0_estimate = 0.0;                       // tail-fit estimate, 0 if unavailable
    std::optional<double> t0_exact;                 // oracle families only
};

struct SingularProfile {
    std::vector<double> s;   // singular values of (1+Delta)^-1, nonincreasing
    double li_bound = 0.0;   // max_n s_n log(n+2)
};

struct LogGrowthFit {
    double slope = 0.0;      // c in lambda_n ~ c log n + b
    double intercept = 0.0;
    double residual = 0.0;   // RMS over the fit samples
};

// Partial sums sum multiplicity * exp(-t lambda) over truncation levels.
// Oracle inputs get analytic verdicts: the geometric-ratio test for shifts
// (ratio N exp(-t(1-1/N))) and the exact t0 = 1/2 thresholds for interval
// and circle. Levels index the oracle's eigenvalue levels, with per-level
// analytic terms so large multiplicities never get expanded.
HeatTraceReport heat_trace(const OracleSpectrum& oracle, const std::vector<double>& t_grid,
                           const std::vector<int>& levels);

// Generic models: levels count expanded eigenvalues; verdicts are the honest
// increment rules (converged when the last increment is < 1e-10 of the sum,
// diverging when the last 10 increments are nondecreasing, else undetermined).
HeatTraceReport heat_trace(const SpectralModel& model, const std::vector<double>& t_grid,
                           const std::vector<int>& levels);

// Least squares of lambda_m against log m over a log-uniform subsample of the
// multiplicity-expanded ascending sequence (m >= 8, 400 samples).
LogGrowthFit log_growth_fit(std::span<const double> expanded);
LogGrowthFit log_growth_fit(const SpectralModel& model);

// t0 estimate 1/c from the tail fit; sum exp(-t lambda_n) ~ sum n^-tc
// converges iff t > 1/c. Requires >= 50 distinct eigenvalues and a sane fit.
double trace_threshold(const SpectralModel& model);
double trace_threshold(const OracleSpectrum& oracle, std::size_t expanded_count = 100000);

// s_n = 1/(1 + lambda_n) over the expanded sequence.
SingularProfile singular_value_profile(std::span<const double> expanded);
SingularProfile singular_value_profile(const SpectralModel& model);

}  // namespace loglap

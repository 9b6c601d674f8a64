#include <doctest.h>

#include <cmath>

#include "loglap/spectra.hpp"

using namespace loglap;

TEST_CASE("shift heat trace geometric series") {
    OracleSpectrum oracle = shift_oracle(2, 40);
    std::vector<int> levels;
    for (int l = 1; l <= 40; ++l) levels.push_back(l);
    HeatTraceReport report = heat_trace(oracle, {2.0, 1.3}, levels);

    double closed = 1.0 + std::exp(-2.0) / (1.0 - 2.0 / std::exp(1.0));
    CHECK(report.partial_sums[0].back() == doctest::Approx(closed).epsilon(1e-4));
    CHECK(report.verdicts[0] == TraceVerdict::converged);   // 2 > 2 log 2
    CHECK(report.verdicts[1] == TraceVerdict::diverging);   // 1.3 < 2 log 2
    CHECK(*report.t0_exact == doctest::Approx(2.0 * std::log(2.0)));

    // partial sums are nondecreasing in the truncation level
    for (const auto& sums : report.partial_sums)
        for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i] >= sums[i - 1]);
}

TEST_CASE("interval verdicts flip across one half") {
    OracleSpectrum oracle = interval_oracle(200);
    HeatTraceReport report = heat_trace(oracle, {0.4, 0.6}, {50, 100, 200});
    CHECK(report.verdicts[0] == TraceVerdict::diverging);
    CHECK(report.verdicts[1] == TraceVerdict::converged);
    CHECK(*report.t0_exact == doctest::Approx(0.5));
}

TEST_CASE("generic model verdicts use the honest increment rules") {
    // eigenvalues growing fast enough that increments die out quickly
    SpectralModel fast;
    fast.source = SpectrumSource::closed_form;
    for (int n = 0; n < 60; ++n) {
        fast.eigenvalues.push_back(static_cast<double>(n) * n);
        fast.multiplicities.push_back(1);
    }
    std::vector<int> levels;
    for (int l = 1; l <= 60; ++l) levels.push_back(l);
    HeatTraceReport r1 = heat_trace(fast, {1.0}, levels);
    CHECK(r1.verdicts[0] == TraceVerdict::converged);

    SpectralModel flat;  // a single repeated eigenvalue: constant increments
    flat.source = SpectrumSource::closed_form;
    flat.eigenvalues.push_back(1.0);
    flat.multiplicities.push_back(60);
    HeatTraceReport r2 = heat_trace(flat, {1.0}, levels);
    CHECK(r2.verdicts[0] == TraceVerdict::diverging);

    SpectralModel slow;  // slowly decaying increments stay honest: undetermined
    slow.source = SpectrumSource::closed_form;
    for (int n = 0; n < 60; ++n) {
        slow.eigenvalues.push_back(1.0 + 1e-6 * n);
        slow.multiplicities.push_back(1);
    }
    HeatTraceReport r3 = heat_trace(slow, {1.0}, levels);
    CHECK(r3.verdicts[0] == TraceVerdict::undetermined);

    CHECK_THROWS_AS(heat_trace(SpectralModel{}, {1.0}, levels), DataError);
    CHECK_THROWS_AS(heat_trace(fast, {-1.0}, levels), ParameterDomainError);
}

TEST_CASE("trace threshold estimates") {
    CHECK(trace_threshold(shift_oracle(2, 14)) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(0.05));
    CHECK(trace_threshold(interval_oracle(500)) == doctest::Approx(0.5).epsilon(0.05));
    CHECK(trace_threshold(circle_oracle(500)) == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("trace threshold needs enough eigenvalues") {
    SpectralModel tiny;
    for (int n = 0; n < 10; ++n) {
        tiny.eigenvalues.push_back(n);
        tiny.multiplicities.push_back(1);
    }
    CHECK_THROWS_AS(trace_threshold(tiny), UndeterminedError);
}

TEST_CASE("log growth fit slope and affine invariance") {
    OracleSpectrum shift = shift_oracle(2, 14);
    std::vector<double> expanded = shift.expanded(32768);
    LogGrowthFit fit = log_growth_fit(expanded);
    CHECK(fit.slope == doctest::Approx(0.5 / std::log(2.0)).epsilon(0.03));

    std::vector<double> shifted = expanded;
    for (double& v : shifted) v += 5.0;
    LogGrowthFit fit2 = log_growth_fit(shifted);
    CHECK(fit2.slope == doctest::Approx(fit.slope).epsilon(1e-9));
    CHECK(fit2.intercept == doctest::Approx(fit.intercept + 5.0).epsilon(1e-9));

    OracleSpectrum interval = interval_oracle(2000);
    std::vector<double> iexp = interval.expanded(2001);
    CHECK(log_growth_fit(iexp).slope == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("singular value profile") {
    OracleSpectrum shift = shift_oracle(2, 20);
    std::vector<double> expanded = shift.expanded(100000);
    SingularProfile profile = singular_value_profile(expanded);
    CHECK(profile.s[0] == doctest::Approx(1.0));  // kernel eigenvalue 0
    for (std::size_t i = 1; i < profile.s.size(); ++i) CHECK(profile.s[i] <= profile.s[i - 1]);
    CHECK(profile.li_bound <= 3.2);

    // tail ratio of s_n log(n+2) is flat for all oracle families
    for (OracleSpectrum o : {shift_oracle(2, 20), interval_oracle(1), circle_oracle(1)}) {
        std::vector<double> e = o.expanded(100000);
        SingularProfile p = singular_value_profile(e);
        double lo = 1e300, hi = 0.0;
        for (std::size_t n = p.s.size() / 10; n < p.s.size(); ++n) {
            double v = p.s[n] * std::log(static_cast<double>(n) + 3.0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(hi / lo <= 4.0);
    }
}

TEST_CASE("square root ideal relation on oracles") {
    OracleSpectrum interval = interval_oracle(1);
    std::vector<double> expanded = interval.expanded(100000);
    // s_n((1 + Delta^{1/2})^-1)^2 log n bounded: |T|^2 in Li iff T in Li^{1/2}
    double sup = 0.0;
    for (std::size_t n = 0; n < expanded.size(); ++n) {
        double s = 1.0 / (1.0 + std::sqrt(expanded[n]));
        sup = std::max(sup, s * s * std::log(static_cast<double>(n) + 3.0));
    }
    CHECK(sup < 5.0);
}

TEST_CASE("verdicts are consistent with the estimated threshold") {
    OracleSpectrum oracle = interval_oracle(500);
    double estimate = trace_threshold(oracle);
    HeatTraceReport report = heat_trace(oracle, {0.45, 0.55, 0.7}, {100, 300, 500});
    for (std::size_t i = 0; i < report.t_grid.size(); ++i)
        if (report.verdicts[i] == TraceVerdict::converged)
            CHECK(report.t_grid[i] > 0.95 * estimate);
}

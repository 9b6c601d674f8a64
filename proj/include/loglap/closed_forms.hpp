#pragma once

#include <optional>
#include <vector>

#include "loglap/basis.hpp"
#include "loglap/form_engine.hpp"

namespace loglap {

// Lazily generated exact spectra of the three oracle families:
//   shift:    0 and 1 + (1-1/N) n with multiplicity N^n (N-1), n <= max level
//   interval: 0 and 2 h_n (harmonic numbers), multiplicity 1
//   circle:   0 and lam_k = 4 sum_{j<=k} 1/(2j-1), multiplicity 2
struct OracleSpectrum {
    enum class Family { shift, interval, circle };
    Family family = Family::interval;
    int N = 2;           // shift alphabet
    int max_level = 0;   // maxLevel / maxDegree / maxFreq

    // level 0 is the kernel eigenvalue 0 in every family
    int level_count() const { return max_level + (family == Family::shift ? 2 : 1); }
    double eigenvalue(int level) const;
    double multiplicity(int level) const;
    double t0_exact() const;  // N log N / (N-1), 1/2, 1/2

    SpectralModel to_model() const;
    // ascending multiplicity-expanded sequence of exactly `count` entries,
    // generating as many levels as needed
    std::vector<double> expanded(std::size_t count) const;
};

OracleSpectrum shift_oracle(int N, int max_level);
OracleSpectrum interval_oracle(int max_degree);
OracleSpectrum circle_oracle(int max_freq);

// Spec'd oracle constructors returning spectral models.
SpectralModel shift_spectrum(int N, int max_level);
SpectralModel interval_spectrum(int max_degree);

struct CircleSpectrumResult {
    SpectralModel model;
    bool under_resolved = false;  // quadNodes < 8 * maxFreq
};

// Circle eigenvalues by singularity-free quadrature of
// sin(ku/2)^2 / sin(u/2) (the integrand extends analytically to [0, 2pi]).
CircleSpectrumResult circle_spectrum(int max_freq, int quad_nodes);

// Single eigenvalue lam_k by quadrature, and the derived closed form
// 4 sum_{j<=k} 1/(2j-1) it is validated against.
double circle_eigenvalue_quadrature(int k, int quad_nodes);
double circle_eigenvalue_closed_form(int k);

}  // namespace loglap

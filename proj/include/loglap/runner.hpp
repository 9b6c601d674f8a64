#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "loglap/config.hpp"
#include "loglap/space.hpp"

namespace loglap {

struct RunOptions {
    std::string task;  // spectrum | heat-trace | threshold | dini | commutator |
                       // conformal | verify-ahlfors
    std::filesystem::path config_path;
    std::filesystem::path out_dir;
    std::optional<long> seed;  // overrides the config seed
    bool plot = false;
};

// Build the space described by the [space] section.
Space space_from_config(const Config& cfg);

// Node values of a named test function:
//   coordinate | const:<c> | cos:<k> | sin:<k> | abspow:<alpha>:<x0> |
//   legendre:<n> | indicator:<prefix> | wavelet:<level>:<index> |
//   random-pl:<segments> (seeded piecewise linear)
std::vector<double> node_values(const Space& space, const std::string& spec,
                                unsigned long seed = 12345);

// Dispatch one experiment; returns 0 on success and writes report files
// under out_dir. Throws ConfigParseError for malformed configs and the
// numeric error types for hard failures.
int run_config(const RunOptions& options);

}  // namespace loglap

// Verification suites and the batch driver behind the command line tool.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhyper/report.hpp"

namespace qhyper {

struct RunConfig {
  int ell = 3;
  int trunc_degree = 4;                // U-degree bound for the smash center
  int window = 2;                      // largest block index j for the annihilator products
  std::optional<long> weight_bound;    // lattice enumeration bound; default l + 3
  std::vector<std::string> suites;     // empty: all, in dependency order
  std::uint64_t seed = 1;
  std::string json_path;

  long effective_weight_bound() const { return weight_bound.value_or(ell + 3); }
};

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError for even or small l, nonpositive bounds, or unknown suites.
void validate(const RunConfig& cfg);

std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& cfg);
/// Validates, runs the selected suites and returns sorted reports.
std::vector<CheckReport> run(const RunConfig& cfg);

}  // namespace qhyper

#ifndef INFONET_HARNESS_HPP
#define INFONET_HARNESS_HPP

// Randomized identity checker. Samples joint distributions and flow networks
// from a seeded generator and measures the worst residual of each identity
// over all trials. Residuals are accumulated in bits; most tolerances are
// absolute in bits, a few are relative (flagged per result).

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace infonet::harness {

struct HarnessConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 10000;
  // Joint distribution shapes to cycle through, (rows, cols).
  std::vector<std::pair<std::size_t, std::size_t>> sizes = {
      {2, 2}, {3, 3}, {4, 7}, {10, 10}};
  double tolerance_bits = 1e-9;
};

struct IdentityResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool relative = false;  // true when max_residual is already a ratio
  bool pass = true;
  // Reproduction snapshot for the worst trial: shape and the probabilities
  // (or flows) that produced max_residual. Empty when the identity never
  // left zero residual.
  std::size_t worst_rows = 0;
  std::size_t worst_cols = 0;
  std::vector<double> worst_case;
};

struct HarnessReport {
  HarnessConfig config;
  std::vector<IdentityResult> results;
  bool all_pass = true;
};

HarnessReport run_identity_suite(const HarnessConfig& config);

}  // namespace infonet::harness

#endif  // INFONET_HARNESS_HPP

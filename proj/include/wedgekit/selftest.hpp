#pragma once

// Bounded exhaustive cross-checks of the decision procedures against the
// brute-force oracles.

#include <json.hpp>
#include <string>
#include <vector>

namespace wedgekit {

struct SuiteResult {
  std::string name;
  bool passed = false;
  nlohmann::json details;
};

/// Runs every suite; `bound` >= 1 scales the search sizes. Suites run in
/// parallel and are reported in a fixed order.
std::vector<SuiteResult> run_selftest(unsigned bound = 1);

}  // namespace wedgekit

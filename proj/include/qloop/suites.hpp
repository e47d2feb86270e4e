#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

struct CheckItem {
  int criterion;  // acceptance criterion the check belongs to (1..12)
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;
};

struct SuiteConfig {
  Scalar q = 2;
  long m_max = 3;
  long window = 0;  // 0: per-module default
  std::string suite = "all";
};

/// Valid suite names: presentation, drinfeld-oracle, theorem1, weyl, ideal,
/// walkprop, all.
std::vector<CheckItem> run_suite(const SuiteConfig& config);

bool all_pass(const std::vector<CheckItem>& items);

nlohmann::json suite_report(const std::vector<CheckItem>& items);

}  // namespace qloop

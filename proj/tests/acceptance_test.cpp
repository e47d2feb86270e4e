// Acceptance suite: runs every named verification suite at q = 2 and
// again at q = 3, aggregates the checks per criterion, and prints one
// pass/fail line for each. Exit code 0 iff everything passes.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qloop/suites.hpp"

using namespace qloop;

namespace {

const char* kCriterionNames[13] = {
    "",
    "presentation soundness (exact zero residuals)",
    "graded-matrix oracle and phi eigenvalues",
    "twist class nonzero with a single highest line",
    "self-extension dimension of string modules = 1",
    "self-extension dimension of tensor squares >= 2",
    "self-extension dimension of local Weyl modules = degree",
    "extension dimension across a simple tensor",
    "rank-two ideal quotient: codim 2, membership, non-split",
    "single-relation presentations and quotient dimensions",
    "simplicity classifications with certificates",
    "power factorization bookkeeping",
    "boundary-scalar forcing line",
};

}  // namespace

int main() {
  std::map<int, std::vector<const CheckItem*>> by_criterion;
  std::vector<std::vector<CheckItem>> runs;

  for (long qv : {2, 3}) {
    SuiteConfig cfg;
    cfg.q = Scalar(qv);
    cfg.m_max = 3;
    cfg.suite = "all";
    std::printf("-- running all suites at q = %ld --\n", qv);
    std::fflush(stdout);
    runs.push_back(run_suite(cfg));
  }
  for (const auto& run : runs)
    for (const auto& item : run) by_criterion[item.criterion].push_back(&item);

  bool all_ok = true;
  for (int crit = 1; crit <= 12; ++crit) {
    const auto& items = by_criterion[crit];
    bool ok = !items.empty();
    long failed = 0;
    for (const auto* it : items)
      if (!it->pass) {
        ok = false;
        ++failed;
      }
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %2d: %s (%zu checks%s)\n", ok ? "PASS" : "FAIL",
                crit, kCriterionNames[crit], items.size(),
                failed ? (", " + std::to_string(failed) + " failed").c_str()
                       : "");
    if (!ok)
      for (const auto* it : items)
        if (!it->pass)
          std::printf("       %s: expected %s, computed %s\n", it->name.c_str(),
                      it->expected.c_str(), it->computed.c_str());
  }
  std::printf("%s\n", all_ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return all_ok ? 0 : 1;
}

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace krank {

enum class CheckStatus { Pass, Erratum, Fail };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

/// Runs the brute-force oracles and the published-table regressions. Checks
/// whose name does not contain `filter` are skipped. Known errata are
/// reported with status Erratum and the computed value asserted.
std::vector<CheckResult> run_verify(std::string_view filter = {});

} // namespace krank

#pragma once

// The invariant suite behind `descent verify`: group-layer oracles, label
// bijections, agreement of the table constructions, the radical spans and
// the one-dimensional representations, for one (type, n, p).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "descent/coxeter.hpp"

namespace descent {

struct VerifyOptions {
  GroupType type = GroupType::D;
  int n = 3;
  std::optional<int> p;
  int threads = 1;
  /// 0 selects default_rank_bound.
  int rank_bound = 0;
  std::uint64_t seed = 0x5eed;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// First counterexample, or a short summary when passed.
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Observations that are reported but not judged.
  std::vector<std::string> notes;

  bool passed() const;
  const CheckResult* first_failure() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace descent

#pragma once

// Differential testing of every closed form against direct iteration.
//
// Trial i draws from stratum i mod k, so each parameter family with its own
// closed form is exercised, and is seeded with trial_seed(seed, i). Forbidden
// or singular draws are redrawn up to the retry cap, then counted as skipped.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sde/systems.hpp"

namespace sde {

/// Parameter families sampled by difftest, in trial order.
const std::vector<std::string_view>& strata(SystemKind system);

struct TrialResult {
  std::string stratum;
  bool skipped = false;
  /// check name ("product", "product-sweep", or a case tag) -> agreed
  std::map<std::string, bool> checks;
  std::optional<std::string> counterexample;

  bool passed() const { return !skipped && !counterexample; }
};

/// One trial: draw from `stratum`, then compare every applicable closed form
/// with iteration at all n <= N.
TrialResult run_trial(SystemKind system, std::size_t stratum, std::uint64_t seed, long N);

struct CheckTally {
  long run = 0;
  long agreed = 0;
};

struct DifftestReport {
  SystemKind system = SystemKind::A;
  long trials = 0;
  long N = 0;
  std::uint64_t seed = 0;
  std::string distribution;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::map<std::string, long> per_stratum;
  std::map<std::string, CheckTally> per_check;
  std::optional<long> first_failed_trial;
  std::optional<std::string> first_counterexample;

  bool all_passed() const { return failed == 0; }
};

/// `threads` = 0 uses the hardware concurrency. The report does not depend
/// on the thread count.
DifftestReport run_difftest(SystemKind system, long trials, long N, std::uint64_t seed,
                            unsigned threads = 0);

}  // namespace sde

// Self-certification suites. Every closed-form bound is cross-examined
// against the independent numerical maximizer and random sampling, and the
// structural identities (nu decomposition, engine agreement, tangle formulas,
// two-qubit isolation closure, branch continuity, stationarity) are verified
// at fixed tolerances. The full level runs the certification scales; quick
// shrinks qubit counts and restart budgets for a fast smoke pass.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace svet::checks {

enum class Level { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

using Reporter = std::function<void(const CheckResult&)>;

// The ten certification checks, in a fixed order. The reporter, when given,
// is called once per completed check.
std::vector<CheckResult> run_acceptance(Level level, const Reporter& report = {});

// Certification checks plus the cheaper auxiliary invariants (optimal-settings
// attainment, plus/minus symmetry, optimizer determinism, sampling caps).
std::vector<CheckResult> run_all(Level level, const Reporter& report = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace svet::checks

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "su2cs/su2_repr.hpp"

namespace su2cs {

struct Check {
  std::string name;
  int group = 0;  ///< acceptance group 1..10, 0 for module invariants only
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
  std::string note;  ///< set when the check threw instead of measuring
};

struct VerificationReport {
  std::vector<Check> checks;
  bool overall = false;
};

struct VerifyConfig {
  HalfInt jmax = HalfInt::from_int(10);
  int nmax = 20;
  std::uint64_t seed = 42;
};

/// A named, seeded property check. `run` returns the worst observed error;
/// it passes when that error is finite and <= tolerance.
struct CheckSpec {
  std::string name;
  int group;
  double tolerance;
  std::function<double(const VerifyConfig&, std::uint64_t)> run;
};

/// Every check, in report order.
const std::vector<CheckSpec>& check_registry();

/// Runs one registered check. The seed passed to it mixes cfg.seed with the
/// check name, so checks are independent of each other and of run order.
Check run_check(const CheckSpec& spec, const VerifyConfig& cfg);

/// Runs the checks accepted by `filter` (all when empty).
VerificationReport run_verification(const VerifyConfig& cfg,
                                    const std::function<bool(const CheckSpec&)>& filter = {});

}  // namespace su2cs

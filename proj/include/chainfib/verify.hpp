#pragma once

#include <string>
#include <vector>

#include "chainfib/bounds.hpp"

namespace chainfib {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a case count on success
};

// The seven whole-library checks: exact identities, oracle cross-checks and
// property sweeps. Each runs independently of the others.
std::vector<CheckResult> run_all_checks();

}  // namespace chainfib

#pragma once

#include <string>
#include <vector>

namespace gnepdeg {

struct SelftestCheck {
  std::string name;
  bool ok = false;
  std::string detail;  // empty when ok
};

// Built-in verification: six frozen game fixtures at every depth; identity
// suites and exhaustive cross-checks from depth 1 up.  `inject_fault`
// deliberately corrupts one expected value to exercise the failure path.
std::vector<SelftestCheck> run_selftest_checks(int depth, bool inject_fault);

}  // namespace gnepdeg

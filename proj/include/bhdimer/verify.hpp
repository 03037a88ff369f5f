#pragma once

#include <string>
#include <vector>

namespace bhdimer {

struct VerifyOptions {
  // Mutation fixture: flips the sign of H02 on the oracle side of the
  // route-equivalence group.
  bool inject_h02_sign_error = false;
};

struct VerifyGroupResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the built-in oracle and invariant suite.
std::vector<VerifyGroupResult> run_verification(const VerifyOptions& options = {});

}  // namespace bhdimer

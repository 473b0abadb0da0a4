#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lyu/algebra/field.hpp"

namespace lyu::cli {

struct ClaimResult {
  int n = 0;
  std::string claim;
  std::string expected;
  std::string computed;
  bool passed = false;
  std::string error;  // set when the computation itself failed
};

struct VerifyOptions {
  int from = 3;
  int to = 7;
  bool extended = false;
  FieldSpec field;
};

/// Largest cycle length accepted: 7, or 12 with `extended`.
int verify_cap(bool extended);

struct VerifyReport {
  FieldSpec field;
  std::vector<ClaimResult> claims;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_ascii() const;
};

/// Every cycle-graph claim that applies to C_n for n in [from, to]. Failed
/// computations are recorded per claim and do not stop the suite.
VerifyReport verify_cycle_claims(const VerifyOptions& options);

}  // namespace lyu::cli

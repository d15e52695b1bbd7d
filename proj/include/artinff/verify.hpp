#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artinff/finite_field.hpp"
#include "artinff/poly.hpp"

namespace artinff {

struct VerifyOptions {
  // Desk-scale default: enumeration-heavy suites skip combinations whose
  // scan exceeds this and report them as skipped.
  uint64_t cap = 1000000;
  unsigned threads = 1;
  // Test-only: name a suite to sabotage, proving the harness catches
  // failures.  Empty in normal runs.
  std::string inject_fault;
};

struct SuiteResult {
  std::string name;
  uint64_t checks = 0;
  uint64_t failures = 0;
  uint64_t skipped = 0;     // skipped sub-cases (cap)
  std::string detail;       // first failure / skip note
};

std::vector<SuiteResult> run_verify_battery(const VerifyOptions& opt);

// The test battery used throughout: (characteristic, g) pairs on P^1.
struct BatteryMember {
  uint32_t p;
  std::string g;
};
const std::vector<BatteryMember>& standard_battery();

// Brute-force geometricity oracle: scan all mu in F_q^x and test whether
// mu^-1 g is an ell-th power in K via factor_poly exponents plus an
// exhaustive ell-th-power scan for the residual unit.  Returns true iff g
// is geometric at ell.  Independent of the valuation fast path.
bool geometric_oracle(const RationalFunction& g, uint64_t ell);

}  // namespace artinff

#pragma once

#include <cstdint>
#include <vector>

#include "artinff/artin.hpp"
#include "artinff/poly.hpp"
#include "artinff/rational.hpp"

namespace artinff {

// Least d >= 1 with q^d = 1 mod ell; the residue degree [F_q(zeta_ell):F_q].
uint64_t mult_order_mod(uint64_t q, uint64_t ell);

enum class SplitCase {
  Geometric,        // Chebotarev case: P_ell = 1/ell
  NonGeomDividesN,  // non-geometric, splitting criterion holds: P_ell = 1
  NonGeomCoprimeN,  // non-geometric, criterion fails: P_ell = 0
  NotDividing       // ell does not divide q^n - 1: P_ell = 0
};

const char* split_case_name(SplitCase c);

struct SplitProbability {
  uint64_t ell;
  SplitCase split_case;
  Rat value;  // 0, 1/ell or 1
};

enum class HypothesisPolicy { Enforce, Allow };

// Heuristic probability that a degree-n prime splits completely in
// K(zeta_ell, g^(1/ell)).  Writing g = mu b^ell with r = ord(mu), the
// non-geometric value is 1 exactly when ell | (q-1)/r * (q^(n-1)+...+1).
// Enforce rejects full-power g (the derivation assumes it); Allow computes
// the congruence-table value anyway, which the splitting criterion still
// justifies, so empirical comparisons can run on degenerate inputs.
SplitProbability split_prob(const RationalFunction& g, uint64_t ell,
                            uint64_t n,
                            HypothesisPolicy policy = HypothesisPolicy::Enforce);

struct DensityReport {
  uint64_t n;
  std::vector<SplitProbability> factors;  // one per prime ell | q^n - 1
  Rat A;    // prod (1 - P_ell)
  Rat rhs;  // phi(q^n-1)/(q^n-1) * rho_g(n)
};

// Computes A and verifies the closed-form identity A = rhs exactly; a
// mismatch is an internal error, never data.
DensityReport density(const RationalFunction& g, uint64_t n);

struct EmpiricalSplit {
  uint64_t ell = 0;
  uint32_t n = 0;
  uint64_t split_points = 0;  // points with g^((q^n-1)/ell) = 1 mod P
  uint64_t total_points = 0;  // degree-n closed points with g regular, nonzero
  Rat observed;               // split/total (0 when total = 0)
  Rat predicted;              // P_ell, computed with HypothesisPolicy::Allow
};

// Exhaustive splitting census over degree-n closed points of P^1, including
// the infinite place when n = 1 and g is regular there.  Exact match with
// the predicted value is expected in non-geometric cases; geometric cases
// are Chebotarev-approximate and reported without a tolerance.
EmpiricalSplit empirical_split_check(const RationalFunction& g, uint64_t ell,
                                     uint32_t n,
                                     uint64_t cap = kDefaultEnumerationCap);

}  // namespace artinff

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artinff/geometry.hpp"
#include "artinff/poly.hpp"
#include "artinff/rational.hpp"

namespace artinff {

// Whether g can be written mu * b^ell with mu in F_q; when it can, the
// witness identity is verified exactly before the report is returned.
struct GeometricityReport {
  RationalFunction g;
  uint64_t ell;
  bool geometric;
  // (mu, b) with g = mu * b^ell; present iff !geometric
  std::optional<std::pair<FieldElement, RationalFunction>> witness;
};

// Valuation criterion: g is non-geometric at ell iff every finite valuation
// and v_infinity are divisible by ell.  Requires g nonconstant, ell prime,
// ell != char.
GeometricityReport is_geometric_at(const RationalFunction& g, uint64_t ell);

struct NonGeometricPrimeSet {
  RationalFunction g;
  std::vector<uint64_t> primes;  // sorted; every ell <= search_bound, != char
  uint64_t search_bound;         // = deg(g); no ell beyond it can fail
};
NonGeometricPrimeSet nongeometric_primes(const RationalFunction& g);

// Least prime ell | q-1 such that g is a full ell-th power in K (witness mu
// itself an ell-th power in F_q^x), or nothing.  The degenerate case of the
// counting theorem: when present, N_X(g,n) = 0 identically.
std::optional<uint64_t> full_power_obstruction(const RationalFunction& g);

struct RhoFactor {
  uint64_t ell;
  int64_t c_ell;  // c_ell(q^(n-1) + ... + 1)
  Rat factor;     // 1 - c_ell/phi(ell); 0 or ell/(ell-1)
};

struct RhoValue {
  uint64_t n;
  Rat value;  // product of factors; 0 or >= 1
  std::vector<RhoFactor> factors;
};

// rho over an explicitly given non-geometric prime set (each prime != char).
// Works for any n, also far beyond the enumeration cap: divisibility by
// q^n - 1 is decided through multiplicative orders mod ell.
RhoValue rho_from_primes(uint64_t q, const std::vector<uint64_t>& nongeom,
                         uint64_t n);

// The correction factor rho_g(n).  Throws full_power_error when g is a full
// ell-th power for some prime ell | q-1 (then the count vanishes for all n
// and the factor formula does not apply).
RhoValue rho(const RationalFunction& g, uint64_t n);

// rho_g(n) > 0 iff every ell in P_g dividing q^n-1 has ell | q-1 and
// ell does not divide n.
bool rho_positive(const RationalFunction& g, uint64_t n);

// n_m = 1 + m * prod_{ell | q-1} ell * prod_{ell not| q-1} (ell - 1) over
// the non-geometric primes, for m = 0..m_max; every returned n satisfies
// rho_positive.
std::vector<uint64_t> artin_n_generator(const RationalFunction& g,
                                        uint64_t m_max);

// Closed-point count on P^1: monic irreducibles of degree n (plus infinity
// when n = 1) at which g is regular, nonzero and primitive.
uint64_t count_artin_closed(const RationalFunction& g, uint32_t n,
                            uint64_t cap = kDefaultEnumerationCap,
                            unsigned threads = 1);

struct CountReport {
  uint64_t q = 0;
  uint32_t n = 0;
  int r = 1;
  std::optional<uint64_t> n_closed;  // P^1 only
  uint64_t n_points = 0;
  uint64_t generating_points = 0;  // n * n_points
  uint64_t r_count = 0;            // #R_g^(n)
  uint64_t zeros = 0, poles = 0;
  uint64_t excluded_indeterminate = 0;
  // rho is absent exactly when the full-power degeneracy applies; then the
  // theorem gives main term 0.
  std::optional<RhoValue> rho;
  std::optional<uint64_t> full_power_ell;
  Rat main_term;       // rho * phi(q^n-1) * q^(n(r-1)) / n
  double error_ratio;  // |N - main_term| / q^(n(r-1/2))
};

// Rational-point count: (1/n) #{rho in R_g^(n) : <g(rho)> = F_{q^n}^x}.
// On P^1 the closed-point algorithm runs as well and must agree exactly.
// For curve/P^2 functions the non-geometric prime set cannot be computed
// from a form ratio (that would need multivariate factorization), so it is
// declared by the caller; empty means geometric.
CountReport count_artin_points(
    const FunctionOnVariety& g, const VarietyModel& X, uint32_t n,
    uint64_t cap = kDefaultEnumerationCap, unsigned threads = 1,
    const std::vector<uint64_t>& declared_nongeometric = {});

enum class Hypothesis { Holds, OutOfHypothesis, Unchecked };

struct CharacterRow {
  uint64_t a;      // character index, gcd(a, delta) = 1
  double abs_s;    // |sum over R of chi_a(g(rho))|
  double ratio;    // abs_s / q^(n(r-1/2))
};

struct CharSumResult {
  uint64_t delta;
  CharacterClassCounts histogram;
  uint64_t trivial_sum;  // = #R_g^(n) exactly
  std::vector<CharacterRow> rows;
  Hypothesis hypothesis;
};

// Exact class histogram and per-character magnitudes for every character of
// exact order delta (> 1, delta | q^n-1).  The estimate's hypothesis (g
// geometric at some prime dividing delta) is checked on P^1; out-of-
// hypothesis runs throw unless explicitly allowed, and are flagged.
CharSumResult charsum_experiment(const FunctionOnVariety& g,
                                 const VarietyModel& X, uint32_t n,
                                 uint64_t delta,
                                 uint64_t cap = kDefaultEnumerationCap,
                                 bool allow_out_of_hypothesis = false);

// Moebius-expanded form of the generator indicator:
// phi(M)/M sum_{d | M} mu(d)/phi(d) c_d(log x); must equal
// indicator_generates everywhere.
int mobius_expansion_check(FieldElement x, const Factorization& fac,
                           uint64_t cap = kDefaultEnumerationCap);

}  // namespace artinff

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "artinff/intfactor.hpp"

namespace artinff {

// Default ceiling on any full enumeration of field elements / variety points
// (log tables, point scans).  Overridable per call and via the CLI --cap.
inline constexpr uint64_t kDefaultEnumerationCap = 20'000'000;

class FiniteField;

// An element of GF(p^k), stored as its canonical index: the coefficient
// vector (c_0, ..., c_{k-1}) read as the little-endian base-p integer
// sum c_i p^i.  Index order *is* the canonical element order.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FiniteField& f, uint64_t index) : f_(&f), v_(index) {}

  const FiniteField& field() const { return *f_; }
  uint64_t index() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::vector<uint32_t> coeffs() const;

  FieldElement operator+(FieldElement o) const;
  FieldElement operator-(FieldElement o) const;
  FieldElement operator*(FieldElement o) const;
  FieldElement operator/(FieldElement o) const;
  FieldElement operator-() const;
  FieldElement pow(uint64_t e) const;
  FieldElement inverse() const;

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.v_ == b.v_ && a.f_ == b.f_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }
  friend bool operator<(FieldElement a, FieldElement b) { return a.v_ < b.v_; }

  std::string str() const;

 private:
  const FiniteField* f_ = nullptr;
  uint64_t v_ = 0;
};

// GF(p^k) with the canonical modulus: the least monic irreducible of degree k
// over GF(p) in the order (degree, then little-endian base-p coefficient
// integer).  Two constructions of the same (p, k) are the same object.
class FiniteField {
 public:
  uint32_t characteristic() const { return p_; }
  uint32_t ext_degree() const { return k_; }
  uint64_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {*this, 0}; }
  FieldElement one() const { return {*this, 1 % q_}; }
  FieldElement element(uint64_t index) const;
  // Integer reduced mod p, placed in the prime subfield.
  FieldElement from_int(int64_t c) const;

  // Index-level arithmetic.
  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  uint64_t div(uint64_t a, uint64_t b) const;
  uint64_t pow(uint64_t a, uint64_t e) const;

  // Least primitive element in canonical order.
  FieldElement generator() const;
  const Factorization& unit_factorization() const;  // factorization of q-1

  // Discrete-log/antilog tables w.r.t. generator(); needs q <= cap.
  void build_tables(uint64_t cap = kDefaultEnumerationCap) const;
  bool tables_built() const { return tables_ready_; }
  uint32_t log(uint64_t index) const;  // index != 0; requires tables
  uint64_t exp(uint64_t e) const;      // generator()^e; requires tables
  const std::vector<uint32_t>& log_table(
      uint64_t cap = kDefaultEnumerationCap) const;

 private:
  friend const FiniteField& build_field(uint32_t p, uint32_t k);
  FiniteField(uint32_t p, uint32_t k);

  uint64_t mul_generic(uint64_t a, uint64_t b) const;

  uint32_t p_, k_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
  uint64_t modulus_mask2_ = 0;  // packed modulus when p == 2

  mutable std::once_flag gen_once_, fac_once_;
  mutable uint64_t generator_idx_ = 0;
  mutable Factorization unit_fac_;

  mutable std::mutex table_mutex_;
  mutable bool tables_ready_ = false;
  mutable std::vector<uint64_t> exp_;
  mutable std::vector<uint32_t> log_;
};

// Registry-backed constructor; idempotent and deterministic.
// Rejects composite or zero p and k == 0.
const FiniteField& build_field(uint32_t p, uint32_t k);

// Parse "p=7" or "p=2,k=3".
const FiniteField& parse_field_spec(const std::string& spec);
std::string field_spec_string(const FiniteField& f);

// Least d >= 1 with x^d = 1; fac must factor the unit group order q-1.
uint64_t mult_order(FieldElement x, const Factorization& fac);

// True iff x generates the unit group (vacuously true when q - 1 = 1).
bool is_primitive(FieldElement x, const Factorization& fac);

FieldElement canonical_generator(const FiniteField& f);

// The cyclic-group generator indicator f_G evaluated through characters:
// phi(M)/M * prod over primes p | M of (1 - c_p(log x)/phi(p)), with every
// inner character sum held as an exact Ramanujan integer.  Always 0 or 1,
// and equal to is_primitive.  Builds the log table if needed.
int indicator_generates(FieldElement x, const Factorization& fac,
                        uint64_t cap = kDefaultEnumerationCap);

// The embedding GF(p^k) -> GF(p^K) (k | K) sending the small field's
// representation root to its least root in the big field.  Deterministic;
// any other choice differs by Frobenius and leaves all counts unchanged.
class FieldEmbedding {
 public:
  FieldEmbedding(const FiniteField& src, const FiniteField& dst,
                 uint64_t cap = kDefaultEnumerationCap);
  const FiniteField& src() const { return *src_; }
  const FiniteField& dst() const { return *dst_; }
  uint64_t map_index(uint64_t src_index) const;
  FieldElement map(FieldElement x) const;

 private:
  const FiniteField* src_;
  const FiniteField* dst_;
  std::vector<uint64_t> root_powers_;  // theta^i, i < src.k
};

// Exact histogram of discrete-log residues mod delta over some point set;
// the bridge between exact counting and complex character sums.
struct CharacterClassCounts {
  uint64_t delta = 1;
  std::vector<uint64_t> counts;  // counts[j] = #{points : log g(rho) = j (delta)}
  FieldElement generator;        // the canonical generator the logs refer to

  uint64_t total() const {
    uint64_t s = 0;
    for (uint64_t c : counts) s += c;
    return s;
  }
};

}  // namespace artinff

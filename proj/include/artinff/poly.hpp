#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "artinff/finite_field.hpp"

namespace artinff {

// Dense univariate polynomial over GF(q); coefficients are element indices,
// little-endian, no trailing zeros.  The zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(const FiniteField& f) : f_(&f) {}
  static Poly from_indices(const FiniteField& f, std::vector<uint64_t> c);
  static Poly from_ints(const FiniteField& f,
                        const std::vector<int64_t>& ints);
  static Poly constant(FieldElement c);
  static Poly variable(const FiniteField& f);  // t

  const FiniteField& field() const { return *f_; }
  int degree() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  uint64_t coeff_index(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  FieldElement coeff(size_t i) const { return {*f_, coeff_index(i)}; }
  FieldElement leading_coeff() const;
  const std::vector<uint64_t>& indices() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // Canonical order: degree first, then coefficient vectors as base-q
  // integers (most significant coefficient decides).
  friend bool operator<(const Poly& a, const Poly& b);

  Poly make_monic() const;
  std::string str() const;

 private:
  const FiniteField* f_;
  std::vector<uint64_t> c_;
};

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_div(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic unless zero
Poly poly_pow(const Poly& a, uint64_t e);
Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod);
Poly poly_invmod(const Poly& a, const Poly& mod);
Poly poly_derivative(const Poly& a);
FieldElement poly_eval(const Poly& a, FieldElement x);
// Evaluate with coefficients pushed through an embedding; x lives in emb.dst().
FieldElement poly_eval_embedded(const Poly& a, FieldElement x,
                                const FieldEmbedding& emb);

// Rabin test; rejects constants.
bool is_irreducible(const Poly& f);

// Number of monic irreducibles of degree n over GF(q): (1/n) sum mu(d) q^(n/d).
uint64_t count_irreducibles(uint64_t q, uint32_t n);

// Visits every monic irreducible of degree n in canonical order.
// Requires q^n <= cap.
void for_each_irreducible(const FiniteField& f, uint32_t n,
                          const std::function<void(const Poly&)>& fn,
                          uint64_t cap = kDefaultEnumerationCap);
std::vector<Poly> enumerate_irreducibles(const FiniteField& f, uint32_t n,
                                         uint64_t cap = kDefaultEnumerationCap);

struct PolyFactorization {
  FieldElement unit;                           // leading coefficient
  std::vector<std::pair<Poly, int>> factors;   // monic irreducible, exponent

  Poly reassemble() const;
};

// Exact factorization; squarefree split + distinct/equal degree splitting
// with a deterministic seed, trial division by enumerated irreducibles for
// small degrees.
PolyFactorization factor_poly(const Poly& f);

// g = num/den in lowest terms with monic denominator; the canonical
// representation of an element of F_q(t), plus a distinguished zero.
struct RationalFunction {
  Poly num;
  Poly den;

  const FiniteField& field() const { return num.field(); }
  bool is_zero() const { return num.is_zero(); }
  bool is_constant() const { return num.is_constant() && den.is_one(); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RationalFunction& a,
                         const RationalFunction& b) {
    return !(a == b);
  }
  std::string str() const;
};

// Canonicalize a/b; rejects b = 0.
RationalFunction rf_make(const Poly& a, const Poly& b);
RationalFunction rf_constant(FieldElement c);

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_pow(const RationalFunction& a, uint64_t e);
RationalFunction rf_neg(const RationalFunction& a);

// v_P(g) for monic irreducible P; g != 0.
int64_t valuation(const RationalFunction& g, const Poly& P);
// v_infinity(g) = deg den - deg num; g != 0.
int64_t valuation_infinity(const RationalFunction& g);
// deg(g): zeros and poles counted with multiplicity over the algebraic
// closure, i.e. sum over finite places of |v_P| * deg P plus |v_inf|.
uint64_t deg_g(const RationalFunction& g);

struct ReduceOutcome {
  enum class Kind { Unit, Zero, Pole } kind;
  FieldElement value;  // meaningful only for Unit
};

// Image of g in F_q[t]/(P) presented inside the canonical GF(q^n), via the
// isomorphism sending t to the least root of P there.
ReduceOutcome reduce_mod(const RationalFunction& g, const Poly& P,
                         uint64_t cap = kDefaultEnumerationCap);

// Parse the t-grammar: integers (reduced mod p), t, + - * / ^, parentheses,
// and [idx] for explicit extension-field coefficients.
RationalFunction parse_rational_function(const FiniteField& f,
                                         const std::string& text);

}  // namespace artinff

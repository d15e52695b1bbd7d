#include "artinff/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "artinff/detail/zpx.hpp"
#include "artinff/errors.hpp"

namespace artinff {

namespace {

bool prime_base(const FiniteField& f) { return f.ext_degree() == 1; }

detail::zpx to_zpx(const Poly& a) {
  detail::zpx r(a.indices().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = (uint32_t)a.indices()[i];
  return r;
}

Poly from_zpx(const FiniteField& f, const detail::zpx& a) {
  std::vector<uint64_t> c(a.begin(), a.end());
  return Poly::from_indices(f, std::move(c));
}

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t seed_from_poly(const Poly& v) {
  uint64_t s = 0x243f6a8885a308d3ull ^ v.field().order();
  for (uint64_t c : v.indices()) {
    s ^= c + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
  }
  return s;
}

}  // namespace

Poly Poly::from_indices(const FiniteField& f, std::vector<uint64_t> c) {
  Poly p(f);
  while (!c.empty() && c.back() == 0) c.pop_back();
  for (uint64_t v : c)
    if (v >= f.order()) throw domain_error("Poly: coefficient out of range");
  p.c_ = std::move(c);
  return p;
}

Poly Poly::from_ints(const FiniteField& f, const std::vector<int64_t>& ints) {
  std::vector<uint64_t> c;
  c.reserve(ints.size());
  for (int64_t v : ints) c.push_back(f.from_int(v).index());
  return from_indices(f, std::move(c));
}

Poly Poly::constant(FieldElement c) {
  return from_indices(c.field(), {c.index()});
}

Poly Poly::variable(const FiniteField& f) { return from_indices(f, {0, 1}); }

FieldElement Poly::leading_coeff() const {
  if (c_.empty()) return f_->zero();
  return {*f_, c_.back()};
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = f_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return from_indices(*f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = f_->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return from_indices(*f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*f_);
  if (prime_base(*f_))
    return from_zpx(*f_, detail::zpx_mul(to_zpx(*this), to_zpx(o),
                                         f_->characteristic()));
  std::vector<uint64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = f_->add(c[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return from_indices(*f_, std::move(c));
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

Poly Poly::make_monic() const {
  if (is_zero() || is_monic()) return *this;
  uint64_t inv = f_->inv(c_.back());
  std::vector<uint64_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], inv);
  return from_indices(*f_, std::move(c));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  const FiniteField& f = *f_;
  for (size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!out.empty()) out += "+";
    FieldElement c(f, c_[i]);
    bool unit_coeff = c_[i] == 1;
    if (i == 0) {
      out += c.str();
    } else {
      if (!unit_coeff) out += c.str() + "*";
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw domain_error("poly_divrem: division by zero");
  const FiniteField& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<uint64_t> rem(a.indices());
  std::vector<uint64_t> quo(a.degree() - b.degree() + 1, 0);
  uint64_t lead_inv = f.inv(b.indices().back());
  int db = b.degree();
  for (int i = (int)rem.size() - 1; i >= db; --i) {
    uint64_t c = f.mul(rem[i], lead_inv);
    if (c) {
      quo[i - db] = c;
      for (int j = 0; j <= db; ++j)
        rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.indices()[j]));
    }
  }
  return {Poly::from_indices(f, std::move(quo)),
          Poly::from_indices(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }
Poly poly_div(const Poly& a, const Poly& b) { return poly_divrem(a, b).first; }

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

Poly poly_pow(const Poly& a, uint64_t e) {
  Poly r = Poly::from_indices(a.field(), {1});
  Poly base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod) {
  if (mod.degree() < 1) throw domain_error("poly_powmod: modulus is constant");
  const FiniteField& f = base.field();
  if (prime_base(f))
    return from_zpx(f, detail::zpx_powmod(to_zpx(base), e, to_zpx(mod),
                                          f.characteristic()));
  Poly r = Poly::from_indices(f, {1});
  Poly b = poly_mod(base, mod);
  while (e) {
    if (e & 1) r = poly_mod(r * b, mod);
    b = poly_mod(b * b, mod);
    e >>= 1;
  }
  return r;
}

Poly poly_invmod(const Poly& a, const Poly& mod) {
  if (mod.degree() < 1) throw domain_error("poly_invmod: modulus is constant");
  const FiniteField& f = a.field();
  if (prime_base(f))
    return from_zpx(f, detail::zpx_invmod(to_zpx(a), to_zpx(mod),
                                          f.characteristic()));
  Poly r0 = mod, r1 = poly_mod(a, mod);
  Poly s0 = Poly(f), s1 = Poly::from_indices(f, {1});
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divrem(r0, r1);
    Poly s2 = s0 - poly_mod(q * s1, mod);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = poly_mod(s2, mod);
  }
  if (r0.degree() != 0)
    throw domain_error("poly_invmod: element not invertible");
  return poly_mod(Poly::constant(r0.coeff(0).inverse()) * s0, mod);
}

Poly poly_derivative(const Poly& a) {
  const FiniteField& f = a.field();
  if (a.degree() < 1) return Poly(f);
  std::vector<uint64_t> c(a.degree());
  for (int i = 1; i <= a.degree(); ++i) {
    FieldElement scale = f.from_int(i);
    c[i - 1] = f.mul(a.coeff_index(i), scale.index());
  }
  return Poly::from_indices(f, std::move(c));
}

FieldElement poly_eval(const Poly& a, FieldElement x) {
  const FiniteField& f = a.field();
  uint64_t acc = 0;
  for (size_t i = a.indices().size(); i-- > 0;)
    acc = f.add(f.mul(acc, x.index()), a.indices()[i]);
  return {f, acc};
}

FieldElement poly_eval_embedded(const Poly& a, FieldElement x,
                                const FieldEmbedding& emb) {
  const FiniteField& big = emb.dst();
  uint64_t acc = 0;
  for (size_t i = a.indices().size(); i-- > 0;)
    acc = big.add(big.mul(acc, x.index()), emb.map_index(a.indices()[i]));
  return {big, acc};
}

bool is_irreducible(const Poly& f) {
  int n = f.degree();
  if (n < 1) throw domain_error("is_irreducible: constant polynomial");
  const FiniteField& F = f.field();
  if (prime_base(F))
    return detail::zpx_irreducible(to_zpx(f.make_monic()), F.characteristic());
  if (n == 1) return true;
  uint64_t q = F.order();
  Poly x = Poly::variable(F);
  Poly fr = x;
  Factorization nf = factor_integer((uint64_t)n);
  Poly fm = f.make_monic();
  for (int i = 1; i <= n; ++i) {
    fr = poly_powmod(fr, q, fm);
    for (auto [d, e] : nf.factors) {
      if (i == n / (int)d) {
        Poly g = poly_gcd(fr - x, fm);
        if (g.degree() != 0) return false;
      }
    }
  }
  return fr == x;
}

uint64_t count_irreducibles(uint64_t q, uint32_t n) {
  Factorization nf = factor_integer(n);
  int64_t total = 0;
  for (uint64_t d : divisors(nf)) {
    int mu = mobius(d);
    if (!mu) continue;
    uint64_t pw = 1;
    for (uint32_t i = 0; i < n / d; ++i) pw *= q;
    total += mu * (int64_t)pw;
  }
  return (uint64_t)(total / (int64_t)n);
}

void for_each_irreducible(const FiniteField& f, uint32_t n,
                          const std::function<void(const Poly&)>& fn,
                          uint64_t cap) {
  if (n < 1) throw domain_error("for_each_irreducible: n must be >= 1");
  uint64_t q = f.order();
  uint64_t total = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (total > cap / q)
      throw cap_error("for_each_irreducible: q^n exceeds cap");
    total *= q;
  }

  if (prime_base(f)) {
    uint32_t p = f.characteristic();
    detail::zpx cand(n + 1, 0);
    cand[n] = 1;
    for (uint64_t c = 0; c < total; ++c) {
      uint64_t v = c;
      for (uint32_t i = 0; i < n; ++i) {
        cand[i] = (uint32_t)(v % p);
        v /= p;
      }
      if (n >= 2) {
        bool has_root = false;
        for (uint32_t x = 0; x < p; ++x)
          if (detail::zpx_eval(cand, x, p) == 0) {
            has_root = true;
            break;
          }
        if (has_root) continue;
        // No roots is decisive for n = 2, 3; larger n needs the full test.
        if (n >= 4 && !detail::zpx_irreducible(cand, p)) continue;
      }
      std::vector<uint64_t> idx(cand.begin(), cand.end());
      fn(Poly::from_indices(f, std::move(idx)));
    }
    return;
  }

  // Generic base field: counter in base q over the low coefficients.
  std::vector<uint64_t> digits(n, 0);
  bool small_field = q <= 64;
  while (true) {
    std::vector<uint64_t> idx(digits.begin(), digits.end());
    idx.push_back(1);
    Poly cand = Poly::from_indices(f, std::move(idx));
    bool ok = true;
    if (n >= 2 && small_field) {
      for (uint64_t x = 0; x < q && ok; ++x)
        if (poly_eval(cand, f.element(x)).is_zero()) ok = false;
    }
    if (ok && n >= 2 && (!small_field || n >= 4)) ok = is_irreducible(cand);
    if (ok) fn(cand);
    size_t i = 0;
    while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
    if (i == digits.size()) break;
  }
}

std::vector<Poly> enumerate_irreducibles(const FiniteField& f, uint32_t n,
                                         uint64_t cap) {
  std::vector<Poly> out;
  for_each_irreducible(f, n, [&](const Poly& p) { out.push_back(p); }, cap);
  return out;
}

Poly PolyFactorization::reassemble() const {
  Poly r = Poly::constant(unit);
  for (const auto& [p, e] : factors) r = r * poly_pow(p, (uint64_t)e);
  return r;
}

namespace {

// p-th root of a polynomial whose derivative vanishes: m(t) = h(t^p).
Poly pth_root(const Poly& m) {
  const FiniteField& f = m.field();
  uint32_t p = f.characteristic();
  uint64_t root_exp = f.order() / p;  // c -> c^(q/p) inverts c -> c^p
  std::vector<uint64_t> c;
  for (int i = 0; i <= m.degree(); i += p)
    c.push_back(f.pow(m.coeff_index(i), root_exp));
  return Poly::from_indices(f, std::move(c));
}

void squarefree_split(const Poly& m, int mult,
                      std::vector<std::pair<Poly, int>>& out) {
  const FiniteField& f = m.field();
  uint32_t p = f.characteristic();
  if (m.degree() < 1) return;
  Poly d = poly_derivative(m);
  if (d.is_zero()) {
    squarefree_split(pth_root(m), mult * (int)p, out);
    return;
  }
  Poly c = poly_gcd(m, d);
  Poly w = poly_div(m, c);
  int i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly z = poly_div(w, y);
    if (!z.is_one()) out.push_back({z.make_monic(), mult * i});
    w = std::move(y);
    c = poly_div(c, w);
    ++i;
  }
  if (!c.is_one()) squarefree_split(pth_root(c), mult * (int)p, out);
}

// Distinct-degree split of a squarefree monic u: (product, degree) pairs.
std::vector<std::pair<Poly, int>> distinct_degree_split(Poly u) {
  const FiniteField& f = u.field();
  uint64_t q = f.order();
  std::vector<std::pair<Poly, int>> out;
  Poly x = Poly::variable(f);
  Poly h = poly_mod(x, u);
  int i = 1;
  while (u.degree() >= 2 * i) {
    h = poly_powmod(h, q, u);
    Poly g = poly_gcd(h - x, u);
    if (g.degree() > 0) {
      out.push_back({g, i});
      u = poly_div(u, g);
      h = poly_mod(h, u);
    }
    ++i;
  }
  if (u.degree() > 0) out.push_back({u, u.degree()});
  return out;
}

uint64_t pow_checked(uint64_t q, int d) {
  uint64_t r = 1;
  for (int i = 0; i < d; ++i) {
    if (r > ((uint64_t)1 << 62) / q)
      throw cap_error("factor_poly: q^d exceeds 64-bit working range");
    r *= q;
  }
  return r;
}

void equal_degree_split(const Poly& v, int d, uint64_t& rng,
                        std::vector<Poly>& out) {
  const FiniteField& f = v.field();
  if (v.degree() == d) {
    out.push_back(v.make_monic());
    return;
  }
  uint64_t q = f.order();
  int deg_v = v.degree();
  while (true) {
    std::vector<uint64_t> rc(deg_v);
    for (auto& c : rc) c = splitmix64(rng) % q;
    Poly a = Poly::from_indices(f, std::move(rc));
    if (a.degree() < 1) continue;
    Poly g(f);
    if (f.characteristic() == 2) {
      // additive trace map: sum of a^(2^j) for j < d * log2(q)
      uint32_t bits = 0;
      for (uint64_t t = q; t > 1; t >>= 1) ++bits;
      Poly acc = a, cur = a;
      for (uint32_t j = 1; j < (uint32_t)d * bits; ++j) {
        cur = poly_mod(cur * cur, v);
        acc = acc + cur;
      }
      g = poly_gcd(acc, v);
    } else {
      uint64_t e = (pow_checked(q, d) - 1) / 2;
      Poly w = poly_powmod(a, e, v) - Poly::from_indices(f, {1});
      g = poly_gcd(w, v);
    }
    if (g.degree() > 0 && g.degree() < deg_v) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(poly_div(v, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

PolyFactorization factor_poly(const Poly& f) {
  if (f.is_zero()) throw domain_error("factor_poly: zero polynomial");
  const FiniteField& F = f.field();
  PolyFactorization out{f.leading_coeff(), {}};
  Poly m = f.make_monic();
  if (m.degree() < 1) return out;

  // Small inputs over tiny fields: exhaustive trial division by enumerated
  // irreducibles; everything else goes through DDF/EDF.
  if (m.degree() <= 8 && F.order() <= 4) {
    for (int d = 1; d <= m.degree() / 2 && m.degree() > 0; ++d) {
      for_each_irreducible(F, d, [&](const Poly& p) {
        int e = 0;
        while (true) {
          auto [quo, rem] = poly_divrem(m, p);
          if (!rem.is_zero()) break;
          m = quo;
          ++e;
        }
        if (e) out.factors.push_back({p, e});
      });
    }
    if (m.degree() > 0) out.factors.push_back({m, 1});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  std::vector<std::pair<Poly, int>> squarefree;
  squarefree_split(m, 1, squarefree);
  uint64_t rng = seed_from_poly(m);
  for (const auto& [w, mult] : squarefree) {
    for (const auto& [prod, d] : distinct_degree_split(w)) {
      std::vector<Poly> irr;
      equal_degree_split(prod, d, rng, irr);
      for (const Poly& p : irr) out.factors.push_back({p, mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

RationalFunction rf_make(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw domain_error("rf_make: zero denominator");
  const FiniteField& f = a.field();
  if (a.is_zero())
    return {Poly(f), Poly::from_indices(f, {1})};
  Poly g = poly_gcd(a, b);
  Poly num = poly_div(a, g);
  Poly den = poly_div(b, g);
  uint64_t lead_inv = f.inv(den.leading_coeff().index());
  Poly scale = Poly::constant(FieldElement(f, lead_inv));
  return {num * scale, den * scale};
}

RationalFunction rf_constant(FieldElement c) {
  const FiniteField& f = c.field();
  return rf_make(Poly::constant(c), Poly::from_indices(f, {1}));
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
  return rf_make(a.num * b.den + b.num * a.den, a.den * b.den);
}
RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b) {
  return rf_make(a.num * b.den - b.num * a.den, a.den * b.den);
}
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
  return rf_make(a.num * b.num, a.den * b.den);
}
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw domain_error("rf_div: division by zero");
  return rf_make(a.num * b.den, a.den * b.num);
}
RationalFunction rf_pow(const RationalFunction& a, uint64_t e) {
  return rf_make(poly_pow(a.num, e), poly_pow(a.den, e));
}
RationalFunction rf_neg(const RationalFunction& a) {
  const FiniteField& f = a.field();
  return {Poly::constant(-f.one()) * a.num, a.den};
}

std::string RationalFunction::str() const {
  if (den.is_one()) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

int64_t valuation(const RationalFunction& g, const Poly& P) {
  if (g.is_zero()) throw domain_error("valuation: g = 0");
  if (!P.is_monic() || P.degree() < 1 || !is_irreducible(P))
    throw domain_error("valuation: P must be monic irreducible");
  auto mult = [&](const Poly& a) {
    int64_t v = 0;
    Poly cur = a;
    while (true) {
      auto [quo, rem] = poly_divrem(cur, P);
      if (!rem.is_zero()) break;
      cur = quo;
      ++v;
    }
    return v;
  };
  return mult(g.num) - mult(g.den);
}

int64_t valuation_infinity(const RationalFunction& g) {
  if (g.is_zero()) throw domain_error("valuation_infinity: g = 0");
  return (int64_t)g.den.degree() - (int64_t)g.num.degree();
}

uint64_t deg_g(const RationalFunction& g) {
  if (g.is_zero()) throw domain_error("deg_g: g = 0");
  uint64_t total = 0;
  for (const Poly* part : {&g.num, &g.den}) {
    if (part->degree() < 1) continue;
    PolyFactorization fac = factor_poly(*part);
    for (const auto& [p, e] : fac.factors)
      total += (uint64_t)e * (uint64_t)p.degree();
  }
  int64_t vinf = valuation_infinity(g);
  total += (uint64_t)(vinf < 0 ? -vinf : vinf);
  return total;
}

ReduceOutcome reduce_mod(const RationalFunction& g, const Poly& P,
                         uint64_t cap) {
  if (g.is_zero()) throw domain_error("reduce_mod: g = 0");
  if (!P.is_monic() || P.degree() < 1 || !is_irreducible(P))
    throw domain_error("reduce_mod: P must be monic irreducible");
  const FiniteField& base = g.field();
  uint32_t n = (uint32_t)P.degree();
  const FiniteField& big =
      build_field(base.characteristic(), base.ext_degree() * n);
  Poly rnum = poly_mod(g.num, P);
  Poly rden = poly_mod(g.den, P);
  if (rnum.is_zero() && rden.is_zero())
    throw internal_error("reduce_mod: num and den share the factor P");
  if (rnum.is_zero()) return {ReduceOutcome::Kind::Zero, big.zero()};
  if (rden.is_zero()) return {ReduceOutcome::Kind::Pole, big.zero()};
  big.build_tables(cap);
  FieldEmbedding emb(base, big, cap);
  // canonical-least root of P in the big field
  FieldElement theta = big.zero();
  bool found = false;
  for (uint64_t x = 0; x < big.order(); ++x) {
    if (poly_eval_embedded(P, big.element(x), emb).is_zero()) {
      theta = big.element(x);
      found = true;
      break;
    }
  }
  if (!found) throw internal_error("reduce_mod: P has no root in GF(q^n)");
  FieldElement a = poly_eval_embedded(rnum, theta, emb);
  FieldElement b = poly_eval_embedded(rden, theta, emb);
  return {ReduceOutcome::Kind::Unit, a / b};
}

namespace {

struct RfParser {
  const FiniteField& f;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw config_error("rational function parse error at position " +
                       std::to_string(pos) + ": " + why + " in \"" + s + "\"");
  }

  uint64_t number() {
    skip_ws();
    if (pos >= s.size() || !isdigit((unsigned char)s[pos])) fail("number expected");
    uint64_t v = 0;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) {
      v = v * 10 + (uint64_t)(s[pos] - '0');
      if (v > ((uint64_t)1 << 62)) fail("number too large");
      ++pos;
    }
    return v;
  }

  RationalFunction atom() {
    skip_ws();
    if (eat('(')) {
      RationalFunction e = expr();
      if (!eat(')')) fail("')' expected");
      return e;
    }
    if (eat('[')) {
      uint64_t idx = number();
      if (!eat(']')) fail("']' expected");
      if (idx >= f.order()) fail("element index out of range");
      return rf_constant(f.element(idx));
    }
    if (pos < s.size() && (s[pos] == 't' || s[pos] == 'T')) {
      ++pos;
      return rf_make(Poly::variable(f), Poly::from_indices(f, {1}));
    }
    if (pos < s.size() && isdigit((unsigned char)s[pos]))
      return rf_constant(f.from_int((int64_t)number()));
    fail("operand expected");
  }

  RationalFunction power() {
    RationalFunction base = atom();
    skip_ws();
    if (eat('^')) {
      uint64_t e = number();
      return rf_pow(base, e);
    }
    return base;
  }

  RationalFunction unary() {
    skip_ws();
    if (eat('-')) return rf_neg(unary());
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      skip_ws();
      if (eat('*'))
        acc = rf_mul(acc, unary());
      else if (eat('/')) {
        RationalFunction rhs = unary();
        if (rhs.is_zero()) fail("division by zero");
        acc = rf_div(acc, rhs);
      } else
        break;
    }
    return acc;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      skip_ws();
      if (eat('+'))
        acc = rf_add(acc, term());
      else if (peek('-')) {
        ++pos;
        acc = rf_sub(acc, term());
      } else
        break;
    }
    return acc;
  }

  RationalFunction parse() {
    RationalFunction e = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing characters");
    return e;
  }
};

}  // namespace

RationalFunction parse_rational_function(const FiniteField& f,
                                         const std::string& text) {
  RfParser p{f, text};
  return p.parse();
}

}  // namespace artinff

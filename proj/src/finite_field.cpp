#include "artinff/finite_field.hpp"

#include <array>
#include <cassert>
#include <map>

#include "artinff/detail/zpx.hpp"
#include "artinff/errors.hpp"
#include "artinff/rational.hpp"

namespace artinff {

namespace {

constexpr int kMaxDigits = 64;

void decode(uint64_t v, uint32_t p, uint32_t k, uint32_t* out) {
  for (uint32_t i = 0; i < k; ++i) {
    out[i] = (uint32_t)(v % p);
    v /= p;
  }
}

uint64_t encode(const uint32_t* d, uint32_t p, uint32_t k) {
  uint64_t v = 0;
  for (uint32_t i = k; i-- > 0;) v = v * p + d[i];
  return v;
}

uint64_t clmul(uint64_t a, uint64_t b) {
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

uint64_t modpoly2(uint64_t a, uint64_t m, int dm) {
  while (a >> dm) {
    int da = 63 - __builtin_clzll(a);
    a ^= m << (da - dm);
  }
  return a;
}

}  // namespace

FiniteField::FiniteField(uint32_t p, uint32_t k) : p_(p), k_(k) {
  if (!is_prime_u64(p)) throw domain_error("build_field: p must be prime");
  if (k == 0) throw domain_error("build_field: k must be positive");
  q_ = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (q_ > (uint64_t)1 << 62) throw domain_error("build_field: p^k too large");
    q_ *= p;
  }
  if (k_ > 1 && q_ > ((uint64_t)1 << 62))
    throw domain_error("build_field: p^k too large");
  // Canonical modulus: least monic irreducible of degree k in the
  // (degree, coefficient-integer) order.
  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    uint64_t qk = q_;  // p^k candidates for the low coefficients
    for (uint64_t c = 0; c < qk; ++c) {
      detail::zpx f(k + 1, 0);
      uint64_t v = c;
      for (uint32_t i = 0; i < k; ++i) {
        f[i] = (uint32_t)(v % p);
        v /= p;
      }
      f[k] = 1;
      if (detail::zpx_irreducible(f, p)) {
        modulus_.assign(f.begin(), f.end());
        break;
      }
    }
    if (modulus_.empty())
      throw internal_error("build_field: no irreducible modulus found");
  }
  if (p_ == 2)
    for (uint32_t i = 0; i < modulus_.size(); ++i)
      if (modulus_[i]) modulus_mask2_ |= 1ull << i;
}

const FiniteField& build_field(uint32_t p, uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FiniteField>>
      registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it == registry.end()) {
    auto f = std::unique_ptr<FiniteField>(new FiniteField(p, k));
    it = registry.emplace(key, std::move(f)).first;
  }
  return *it->second;
}

FieldElement FiniteField::element(uint64_t index) const {
  if (index >= q_) throw domain_error("element index out of range");
  return {*this, index};
}

FieldElement FiniteField::from_int(int64_t c) const {
  int64_t r = c % (int64_t)p_;
  if (r < 0) r += p_;
  return {*this, (uint64_t)r};
}

uint64_t FiniteField::add(uint64_t a, uint64_t b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t da[kMaxDigits], db[kMaxDigits];
  decode(a, p_, k_, da);
  decode(b, p_, k_, db);
  for (uint32_t i = 0; i < k_; ++i) {
    da[i] += db[i];
    if (da[i] >= p_) da[i] -= p_;
  }
  return encode(da, p_, k_);
}

uint64_t FiniteField::neg(uint64_t a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t d[kMaxDigits];
  decode(a, p_, k_, d);
  for (uint32_t i = 0; i < k_; ++i)
    if (d[i]) d[i] = p_ - d[i];
  return encode(d, p_, k_);
}

uint64_t FiniteField::sub(uint64_t a, uint64_t b) const {
  return add(a, neg(b));
}

uint64_t FiniteField::mul_generic(uint64_t a, uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return a * b % p_;
  if (p_ == 2) return modpoly2(clmul(a, b), modulus_mask2_, (int)k_);
  uint32_t da[kMaxDigits], db[kMaxDigits];
  decode(a, p_, k_, da);
  decode(b, p_, k_, db);
  uint64_t prod[2 * kMaxDigits] = {0};
  for (uint32_t i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (uint32_t j = 0; j < k_; ++j) prod[i + j] += (uint64_t)da[i] * db[j];
  }
  // Modulus is monic: substitute t^i = -t^(i-k) * (m_0 + ... + m_{k-1} t^{k-1}).
  for (uint32_t i = 2 * k_ - 2; i >= k_; --i) {
    uint64_t c = prod[i] % p_;
    if (c) {
      for (uint32_t j = 0; j < k_; ++j) {
        uint64_t sub = c * modulus_[j] % p_;
        prod[i - k_ + j] += p_ - sub;
      }
    }
    prod[i] = 0;
    if (i == k_) break;
  }
  uint32_t out[kMaxDigits];
  for (uint32_t i = 0; i < k_; ++i) out[i] = (uint32_t)(prod[i] % p_);
  return encode(out, p_, k_);
}

uint64_t FiniteField::mul(uint64_t a, uint64_t b) const {
  if (tables_ready_) {
    if (a == 0 || b == 0) return 0;
    uint64_t e = (uint64_t)log_[a] + log_[b];
    uint64_t m = q_ - 1;
    return exp_[e >= m ? e - m : e];
  }
  return mul_generic(a, b);
}

uint64_t FiniteField::pow(uint64_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 % q_ : 0;
  uint64_t m = q_ - 1;
  if (m == 0) return a;  // GF(2): only unit is 1
  uint64_t er = e % m;
  if (tables_ready_)
    return exp_[(uint64_t)((__uint128_t)log_[a] * er % m)];
  uint64_t r = 1, base = a;
  while (er) {
    if (er & 1) r = mul_generic(r, base);
    base = mul_generic(base, base);
    er >>= 1;
  }
  return r;
}

uint64_t FiniteField::inv(uint64_t a) const {
  if (a == 0) throw domain_error("inverse of zero");
  if (tables_ready_) {
    uint64_t m = q_ - 1;
    return exp_[(m - log_[a]) % m];
  }
  return pow(a, q_ - 2);
}

uint64_t FiniteField::div(uint64_t a, uint64_t b) const {
  return mul(a, inv(b));
}

const Factorization& FiniteField::unit_factorization() const {
  std::call_once(fac_once_, [&] {
    unit_fac_ = q_ > 1 ? factor_integer(q_ - 1) : Factorization{};
    if (q_ - 1 == 0) unit_fac_.n = 1;
  });
  return unit_fac_;
}

FieldElement FiniteField::generator() const {
  std::call_once(gen_once_, [&] {
    const Factorization& fac = unit_factorization();
    for (uint64_t x = 1; x < q_; ++x) {
      bool prim = true;
      for (auto [l, e] : fac.factors) {
        if (pow(x, (q_ - 1) / l) == 1) {
          prim = false;
          break;
        }
      }
      if (prim) {
        generator_idx_ = x;
        return;
      }
    }
    throw internal_error("generator: no primitive element found");
  });
  return {*this, generator_idx_};
}

void FiniteField::build_tables(uint64_t cap) const {
  std::lock_guard<std::mutex> lock(table_mutex_);
  if (tables_ready_) return;
  if (q_ > cap)
    throw cap_error("log_table: field order " + std::to_string(q_) +
                    " exceeds enumeration cap " + std::to_string(cap));
  uint64_t zeta = generator().index();
  uint64_t m = q_ - 1;
  exp_.assign(m, 0);
  log_.assign(q_, 0);
  uint64_t x = 1;
  for (uint64_t j = 0; j < m; ++j) {
    exp_[j] = x;
    log_[x] = (uint32_t)j;
    x = mul_generic(x, zeta);
  }
  if (x != 1) throw internal_error("build_tables: generator order mismatch");
  tables_ready_ = true;
}

uint32_t FiniteField::log(uint64_t index) const {
  if (!tables_ready_) throw internal_error("log: tables not built");
  if (index == 0) throw domain_error("log of zero");
  return log_[index];
}

uint64_t FiniteField::exp(uint64_t e) const {
  if (!tables_ready_) throw internal_error("exp: tables not built");
  uint64_t m = q_ - 1;
  return m == 0 ? 1 : exp_[e % m];
}

const std::vector<uint32_t>& FiniteField::log_table(uint64_t cap) const {
  build_tables(cap);
  return log_;
}

std::vector<uint32_t> FieldElement::coeffs() const {
  const FiniteField& f = field();
  std::vector<uint32_t> c(f.ext_degree());
  uint64_t v = v_;
  for (auto& d : c) {
    d = (uint32_t)(v % f.characteristic());
    v /= f.characteristic();
  }
  return c;
}

FieldElement FieldElement::operator+(FieldElement o) const {
  return {*f_, f_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(FieldElement o) const {
  return {*f_, f_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(FieldElement o) const {
  return {*f_, f_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(FieldElement o) const {
  return {*f_, f_->div(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {*f_, f_->neg(v_)}; }
FieldElement FieldElement::pow(uint64_t e) const {
  return {*f_, f_->pow(v_, e)};
}
FieldElement FieldElement::inverse() const { return {*f_, f_->inv(v_)}; }

std::string FieldElement::str() const {
  if (f_ == nullptr) return "?";
  if (f_->ext_degree() == 1) return std::to_string(v_);
  return "[" + std::to_string(v_) + "]";
}

const FiniteField& parse_field_spec(const std::string& spec) {
  uint32_t p = 0, k = 1;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == '\t')) ++pos;
  };
  auto expect = [&](const std::string& tok) {
    skip_ws();
    if (spec.compare(pos, tok.size(), tok) != 0)
      throw config_error("field spec: expected '" + tok + "' in \"" + spec +
                         "\"");
    pos += tok.size();
  };
  auto read_uint = [&]() -> uint64_t {
    skip_ws();
    size_t start = pos;
    uint64_t v = 0;
    while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9') {
      v = v * 10 + (spec[pos] - '0');
      ++pos;
    }
    if (pos == start) throw config_error("field spec: number expected");
    return v;
  };
  expect("p");
  expect("=");
  p = (uint32_t)read_uint();
  skip_ws();
  if (pos < spec.size() && spec[pos] == ',') {
    ++pos;
    expect("k");
    expect("=");
    k = (uint32_t)read_uint();
  }
  skip_ws();
  if (pos != spec.size())
    throw config_error("field spec: trailing characters in \"" + spec + "\"");
  try {
    return build_field(p, k);
  } catch (const domain_error& e) {
    throw config_error(std::string("field spec: ") + e.what());
  }
}

std::string field_spec_string(const FiniteField& f) {
  std::string s = "p=" + std::to_string(f.characteristic());
  if (f.ext_degree() > 1) s += ",k=" + std::to_string(f.ext_degree());
  return s;
}

uint64_t mult_order(FieldElement x, const Factorization& fac) {
  if (x.is_zero()) throw domain_error("mult_order: x must be nonzero");
  const FiniteField& f = x.field();
  if (fac.n != f.order() - 1)
    throw domain_error("mult_order: factorization must be of q-1");
  uint64_t d = fac.n;
  if (d == 0) return 1;
  for (auto [l, e] : fac.factors) {
    for (int i = 0; i < e; ++i) {
      if (d % l == 0 && f.pow(x.index(), d / l) == 1)
        d /= l;
      else
        break;
    }
  }
  return d;
}

bool is_primitive(FieldElement x, const Factorization& fac) {
  if (x.is_zero()) throw domain_error("is_primitive: x must be nonzero");
  const FiniteField& f = x.field();
  if (fac.n != f.order() - 1)
    throw domain_error("is_primitive: factorization must be of q-1");
  for (auto [l, e] : fac.factors)
    if (f.pow(x.index(), (f.order() - 1) / l) == 1) return false;
  return true;
}

FieldElement canonical_generator(const FiniteField& f) {
  return f.generator();
}

int indicator_generates(FieldElement x, const Factorization& fac,
                        uint64_t cap) {
  if (x.is_zero()) throw domain_error("indicator_generates: x must be nonzero");
  const FiniteField& f = x.field();
  if (fac.n != f.order() - 1)
    throw domain_error("indicator_generates: factorization must be of q-1");
  f.build_tables(cap);
  uint64_t m = f.order() - 1;
  if (m == 0) return 1;  // trivial group: empty product, phi(1)/1 = 1
  int64_t j = (int64_t)f.log(x.index());
  Rat val((int64_t)euler_phi(fac), (int64_t)m);
  for (auto [l, e] : fac.factors) {
    (void)e;
    int64_t c = ramanujan_sum(l, j);
    val = val * (Rat(1) - Rat(c, (int64_t)(l - 1)));
  }
  if (val == Rat(1)) return 1;
  if (val == Rat(0)) return 0;
  throw internal_error("indicator_generates: value is neither 0 nor 1");
}

FieldEmbedding::FieldEmbedding(const FiniteField& src, const FiniteField& dst,
                               uint64_t cap)
    : src_(&src), dst_(&dst) {
  if (src.characteristic() != dst.characteristic())
    throw domain_error("embedding: characteristic mismatch");
  if (dst.ext_degree() % src.ext_degree() != 0)
    throw domain_error("embedding: source degree must divide target degree");
  if (dst.order() > cap)
    throw cap_error("embedding: target field exceeds enumeration cap");
  // Least root of the source modulus in dst.
  const auto& mod = src.modulus();
  uint64_t theta = dst.order();
  for (uint64_t x = 0; x < dst.order(); ++x) {
    uint64_t acc = 0;
    for (size_t i = mod.size(); i-- > 0;)
      acc = dst.add(dst.mul(acc, x), dst.from_int(mod[i]).index());
    if (acc == 0) {
      theta = x;
      break;
    }
  }
  if (theta == dst.order())
    throw internal_error("embedding: modulus has no root in target field");
  root_powers_.resize(src.ext_degree());
  uint64_t pw = 1;
  for (uint32_t i = 0; i < src.ext_degree(); ++i) {
    root_powers_[i] = pw;
    pw = dst.mul(pw, theta);
  }
}

uint64_t FieldEmbedding::map_index(uint64_t src_index) const {
  uint64_t acc = 0;
  uint32_t p = src_->characteristic();
  for (uint32_t i = 0; i < src_->ext_degree(); ++i) {
    uint32_t digit = (uint32_t)(src_index % p);
    src_index /= p;
    if (digit)
      acc = dst_->add(acc, dst_->mul(dst_->from_int(digit).index(),
                                     root_powers_[i]));
  }
  return acc;
}

FieldElement FieldEmbedding::map(FieldElement x) const {
  return {*dst_, map_index(x.index())};
}

}  // namespace artinff

#include "artinff/detail/zpx.hpp"

#include <cassert>

#include "artinff/errors.hpp"
#include "artinff/intfactor.hpp"

namespace artinff::detail {

namespace {

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  // p is prime and small; Fermat is fine.
  uint64_t r = 1, b = a % p;
  uint32_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return (uint32_t)r;
}

// Packed GF(2)[t] path: a polynomial of degree <= 63 is a bitmask.
uint64_t pack2(const zpx& a) {
  uint64_t v = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i]) v |= 1ull << i;
  return v;
}

zpx unpack2(uint64_t v) {
  zpx a;
  while (v) {
    a.push_back(v & 1);
    v >>= 1;
  }
  return a;
}

uint64_t clmul2(uint64_t a, uint64_t b) {
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

uint64_t mod2(uint64_t a, uint64_t m) {
  int dm = 63 - __builtin_clzll(m);
  while (a >> dm) {
    int da = 63 - __builtin_clzll(a);
    a ^= m << (da - dm);
  }
  return a;
}

bool fits2(const zpx& x) { return zpx_deg(x) <= 31; }

}  // namespace

zpx zpx_mul(const zpx& a, const zpx& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  if (p == 2 && zpx_deg(a) + zpx_deg(b) <= 63)
    return unpack2(clmul2(pack2(a), pack2(b)));
  zpx r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (uint32_t)((r[i + j] + ai * b[j]) % p);
  }
  zpx_trim(r);
  return r;
}

zpx zpx_mod(zpx a, const zpx& m, uint32_t p) {
  assert(!m.empty());
  if (p == 2 && zpx_deg(a) <= 63 && zpx_deg(m) <= 63) {
    if (a.empty()) return {};
    return unpack2(mod2(pack2(a), pack2(m)));
  }
  int dm = zpx_deg(m);
  uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (zpx_deg(a) >= dm) {
    int da = zpx_deg(a);
    uint64_t c = (uint64_t)a.back() * lead_inv % p;
    if (c) {
      int shift = da - dm;
      for (int i = 0; i <= dm; ++i) {
        uint64_t sub = c * m[i] % p;
        a[i + shift] = (uint32_t)((a[i + shift] + p - sub) % p);
      }
    }
    zpx_trim(a);
    if (a.empty()) break;
  }
  return a;
}

zpx zpx_mulmod(const zpx& a, const zpx& b, const zpx& m, uint32_t p) {
  if (p == 2 && fits2(a) && fits2(b) && zpx_deg(m) <= 32) {
    uint64_t r = clmul2(pack2(a), pack2(b));
    return unpack2(mod2(r, pack2(m)));
  }
  return zpx_mod(zpx_mul(a, b, p), m, p);
}

zpx zpx_powmod(zpx base, uint64_t e, const zpx& m, uint32_t p) {
  zpx r{1};
  base = zpx_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = zpx_mulmod(r, base, m, p);
    base = zpx_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

zpx zpx_sub(const zpx& a, const zpx& b, uint32_t p) {
  zpx r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  zpx_trim(r);
  return r;
}

zpx zpx_gcd(zpx a, zpx b, uint32_t p) {
  while (!b.empty()) {
    zpx t = zpx_mod(a, b, p);
    a = std::move(b);
    b = std::move(t);
  }
  if (!a.empty() && a.back() != 1) {
    uint32_t inv = inv_mod_p(a.back(), p);
    for (auto& c : a) c = (uint32_t)((uint64_t)c * inv % p);
  }
  return a;
}

zpx zpx_invmod(const zpx& a, const zpx& m, uint32_t p) {
  // Extended Euclid; invariants r0 = s0*a (mod m), r1 = s1*a (mod m).
  zpx r0 = m, r1 = zpx_mod(a, m, p);
  zpx s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // quotient of r0 by r1
    zpx q;
    {
      zpx rem = r0;
      int d1 = zpx_deg(r1);
      uint32_t li = inv_mod_p(r1.back(), p);
      q.assign(std::max(0, zpx_deg(r0) - d1 + 1), 0);
      while (zpx_deg(rem) >= d1) {
        int dr = zpx_deg(rem);
        uint32_t c = (uint32_t)((uint64_t)rem.back() * li % p);
        q[dr - d1] = c;
        for (int i = 0; i <= d1; ++i) {
          uint64_t sub = (uint64_t)c * r1[i] % p;
          rem[i + dr - d1] = (uint32_t)((rem[i + dr - d1] + p - sub) % p);
        }
        zpx_trim(rem);
        if (rem.empty()) break;
      }
      zpx_trim(q);
      r0 = std::move(r1);
      r1 = std::move(rem);
    }
    zpx t = zpx_sub(s0, zpx_mod(zpx_mul(q, s1, p), m, p), p);
    s0 = std::move(s1);
    s1 = zpx_mod(std::move(t), m, p);
  }
  if (zpx_deg(r0) != 0)
    throw domain_error("zpx_invmod: element not invertible");
  uint32_t inv = inv_mod_p(r0[0], p);
  for (auto& c : s0) c = (uint32_t)((uint64_t)c * inv % p);
  zpx_trim(s0);
  return s0;
}

uint32_t zpx_eval(const zpx& a, uint32_t x, uint32_t p) {
  uint64_t r = 0;
  for (size_t i = a.size(); i-- > 0;) r = (r * x + a[i]) % p;
  return (uint32_t)r;
}

bool zpx_irreducible(const zpx& f, uint32_t p) {
  int n = zpx_deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  // x^(p^i) mod f for i = 1..n via iterated Frobenius.
  zpx x{0, 1};
  zpx fr = x;
  Factorization nf = factor_integer((uint64_t)n);
  std::vector<int> checkpoints;
  for (auto [d, e] : nf.factors) checkpoints.push_back(n / (int)d);
  for (int i = 1; i <= n; ++i) {
    fr = zpx_powmod(std::move(fr), p, f, p);
    for (int cp : checkpoints) {
      if (i == cp) {
        zpx g = zpx_gcd(zpx_sub(fr, x, p), f, p);
        if (zpx_deg(g) != 0) return false;
      }
    }
  }
  return fr == x;
}

}  // namespace artinff::detail

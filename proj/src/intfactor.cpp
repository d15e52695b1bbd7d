#include "artinff/intfactor.hpp"

#include <algorithm>

#include "artinff/errors.hpp"

namespace artinff {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

bool miller_rabin(uint64_t n, uint64_t a) {
  if (a % n == 0) return true;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle-finding rho with a fixed constant sequence; deterministic.
uint64_t pollard_brent(uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = (mulmod_u64(y, y, n) + c) % n;
      ++lam;
      uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle closed without factor; bump c
      d = gcd_u64(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // This base set is deterministic for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

uint64_t Factorization::reassemble() const {
  uint64_t r = 1;
  for (auto [p, e] : factors)
    for (int i = 0; i < e; ++i) r *= p;
  return r;
}

Factorization factor_integer(uint64_t n) {
  if (n == 0) throw domain_error("factor_integer: n must be positive");
  Factorization f;
  f.n = n;
  uint64_t m = n;
  std::vector<uint64_t> primes;
  for (uint64_t p = 2; p <= 1000000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  if (m > 1) {
    if (m <= 1000000ull * 1000000ull && is_prime_u64(m)) {
      primes.push_back(m);
    } else if (is_prime_u64(m)) {
      primes.push_back(m);
    } else {
      factor_rec(m, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (uint64_t p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p)
      ++f.factors.back().second;
    else
      f.factors.push_back({p, 1});
  }
  return f;
}

uint64_t euler_phi(const Factorization& f) {
  uint64_t r = 1;
  for (auto [p, e] : f.factors) {
    r *= p - 1;
    for (int i = 1; i < e; ++i) r *= p;
  }
  return r;
}

uint64_t euler_phi(uint64_t n) { return euler_phi(factor_integer(n)); }

int mobius(uint64_t n) {
  Factorization f = factor_integer(n);
  for (auto [p, e] : f.factors)
    if (e > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

int64_t ramanujan_sum(uint64_t k, int64_t m) {
  if (k == 0) throw domain_error("ramanujan_sum: k must be positive");
  int64_t mm = m % (int64_t)k;
  if (mm < 0) mm += (int64_t)k;
  uint64_t g = gcd_u64(k, (uint64_t)mm);
  uint64_t kg = k / g;
  int mu = mobius(kg);
  if (mu == 0) return 0;
  return (int64_t)mu * (int64_t)(euler_phi(k) / euler_phi(kg));
}

std::vector<uint64_t> divisors(const Factorization& f) {
  std::vector<uint64_t> ds{1};
  for (auto [p, e] : f.factors) {
    size_t base = ds.size();
    uint64_t pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace artinff

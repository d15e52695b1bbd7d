#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace artinff {

// Exact prime factorization of a positive 64-bit integer.
// factors are (prime, exponent) pairs sorted by prime; n == 1 gives {}.
struct Factorization {
  uint64_t n = 1;
  std::vector<std::pair<uint64_t, int>> factors;

  uint64_t reassemble() const;
};

// Trial division to 10^6, then deterministic Miller-Rabin + Brent-rho for the
// remaining cofactor.  Deterministic for all 64-bit inputs.
Factorization factor_integer(uint64_t n);

bool is_prime_u64(uint64_t n);

uint64_t euler_phi(const Factorization& f);
uint64_t euler_phi(uint64_t n);

// Moebius function; 0 on non-squarefree input.
int mobius(uint64_t n);

// All divisors, sorted ascending.
std::vector<uint64_t> divisors(const Factorization& f);

uint64_t gcd_u64(uint64_t a, uint64_t b);

// a*b mod m and a^e mod m without overflow.
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

// Ramanujan's sum c_k(m) = sum over (a,k)=1 of e(am/k), as an exact integer
// via the closed form mu(k/g) phi(k) / phi(k/g), g = gcd(k, m).
// For prime k this is -1 or phi(k) by whether k divides m.
int64_t ramanujan_sum(uint64_t k, int64_t m);

}  // namespace artinff

#pragma once

#include <cstdint>
#include <vector>

namespace artinff::detail {

// Dense polynomials over Z/p for small prime p, coefficients little-endian.
// These back the canonical-modulus search and the hot prime-field loops
// (irreducible enumeration, powering mod P).  No trailing zeros.
using zpx = std::vector<uint32_t>;

inline void zpx_trim(zpx& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zpx_deg(const zpx& a) { return (int)a.size() - 1; }

zpx zpx_mul(const zpx& a, const zpx& b, uint32_t p);
// a mod m (m nonzero); also the quotient variant.
zpx zpx_mod(zpx a, const zpx& m, uint32_t p);
zpx zpx_mulmod(const zpx& a, const zpx& b, const zpx& m, uint32_t p);
zpx zpx_powmod(zpx base, uint64_t e, const zpx& m, uint32_t p);
zpx zpx_gcd(zpx a, zpx b, uint32_t p);
zpx zpx_sub(const zpx& a, const zpx& b, uint32_t p);
// Inverse of a mod m; a and m must be coprime.
zpx zpx_invmod(const zpx& a, const zpx& m, uint32_t p);
uint32_t zpx_eval(const zpx& a, uint32_t x, uint32_t p);

// Rabin irreducibility test over Z/p; f monic of degree >= 1.
bool zpx_irreducible(const zpx& f, uint32_t p);

}  // namespace artinff::detail

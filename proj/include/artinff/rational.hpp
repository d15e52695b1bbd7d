#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "artinff/errors.hpp"

namespace artinff {

// Exact rational on int64 with overflow-checked arithmetic.  Everything this
// project needs (rho values, densities, main terms) stays far below 2^63 at
// desk scale, so native words are enough; we still check.
struct Rat {
  int64_t num = 0;
  int64_t den = 1;  // always > 0, gcd(num, den) == 1

  Rat() = default;
  Rat(int64_t n) : num(n), den(1) {}
  Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw domain_error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  static int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw internal_error("Rat: overflow");
    return static_cast<int64_t>(v);
  }

  friend Rat operator+(Rat a, Rat b) {
    __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    return reduced(n, d);
  }
  friend Rat operator-(Rat a, Rat b) {
    __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    return reduced(n, d);
  }
  friend Rat operator*(Rat a, Rat b) {
    return reduced((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw domain_error("Rat: division by zero");
    return reduced((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }

  double to_double() const { return (double)num / (double)den; }

  // Canonical serialization; always "num/den" so the column type is uniform.
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static Rat reduced(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rat r;
    r.num = checked(n);
    r.den = n == 0 ? 1 : checked(d);
    return r;
  }
};

}  // namespace artinff

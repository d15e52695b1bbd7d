#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace artinff {

// Bad user-supplied values: composite p, zero denominators, constant g where
// a nonconstant one is required, delta = 1, and so on.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration would exceed the configured point/element cap.
class cap_error : public std::runtime_error {
 public:
  explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Config file / CLI usage problems.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A provable identity failed; this always means an implementation bug,
// never bad data.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// g = mu * b^ell with mu an ell-th power in F_q^x for some prime ell | q-1,
// i.e. g is a full ell-th power in K.  In that case the count N_X(g,n)
// vanishes identically and the density machinery does not apply; operations
// that require the non-degenerate case throw this, naming the prime.
class full_power_error : public domain_error {
 public:
  full_power_error(uint64_t ell, const std::string& what_op)
      : domain_error(what_op + ": g is a full " + std::to_string(ell) +
                     "-th power in K (ell = " + std::to_string(ell) +
                     " divides q-1); N_X(g,n) = 0 for all n"),
        ell_(ell) {}
  uint64_t ell() const { return ell_; }

 private:
  uint64_t ell_;
};

}  // namespace artinff

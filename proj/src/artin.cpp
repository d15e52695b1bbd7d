#include "artinff/artin.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "artinff/detail/zpx.hpp"
#include "artinff/errors.hpp"
#include "artinff/intfactor.hpp"

namespace artinff {

namespace {

void require_nonconstant(const RationalFunction& g, const char* op) {
  if (g.is_zero()) throw domain_error(std::string(op) + ": g = 0");
  if (g.is_constant())
    throw domain_error(std::string(op) + ": g must not be constant");
}

struct ValuationProfile {
  std::vector<std::pair<Poly, int>> num_factors, den_factors;
  int64_t v_inf;
  FieldElement unit;  // leading coefficient of num (den is monic)
};

ValuationProfile valuation_profile(const RationalFunction& g) {
  ValuationProfile vp{{}, {}, valuation_infinity(g), g.num.leading_coeff()};
  if (g.num.degree() >= 1) vp.num_factors = factor_poly(g.num).factors;
  if (g.den.degree() >= 1) vp.den_factors = factor_poly(g.den).factors;
  return vp;
}

uint64_t profile_degree(const ValuationProfile& vp) {
  uint64_t d = 0;
  for (const auto& [p, e] : vp.num_factors) d += (uint64_t)e * p.degree();
  for (const auto& [p, e] : vp.den_factors) d += (uint64_t)e * p.degree();
  d += (uint64_t)(vp.v_inf < 0 ? -vp.v_inf : vp.v_inf);
  return d;
}

bool all_valuations_divisible(const ValuationProfile& vp, uint64_t ell) {
  if ((uint64_t)(vp.v_inf < 0 ? -vp.v_inf : vp.v_inf) % ell != 0) return false;
  for (const auto& [p, e] : vp.num_factors)
    if ((uint64_t)e % ell != 0) return false;
  for (const auto& [p, e] : vp.den_factors)
    if ((uint64_t)e % ell != 0) return false;
  return true;
}

GeometricityReport report_from_profile(const RationalFunction& g,
                                       const ValuationProfile& vp,
                                       uint64_t ell) {
  if (!all_valuations_divisible(vp, ell)) return {g, ell, true, std::nullopt};
  const FiniteField& f = g.field();
  Poly bn = Poly::from_indices(f, {1}), bd = Poly::from_indices(f, {1});
  for (const auto& [p, e] : vp.num_factors)
    bn = bn * poly_pow(p, (uint64_t)e / ell);
  for (const auto& [p, e] : vp.den_factors)
    bd = bd * poly_pow(p, (uint64_t)e / ell);
  RationalFunction b = rf_make(bn, bd);
  FieldElement mu = vp.unit;
  if (rf_mul(rf_constant(mu), rf_pow(b, ell)) != g)
    throw internal_error("is_geometric_at: witness identity g = mu*b^ell failed");
  return {g, ell, false, std::make_pair(mu, b)};
}

}  // namespace

GeometricityReport is_geometric_at(const RationalFunction& g, uint64_t ell) {
  require_nonconstant(g, "is_geometric_at");
  if (!is_prime_u64(ell)) throw domain_error("is_geometric_at: ell must be prime");
  if (ell == g.field().characteristic())
    throw domain_error("is_geometric_at: ell must differ from the characteristic");
  return report_from_profile(g, valuation_profile(g), ell);
}

NonGeometricPrimeSet nongeometric_primes(const RationalFunction& g) {
  require_nonconstant(g, "nongeometric_primes");
  ValuationProfile vp = valuation_profile(g);
  uint64_t bound = profile_degree(vp);
  uint64_t p = g.field().characteristic();
  NonGeometricPrimeSet out{g, {}, bound};
  for (uint64_t ell = 2; ell <= bound; ++ell) {
    if (ell == p || !is_prime_u64(ell)) continue;
    if (all_valuations_divisible(vp, ell)) out.primes.push_back(ell);
  }
  return out;
}

std::optional<uint64_t> full_power_obstruction(const RationalFunction& g) {
  require_nonconstant(g, "full_power_obstruction");
  const FiniteField& f = g.field();
  uint64_t qm1 = f.order() - 1;
  if (qm1 <= 1) return std::nullopt;
  ValuationProfile vp = valuation_profile(g);
  for (auto [ell, e] : factor_integer(qm1).factors) {
    (void)e;
    if (!all_valuations_divisible(vp, ell)) continue;
    // mu is an ell-th power in F_q^x iff mu^((q-1)/ell) = 1 (here ell | q-1)
    if (f.pow(vp.unit.index(), qm1 / ell) == 1) return ell;
  }
  return std::nullopt;
}

RhoValue rho_from_primes(uint64_t q, const std::vector<uint64_t>& nongeom,
                         uint64_t n) {
  if (n == 0) throw domain_error("rho: n must be positive");
  RhoValue out{n, Rat(1), {}};
  std::vector<uint64_t> primes = nongeom;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (uint64_t ell : primes) {
    if (!is_prime_u64(ell))
      throw domain_error("rho: declared non-geometric prime is not prime");
    if (q % ell == 0)
      throw domain_error("rho: non-geometric prime divides q");
    uint64_t qm = q % ell;
    if (powmod_u64(qm, n, ell) != 1) continue;  // ell does not divide q^n-1
    // m = q^(n-1) + ... + 1 mod ell
    uint64_t m_mod;
    if (qm == 1) {
      m_mod = n % ell;
    } else {
      uint64_t num = (powmod_u64(qm, n, ell) + ell - 1) % ell;
      uint64_t inv = powmod_u64((qm + ell - 1) % ell, ell - 2, ell);
      m_mod = mulmod_u64(num, inv, ell);
    }
    int64_t c = m_mod == 0 ? (int64_t)(ell - 1) : -1;
    Rat factor = Rat(1) - Rat(c, (int64_t)(ell - 1));
    out.factors.push_back({ell, c, factor});
    out.value = out.value * factor;
  }
  return out;
}

RhoValue rho(const RationalFunction& g, uint64_t n) {
  require_nonconstant(g, "rho");
  if (auto ell = full_power_obstruction(g)) throw full_power_error(*ell, "rho");
  return rho_from_primes(g.field().order(), nongeometric_primes(g).primes, n);
}

bool rho_positive(const RationalFunction& g, uint64_t n) {
  require_nonconstant(g, "rho_positive");
  if (n == 0) throw domain_error("rho_positive: n must be positive");
  if (auto ell = full_power_obstruction(g))
    throw full_power_error(*ell, "rho_positive");
  uint64_t q = g.field().order();
  for (uint64_t ell : nongeometric_primes(g).primes) {
    if (powmod_u64(q % ell, n, ell) != 1) continue;  // ell not| q^n - 1
    if ((q - 1) % ell != 0 || n % ell == 0) return false;
  }
  return true;
}

std::vector<uint64_t> artin_n_generator(const RationalFunction& g,
                                        uint64_t m_max) {
  require_nonconstant(g, "artin_n_generator");
  if (auto ell = full_power_obstruction(g))
    throw full_power_error(*ell, "artin_n_generator");
  uint64_t q = g.field().order();
  uint64_t prod = 1;
  for (uint64_t ell : nongeometric_primes(g).primes)
    prod *= ((q - 1) % ell == 0) ? ell : ell - 1;
  std::vector<uint64_t> ns;
  for (uint64_t m = 0; m <= m_max; ++m) {
    uint64_t n = 1 + m * prod;
    if (!rho_positive(g, n))
      throw internal_error("artin_n_generator: produced n with rho_g(n) = 0");
    ns.push_back(n);
  }
  return ns;
}

namespace {

uint64_t pow_within_cap(uint64_t q, uint32_t n, uint64_t cap,
                        const char* what) {
  uint64_t total = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (total > cap / q) throw cap_error(std::string(what) + ": q^n exceeds cap");
    total *= q;
  }
  return total;
}

// Closed-point scan over a counter range for prime base fields.
uint64_t closed_scan_zpx(const RationalFunction& g, uint32_t n, uint64_t lo,
                         uint64_t hi, const std::vector<uint64_t>& prim_exps) {
  const FiniteField& f = g.field();
  uint32_t p = f.characteristic();
  detail::zpx num(g.num.indices().begin(), g.num.indices().end());
  detail::zpx den(g.den.indices().begin(), g.den.indices().end());
  bool den_is_one = g.den.is_one();
  detail::zpx one{1};
  detail::zpx cand(n + 1, 0);
  cand[n] = 1;
  uint64_t count = 0;
  for (uint64_t c = lo; c < hi; ++c) {
    uint64_t v = c;
    for (uint32_t i = 0; i < n; ++i) {
      cand[i] = (uint32_t)(v % p);
      v /= p;
    }
    if (n >= 2) {
      bool has_root = false;
      for (uint32_t x = 0; x < p && !has_root; ++x)
        if (detail::zpx_eval(cand, x, p) == 0) has_root = true;
      if (has_root) continue;
      if (n >= 4 && !detail::zpx_irreducible(cand, p)) continue;
    }
    detail::zpx nr = detail::zpx_mod(num, cand, p);
    if (nr.empty()) continue;  // zero of g
    detail::zpx x;
    if (den_is_one) {
      x = std::move(nr);
    } else {
      detail::zpx dr = detail::zpx_mod(den, cand, p);
      if (dr.empty()) continue;  // pole of g
      x = detail::zpx_mulmod(nr, detail::zpx_invmod(dr, cand, p), cand, p);
    }
    bool primitive = true;
    for (uint64_t e : prim_exps) {
      if (detail::zpx_powmod(x, e, cand, p) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) ++count;
  }
  return count;
}

}  // namespace

uint64_t count_artin_closed(const RationalFunction& g, uint32_t n,
                            uint64_t cap, unsigned threads) {
  if (g.is_zero()) throw domain_error("count_artin_closed: g = 0");
  if (n == 0) throw domain_error("count_artin_closed: n must be positive");
  const FiniteField& f = g.field();
  uint64_t qn = pow_within_cap(f.order(), n, cap, "count_artin_closed");
  Factorization fac = factor_integer(qn - 1);
  std::vector<uint64_t> prim_exps;
  for (auto [l, e] : fac.factors) prim_exps.push_back((qn - 1) / l);

  uint64_t count = 0;
  if (f.ext_degree() == 1) {
    unsigned t = std::max(1u, threads);
    if (t == 1 || qn < 4096) {
      count = closed_scan_zpx(g, n, 0, qn, prim_exps);
    } else {
      std::vector<uint64_t> partial(t, 0);
      std::vector<std::thread> pool;
      uint64_t chunk = qn / t + 1;
      for (unsigned i = 0; i < t; ++i) {
        uint64_t lo = std::min(qn, i * chunk), hi = std::min(qn, lo + chunk);
        pool.emplace_back([&, i, lo, hi] {
          partial[i] = closed_scan_zpx(g, n, lo, hi, prim_exps);
        });
      }
      for (auto& th : pool) th.join();
      for (uint64_t c : partial) count += c;
    }
  } else {
    Poly one = Poly::from_indices(f, {1});
    for_each_irreducible(
        f, n,
        [&](const Poly& P) {
          Poly nr = poly_mod(g.num, P);
          if (nr.is_zero()) return;
          Poly dr = poly_mod(g.den, P);
          if (dr.is_zero()) return;
          Poly x = poly_mod(nr * poly_invmod(dr, P), P);
          for (uint64_t e : prim_exps)
            if (poly_powmod(x, e, P) == one) return;
          ++count;
        },
        cap);
  }

  if (n == 1 && valuation_infinity(g) == 0) {
    // infinity is a degree-1 closed point; value = ratio of leading coeffs
    uint64_t val = f.div(g.num.leading_coeff().index(),
                         g.den.leading_coeff().index());
    if (is_primitive(FieldElement(f, val), fac)) ++count;
  }
  return count;
}

CountReport count_artin_points(const FunctionOnVariety& g,
                               const VarietyModel& X, uint32_t n, uint64_t cap,
                               unsigned threads,
                               const std::vector<uint64_t>& declared_nongeometric) {
  if (n == 0) throw domain_error("count_artin_points: n must be positive");
  const FiniteField& base = X.base();
  const FiniteField& big =
      build_field(base.characteristic(), base.ext_degree() * n);
  big.build_tables(cap);
  uint64_t qm1 = big.order() - 1;

  CountReport rep;
  rep.q = base.order();
  rep.n = n;
  rep.r = X.dim();

  uint64_t gen = 0;
  scan_values(g, X, n,
              [&](const RationalPoint&, const EvalOutcome& v) {
                switch (v.kind) {
                  case EvalOutcome::Kind::Unit: {
                    ++rep.r_count;
                    uint64_t j = qm1 == 0 ? 0 : big.log(v.value.index());
                    if (gcd_u64(j, qm1) == 1) ++gen;
                    break;
                  }
                  case EvalOutcome::Kind::Zero: ++rep.zeros; break;
                  case EvalOutcome::Kind::Pole: ++rep.poles; break;
                  case EvalOutcome::Kind::Indeterminate:
                    ++rep.excluded_indeterminate;
                    break;
                }
              },
              cap);

  if (gen % n != 0)
    throw internal_error(
        "count_artin_points: generating-point count not divisible by n "
        "(Frobenius orbits); this is a bug");
  rep.generating_points = gen;
  rep.n_points = gen / n;

  if (X.kind() == VarietyModel::Kind::ProjectiveLine) {
    uint64_t closed = count_artin_closed(g.rf(), n, cap, threads);
    if (closed != rep.n_points)
      throw internal_error("count_artin_points: closed-point algorithm gave " +
                           std::to_string(closed) + ", point algorithm gave " +
                           std::to_string(rep.n_points));
    rep.n_closed = closed;
  }

  // Main term.  The full-power degeneracy forces N = 0 identically and the
  // factor formula does not apply; record the obstruction and use 0.
  if (g.is_line_function()) {
    if (!declared_nongeometric.empty())
      throw domain_error(
          "count_artin_points: declared primes are only for curve/P2 functions");
    const RationalFunction& rf = g.rf();
    if (rf.is_constant()) {
      rep.rho = std::nullopt;  // theorem excludes constant g; report raw count
      rep.main_term = Rat(0);
    } else if (auto ell = full_power_obstruction(rf)) {
      rep.full_power_ell = *ell;
      rep.main_term = Rat(0);
    } else {
      rep.rho = rho(rf, n);
    }
  } else {
    rep.rho = rho_from_primes(base.order(), declared_nongeometric, n);
  }
  if (rep.rho) {
    uint64_t qnr1 = 1;
    for (uint32_t i = 0; i < n * (uint32_t)(rep.r - 1); ++i)
      qnr1 *= base.order();
    rep.main_term =
        rep.rho->value * Rat((int64_t)euler_phi(qm1)) * Rat((int64_t)qnr1) /
        Rat((int64_t)n);
  }
  double dev = std::fabs((double)rep.n_points - rep.main_term.to_double());
  double denom =
      std::pow((double)base.order(), (double)n * ((double)rep.r - 0.5));
  rep.error_ratio = dev / denom;
  return rep;
}

CharSumResult charsum_experiment(const FunctionOnVariety& g,
                                 const VarietyModel& X, uint32_t n,
                                 uint64_t delta, uint64_t cap,
                                 bool allow_out_of_hypothesis) {
  if (delta <= 1)
    throw domain_error(
        "charsum_experiment: a non-trivial character requires delta > 1 "
        "(the trivial-character sum is #R and is reported separately)");
  const FiniteField& base = X.base();
  const FiniteField& big =
      build_field(base.characteristic(), base.ext_degree() * n);
  big.build_tables(cap);
  uint64_t qm1 = big.order() - 1;
  if (qm1 % delta != 0)
    throw domain_error("charsum_experiment: delta must divide q^n - 1");
  if (delta > 100000000ull / std::max<uint64_t>(1, euler_phi(delta)))
    throw cap_error("charsum_experiment: delta too large for the DFT table");

  Hypothesis hyp = Hypothesis::Unchecked;
  if (g.is_line_function()) {
    hyp = Hypothesis::OutOfHypothesis;
    for (auto [l, e] : factor_integer(delta).factors) {
      (void)e;
      if (is_geometric_at(g.rf(), l).geometric) {
        hyp = Hypothesis::Holds;
        break;
      }
    }
    if (hyp == Hypothesis::OutOfHypothesis && !allow_out_of_hypothesis)
      throw domain_error(
          "charsum_experiment: proposition inapplicable; g is non-geometric "
          "at every prime dividing delta (pass allow_out_of_hypothesis to "
          "run anyway)");
  }

  CharSumResult res;
  res.delta = delta;
  res.hypothesis = hyp;
  res.histogram.delta = delta;
  res.histogram.counts.assign(delta, 0);
  res.histogram.generator = big.generator();

  uint64_t r_count = 0;
  scan_values(g, X, n,
              [&](const RationalPoint&, const EvalOutcome& v) {
                if (v.kind != EvalOutcome::Kind::Unit) return;
                ++r_count;
                uint64_t j = qm1 == 0 ? 0 : big.log(v.value.index());
                ++res.histogram.counts[j % delta];
              },
              cap);
  res.trivial_sum = r_count;

  // e(a j / delta) table; |S_a| from the exact histogram.
  const double two_pi = 6.283185307179586476925286766559;
  std::vector<double> re(delta), im(delta);
  for (uint64_t j = 0; j < delta; ++j) {
    re[j] = std::cos(two_pi * (double)j / (double)delta);
    im[j] = std::sin(two_pi * (double)j / (double)delta);
  }
  double denom =
      std::pow((double)base.order(), (double)n * ((double)X.dim() - 0.5));
  for (uint64_t a = 1; a < delta; ++a) {
    if (gcd_u64(a, delta) != 1) continue;
    double sr = 0, si = 0;
    for (uint64_t j = 0; j < delta; ++j) {
      uint64_t c = res.histogram.counts[j];
      if (!c) continue;
      uint64_t idx = (uint64_t)((__uint128_t)a * j % delta);
      sr += (double)c * re[idx];
      si += (double)c * im[idx];
    }
    double mag = std::sqrt(sr * sr + si * si);
    res.rows.push_back({a, mag, mag / denom});
  }
  return res;
}

int mobius_expansion_check(FieldElement x, const Factorization& fac,
                           uint64_t cap) {
  if (x.is_zero())
    throw domain_error("mobius_expansion_check: x must be nonzero");
  const FiniteField& f = x.field();
  if (fac.n != f.order() - 1)
    throw domain_error("mobius_expansion_check: factorization must be of q-1");
  f.build_tables(cap);
  uint64_t m = f.order() - 1;
  if (m == 0) return 1;
  int64_t j = (int64_t)f.log(x.index());
  Rat sum(0);
  for (uint64_t d : divisors(fac)) {
    int mu = mobius(d);
    if (!mu) continue;
    sum = sum + Rat(mu, (int64_t)euler_phi(d)) * Rat(ramanujan_sum(d, j));
  }
  Rat val = Rat((int64_t)euler_phi(fac), (int64_t)m) * sum;
  if (val == Rat(1)) return 1;
  if (val == Rat(0)) return 0;
  throw internal_error("mobius_expansion_check: value is neither 0 nor 1");
}

}  // namespace artinff

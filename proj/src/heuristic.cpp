#include "artinff/heuristic.hpp"

#include "artinff/detail/zpx.hpp"
#include "artinff/errors.hpp"
#include "artinff/intfactor.hpp"

namespace artinff {

uint64_t mult_order_mod(uint64_t q, uint64_t ell) {
  if (ell == 0) throw domain_error("mult_order_mod: modulus must be positive");
  if (gcd_u64(q, ell) != 1)
    throw domain_error("mult_order_mod: q and ell must be coprime");
  if (ell == 1) return 1;
  uint64_t x = q % ell;
  uint64_t d = 1;
  uint64_t cur = x;
  while (cur != 1) {
    cur = mulmod_u64(cur, x, ell);
    ++d;
  }
  return d;
}

const char* split_case_name(SplitCase c) {
  switch (c) {
    case SplitCase::Geometric: return "geometric";
    case SplitCase::NonGeomDividesN: return "nongeom-splits";
    case SplitCase::NonGeomCoprimeN: return "nongeom-inert";
    case SplitCase::NotDividing: return "not-dividing";
  }
  return "?";
}

SplitProbability split_prob(const RationalFunction& g, uint64_t ell,
                            uint64_t n, HypothesisPolicy policy) {
  if (!is_prime_u64(ell)) throw domain_error("split_prob: ell must be prime");
  if (ell == g.field().characteristic())
    throw domain_error("split_prob: ell must differ from the characteristic");
  if (n == 0) throw domain_error("split_prob: n must be positive");
  if (g.is_zero() || g.is_constant())
    throw domain_error("split_prob: g must be nonconstant");
  if (policy == HypothesisPolicy::Enforce) {
    if (auto fp = full_power_obstruction(g))
      throw full_power_error(*fp, "split_prob");
  }
  const FiniteField& f = g.field();
  uint64_t q = f.order();
  if (powmod_u64(q % ell, n, ell) != 1)
    return {ell, SplitCase::NotDividing, Rat(0)};
  GeometricityReport rep = is_geometric_at(g, ell);
  if (rep.geometric)
    return {ell, SplitCase::Geometric, Rat(1, (int64_t)ell)};
  uint64_t r = mult_order(rep.witness->first, f.unit_factorization());
  // criterion: ell | (q-1)/r * (q^(n-1) + ... + 1)
  uint64_t a = ((q - 1) / r) % ell;
  uint64_t qm = q % ell;
  uint64_t m_mod;
  if (qm == 1) {
    m_mod = n % ell;
  } else {
    uint64_t num = (powmod_u64(qm, n, ell) + ell - 1) % ell;
    uint64_t inv = powmod_u64((qm + ell - 1) % ell, ell - 2, ell);
    m_mod = mulmod_u64(num, inv, ell);
  }
  if (mulmod_u64(a, m_mod, ell) == 0)
    return {ell, SplitCase::NonGeomDividesN, Rat(1)};
  return {ell, SplitCase::NonGeomCoprimeN, Rat(0)};
}

DensityReport density(const RationalFunction& g, uint64_t n) {
  // rho enforces the nonconstant and full-power preconditions.
  RhoValue rv = rho(g, n);
  uint64_t q = g.field().order();
  uint64_t qn = 1;
  for (uint64_t i = 0; i < n; ++i) {
    if (qn > ((uint64_t)1 << 62) / q)
      throw cap_error("density: q^n exceeds the 64-bit working range");
    qn *= q;
  }
  Factorization fac = factor_integer(qn - 1);
  DensityReport out;
  out.n = n;
  out.A = Rat(1);
  for (auto [ell, e] : fac.factors) {
    (void)e;
    SplitProbability sp = split_prob(g, ell, n);
    out.A = out.A * (Rat(1) - sp.value);
    out.factors.push_back(sp);
  }
  out.rhs = Rat((int64_t)euler_phi(fac), (int64_t)(qn - 1)) * rv.value;
  if (out.A != out.rhs)
    throw internal_error(
        "density: A != phi(q^n-1)/(q^n-1) * rho_g(n); this is a bug");
  return out;
}

EmpiricalSplit empirical_split_check(const RationalFunction& g, uint64_t ell,
                                     uint32_t n, uint64_t cap) {
  if (!is_prime_u64(ell))
    throw domain_error("empirical_split_check: ell must be prime");
  if (n == 0) throw domain_error("empirical_split_check: n must be positive");
  if (g.is_zero() || g.is_constant())
    throw domain_error("empirical_split_check: g must be nonconstant");
  const FiniteField& f = g.field();
  uint64_t q = f.order();
  uint64_t qn = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (qn > cap / q) throw cap_error("empirical_split_check: q^n exceeds cap");
    qn *= q;
  }
  if ((qn - 1) % ell != 0)
    throw domain_error("empirical_split_check: ell must divide q^n - 1");
  uint64_t e = (qn - 1) / ell;

  EmpiricalSplit out;
  out.ell = ell;
  out.n = n;

  if (f.ext_degree() == 1) {
    uint32_t p = f.characteristic();
    detail::zpx num(g.num.indices().begin(), g.num.indices().end());
    detail::zpx den(g.den.indices().begin(), g.den.indices().end());
    bool den_is_one = g.den.is_one();
    detail::zpx one{1};
    detail::zpx cand(n + 1, 0);
    cand[n] = 1;
    for (uint64_t c = 0; c < qn; ++c) {
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
      if (nr.empty()) continue;
      detail::zpx x;
      if (den_is_one) {
        x = std::move(nr);
      } else {
        detail::zpx dr = detail::zpx_mod(den, cand, p);
        if (dr.empty()) continue;
        x = detail::zpx_mulmod(nr, detail::zpx_invmod(dr, cand, p), cand, p);
      }
      ++out.total_points;
      if (detail::zpx_powmod(x, e, cand, p) == one) ++out.split_points;
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
          ++out.total_points;
          if (poly_powmod(x, e, P) == one) ++out.split_points;
        },
        cap);
  }

  if (n == 1 && valuation_infinity(g) == 0) {
    ++out.total_points;
    uint64_t val = f.div(g.num.leading_coeff().index(),
                         g.den.leading_coeff().index());
    if (f.pow(val, e) == 1) ++out.split_points;
  }

  out.observed = out.total_points == 0
                     ? Rat(0)
                     : Rat((int64_t)out.split_points, (int64_t)out.total_points);
  out.predicted = split_prob(g, ell, n, HypothesisPolicy::Allow).value;
  return out;
}

}  // namespace artinff

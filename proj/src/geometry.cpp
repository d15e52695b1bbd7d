#include "artinff/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <map>

#include "artinff/errors.hpp"

namespace artinff {

namespace {

using TermKey = std::array<uint32_t, 3>;

Form map_to_form(const FiniteField& f, const std::map<TermKey, uint64_t>& m) {
  std::vector<Form::Term> terms;
  for (const auto& [k, c] : m)
    if (c) terms.push_back({k[0], k[1], k[2], c});
  return Form::from_terms(f, std::move(terms));
}

}  // namespace

Form Form::from_terms(const FiniteField& f, std::vector<Term> terms) {
  std::map<TermKey, uint64_t> merged;
  for (const Term& t : terms) {
    if (t.coeff >= f.order()) throw domain_error("Form: coefficient out of range");
    TermKey k{t.ex, t.ey, t.ez};
    auto it = merged.find(k);
    if (it == merged.end())
      merged[k] = t.coeff;
    else
      it->second = f.add(it->second, t.coeff);
  }
  Form out(f);
  for (const auto& [k, c] : merged)
    if (c) out.terms_.push_back({k[0], k[1], k[2], c});
  std::sort(out.terms_.begin(), out.terms_.end());
  return out;
}

bool Form::is_homogeneous() const {
  if (terms_.empty()) return true;
  uint32_t d = terms_[0].ex + terms_[0].ey + terms_[0].ez;
  for (const Term& t : terms_)
    if (t.ex + t.ey + t.ez != d) return false;
  return true;
}

uint32_t Form::degree() const {
  uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.ex + t.ey + t.ez);
  return d;
}

Form Form::operator+(const Form& o) const {
  std::map<TermKey, uint64_t> m;
  for (const Term& t : terms_) m[{t.ex, t.ey, t.ez}] = t.coeff;
  for (const Term& t : o.terms_) {
    TermKey k{t.ex, t.ey, t.ez};
    m[k] = f_->add(m.count(k) ? m[k] : 0, t.coeff);
  }
  return map_to_form(*f_, m);
}

Form Form::operator-(const Form& o) const {
  std::map<TermKey, uint64_t> m;
  for (const Term& t : terms_) m[{t.ex, t.ey, t.ez}] = t.coeff;
  for (const Term& t : o.terms_) {
    TermKey k{t.ex, t.ey, t.ez};
    m[k] = f_->sub(m.count(k) ? m[k] : 0, t.coeff);
  }
  return map_to_form(*f_, m);
}

Form Form::operator*(const Form& o) const {
  std::map<TermKey, uint64_t> m;
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      TermKey k{a.ex + b.ex, a.ey + b.ey, a.ez + b.ez};
      uint64_t prod = f_->mul(a.coeff, b.coeff);
      auto it = m.find(k);
      if (it == m.end())
        m[k] = prod;
      else
        it->second = f_->add(it->second, prod);
    }
  }
  return map_to_form(*f_, m);
}

FieldElement Form::eval(FieldElement x, FieldElement y, FieldElement z) const {
  uint64_t acc = 0;
  for (const Term& t : terms_) {
    uint64_t v = t.coeff;
    v = f_->mul(v, f_->pow(x.index(), t.ex));
    v = f_->mul(v, f_->pow(y.index(), t.ey));
    v = f_->mul(v, f_->pow(z.index(), t.ez));
    acc = f_->add(acc, v);
  }
  return {*f_, acc};
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    auto var = [&](const char* name, uint32_t e) {
      if (!e) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("x", t.ex);
    var("y", t.ey);
    var("z", t.ez);
    FieldElement c(*f_, t.coeff);
    if (mono.empty())
      out += c.str();
    else if (t.coeff == 1)
      out += mono;
    else
      out += c.str() + "*" + mono;
  }
  return out;
}

namespace {

struct FormParser {
  const FiniteField& f;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw config_error("form parse error at position " + std::to_string(pos) +
                       ": " + why + " in \"" + s + "\"");
  }
  uint64_t number() {
    skip_ws();
    if (pos >= s.size() || !isdigit((unsigned char)s[pos]))
      fail("number expected");
    uint64_t v = 0;
    while (pos < s.size() && isdigit((unsigned char)s[pos]))
      v = v * 10 + (uint64_t)(s[pos++] - '0');
    return v;
  }

  Form atom() {
    skip_ws();
    if (eat('(')) {
      Form e = expr();
      if (!eat(')')) fail("')' expected");
      return e;
    }
    if (eat('[')) {
      uint64_t idx = number();
      if (!eat(']')) fail("']' expected");
      if (idx >= f.order()) fail("element index out of range");
      return Form::from_terms(f, {{0, 0, 0, idx}});
    }
    if (pos < s.size()) {
      char c = (char)tolower((unsigned char)s[pos]);
      if (c == 'x' || c == 'y' || c == 'z') {
        ++pos;
        return Form::from_terms(
            f, {{c == 'x' ? 1u : 0u, c == 'y' ? 1u : 0u, c == 'z' ? 1u : 0u,
                 1}});
      }
      if (isdigit((unsigned char)s[pos]))
        return Form::from_terms(f, {{0, 0, 0, f.from_int((int64_t)number()).index()}});
    }
    fail("operand expected");
  }

  Form power() {
    Form b = atom();
    skip_ws();
    if (eat('^')) {
      uint64_t e = number();
      Form r = Form::from_terms(f, {{0, 0, 0, 1}});
      for (uint64_t i = 0; i < e; ++i) r = r * b;
      return r;
    }
    return b;
  }

  Form unary() {
    skip_ws();
    if (eat('-')) {
      Form z(f);
      return z - unary();
    }
    if (eat('+')) return unary();
    return power();
  }

  Form term() {
    Form acc = unary();
    while (true) {
      skip_ws();
      if (eat('*'))
        acc = acc * unary();
      else
        break;
    }
    return acc;
  }

  Form expr() {
    Form acc = term();
    while (true) {
      skip_ws();
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Form parse() {
    Form e = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing characters");
    return e;
  }
};

}  // namespace

Form Form::parse(const FiniteField& f, const std::string& text) {
  FormParser p{f, text};
  return p.parse();
}

VarietyModel VarietyModel::projective_line(const FiniteField& f) {
  return VarietyModel(Kind::ProjectiveLine, f);
}

VarietyModel VarietyModel::projective_plane(const FiniteField& f) {
  return VarietyModel(Kind::ProjectivePlane, f);
}

VarietyModel VarietyModel::plane_curve(Form f) {
  if (f.is_zero()) throw domain_error("plane_curve: zero form");
  if (!f.is_homogeneous() || f.degree() < 1)
    throw domain_error("plane_curve: defining form must be homogeneous of degree >= 1");
  VarietyModel x(Kind::PlaneCurve, f.field());
  x.curve_ = std::move(f);
  return x;
}

const Form& VarietyModel::curve() const {
  if (!curve_) throw domain_error("variety has no defining curve");
  return *curve_;
}

VarietyModel VarietyModel::parse(const FiniteField& f,
                                 const std::string& spec) {
  std::string s = spec;
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) throw config_error("variety spec: empty");
  s = s.substr(a, b - a + 1);
  if (s == "P1" || s == "p1") return projective_line(f);
  if (s == "P2" || s == "p2") return projective_plane(f);
  const std::string prefix = "curve:";
  if (s.rfind(prefix, 0) == 0) {
    Form form = Form::parse(f, s.substr(prefix.size()));
    try {
      return plane_curve(std::move(form));
    } catch (const domain_error& e) {
      throw config_error(std::string("variety spec: ") + e.what());
    }
  }
  throw config_error("variety spec: expected \"P1\", \"P2\" or \"curve: <form>\", got \"" +
                     s + "\"");
}

std::string VarietyModel::str() const {
  switch (kind_) {
    case Kind::ProjectiveLine:
      return "P1";
    case Kind::ProjectivePlane:
      return "P2";
    case Kind::PlaneCurve:
      return "curve: " + curve_->str();
  }
  return "?";
}

FunctionOnVariety FunctionOnVariety::on_line(RationalFunction g) {
  FunctionOnVariety f;
  f.rf_ = std::move(g);
  return f;
}

FunctionOnVariety FunctionOnVariety::form_ratio(Form A, Form B) {
  if (A.field().order() != B.field().order() ||
      &A.field() != &B.field())
    throw domain_error("form_ratio: A and B over different fields");
  if (B.is_zero()) throw domain_error("form_ratio: B must be nonzero");
  if (A.is_zero()) throw domain_error("form_ratio: A must be nonzero");
  if (!A.is_homogeneous() || !B.is_homogeneous())
    throw domain_error("form_ratio: A and B must be homogeneous");
  if (A.degree() != B.degree())
    throw domain_error("form_ratio: A and B must have equal degrees");
  FunctionOnVariety f;
  f.A_ = std::move(A);
  f.B_ = std::move(B);
  return f;
}

FunctionOnVariety FunctionOnVariety::parse(const VarietyModel& X,
                                           const std::string& s) {
  if (X.kind() == VarietyModel::Kind::ProjectiveLine)
    return on_line(parse_rational_function(X.base(), s));
  // "A = <form>; B = <form>"
  size_t semi = s.find(';');
  if (semi == std::string::npos)
    throw config_error("function spec: expected \"A = ...; B = ...\"");
  auto parse_side = [&](std::string part, char name) {
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw config_error("function spec: missing '=' in part \"" + part + "\"");
    std::string lhs = part.substr(0, eq);
    size_t a = lhs.find_first_not_of(" \t");
    if (a == std::string::npos || (toupper((unsigned char)lhs[a]) != name))
      throw config_error(std::string("function spec: expected '") + name +
                         "' on the left of \"" + part + "\"");
    return Form::parse(X.base(), part.substr(eq + 1));
  };
  Form A = parse_side(s.substr(0, semi), 'A');
  Form B = parse_side(s.substr(semi + 1), 'B');
  try {
    return form_ratio(std::move(A), std::move(B));
  } catch (const domain_error& e) {
    throw config_error(std::string("function spec: ") + e.what());
  }
}

const RationalFunction& FunctionOnVariety::rf() const {
  if (!rf_) throw domain_error("function is not a P1 rational function");
  return *rf_;
}
const Form& FunctionOnVariety::form_num() const {
  if (!A_) throw domain_error("function has no form representation");
  return *A_;
}
const Form& FunctionOnVariety::form_den() const {
  if (!B_) throw domain_error("function has no form representation");
  return *B_;
}
const FiniteField& FunctionOnVariety::field() const {
  return rf_ ? rf_->field() : A_->field();
}
std::string FunctionOnVariety::str() const {
  if (rf_) return rf_->str();
  return "A = " + A_->str() + "; B = " + B_->str();
}

PointField::PointField(const FiniteField& base, uint32_t n, uint64_t cap)
    : big(&build_field(base.characteristic(), base.ext_degree() * n)),
      emb(base, *big, cap) {}

namespace {

uint64_t checked_pow(uint64_t q, uint32_t n, uint64_t cap, const char* what) {
  uint64_t total = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (total > cap / q) throw cap_error(std::string(what) + ": exceeds cap");
    total *= q;
  }
  return total;
}

// Form evaluator with coefficients pushed into the point field.
struct EmbeddedForm {
  const FiniteField* big;
  std::vector<Form::Term> terms;

  EmbeddedForm(const Form& f, const FieldEmbedding& emb) : big(&emb.dst()) {
    terms = f.terms();
    for (auto& t : terms) t.coeff = emb.map_index(t.coeff);
  }

  uint64_t eval(uint64_t x, uint64_t y, uint64_t z) const {
    uint64_t acc = 0;
    for (const auto& t : terms) {
      uint64_t v = t.coeff;
      if (t.ex) v = big->mul(v, big->pow(x, t.ex));
      if (t.ey) v = big->mul(v, big->pow(y, t.ey));
      if (t.ez) v = big->mul(v, big->pow(z, t.ez));
      acc = big->add(acc, v);
    }
    return acc;
  }
};

// Roots in the coefficient field of a nonzero univariate polynomial.
std::vector<uint64_t> univariate_roots(const Poly& f) {
  const FiniteField& F = f.field();
  std::vector<uint64_t> roots;
  if (f.degree() < 1) return roots;
  // strip the x | f factor first
  Poly g = f;
  if (g.coeff_index(0) == 0) {
    roots.push_back(0);
    std::vector<uint64_t> shifted(g.indices().begin() + 1, g.indices().end());
    g = Poly::from_indices(F, std::move(shifted));
    while (g.coeff_index(0) == 0 && g.degree() >= 1) {
      std::vector<uint64_t> sh(g.indices().begin() + 1, g.indices().end());
      g = Poly::from_indices(F, std::move(sh));
    }
  }
  if (g.degree() < 1) return roots;
  Poly x = Poly::variable(F);
  Poly xq = poly_powmod(x, F.order(), g);
  Poly lin = poly_gcd(xq - x, g);
  if (lin.degree() < 1) return roots;
  PolyFactorization fac = factor_poly(lin);
  for (const auto& [p, e] : fac.factors) {
    (void)e;
    if (p.degree() == 1) roots.push_back(F.neg(p.coeff_index(0)));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

void for_each_point(const VarietyModel& X, uint32_t n,
                    const std::function<void(const RationalPoint&)>& fn,
                    uint64_t cap) {
  const FiniteField& base = X.base();
  uint64_t qn = checked_pow(base.order(), n, cap, "for_each_point");
  RationalPoint pt;
  switch (X.kind()) {
    case VarietyModel::Kind::ProjectiveLine: {
      if (qn + 1 > cap) throw cap_error("for_each_point: P1 exceeds cap");
      pt.coords = {0, 1};
      fn(pt);  // (0 : 1)
      pt.coords = {1, 0};
      fn(pt);  // infinity
      for (uint64_t x = 1; x < qn; ++x) {
        pt.coords = {x, 1};
        fn(pt);
      }
      return;
    }
    case VarietyModel::Kind::ProjectivePlane: {
      if (qn > (cap - 1) / qn || qn * qn + qn + 1 > cap)
        throw cap_error("for_each_point: P2 exceeds cap");
      for (uint64_t a = 0; a < qn; ++a)
        for (uint64_t b = 0; b < qn; ++b) {
          pt.coords = {a, b, 1};
          fn(pt);
        }
      for (uint64_t a = 0; a < qn; ++a) {
        pt.coords = {a, 1, 0};
        fn(pt);
      }
      pt.coords = {1, 0, 0};
      fn(pt);
      return;
    }
    case VarietyModel::Kind::PlaneCurve: {
      PointField pf(base, n, cap);
      const FiniteField& big = *pf.big;
      EmbeddedForm f(X.curve(), pf.emb);
      uint32_t d = X.curve().degree();
      if (qn > (cap - 1) / (d + 1))
        throw cap_error("for_each_point: curve point bound exceeds cap");
      bool small_scan = qn <= 2000;  // quadratic scan stays under ~4e6 evals
      if (small_scan) {
        for (uint64_t a = 0; a < qn; ++a)
          for (uint64_t b = 0; b < qn; ++b)
            if (f.eval(a, b, 1) == 0) {
              pt.coords = {a, b, 1};
              fn(pt);
            }
      } else {
        big.build_tables(cap);
        // Fiber by the x-coordinate: roots of f(a, y, 1) in y.
        for (uint64_t a = 0; a < qn; ++a) {
          // f(a, y, 1) as a univariate polynomial in y over the point field
          std::vector<uint64_t> coeffs(d + 1, 0);
          for (const auto& t : f.terms) {
            uint64_t c = big.mul(t.coeff, big.pow(a, t.ex));
            coeffs[t.ey] = big.add(coeffs[t.ey], c);
          }
          Poly fa = Poly::from_indices(big, std::move(coeffs));
          if (fa.is_zero()) {
            for (uint64_t b = 0; b < qn; ++b) {
              pt.coords = {a, b, 1};
              fn(pt);
            }
          } else {
            for (uint64_t b : univariate_roots(fa)) {
              pt.coords = {a, b, 1};
              fn(pt);
            }
          }
        }
      }
      for (uint64_t a = 0; a < qn; ++a)
        if (f.eval(a, 1, 0) == 0) {
          pt.coords = {a, 1, 0};
          fn(pt);
        }
      if (f.eval(1, 0, 0) == 0) {
        pt.coords = {1, 0, 0};
        fn(pt);
      }
      return;
    }
  }
}

std::vector<RationalPoint> enumerate_points(const VarietyModel& X, uint32_t n,
                                            uint64_t cap) {
  std::vector<RationalPoint> pts;
  for_each_point(X, n, [&](const RationalPoint& p) { pts.push_back(p); }, cap);
  std::sort(pts.begin(), pts.end());
  return pts;
}

uint64_t count_points(const VarietyModel& X, uint32_t n, uint64_t cap) {
  const FiniteField& base = X.base();
  uint64_t qn = checked_pow(base.order(), n, cap, "count_points");
  switch (X.kind()) {
    case VarietyModel::Kind::ProjectiveLine:
      return qn + 1;
    case VarietyModel::Kind::ProjectivePlane:
      return qn * qn + qn + 1;
    case VarietyModel::Kind::PlaneCurve: {
      uint64_t c = 0;
      for_each_point(X, n, [&](const RationalPoint&) { ++c; }, cap);
      return c;
    }
  }
  return 0;
}

namespace {

void validate_point(const VarietyModel& X, const RationalPoint& rho,
                    uint64_t qn) {
  if ((int)rho.coords.size() != X.ambient_coords())
    throw domain_error("point has wrong number of coordinates");
  bool all_zero = true;
  size_t last_nonzero = 0;
  for (size_t i = 0; i < rho.coords.size(); ++i) {
    if (rho.coords[i] >= qn) throw domain_error("point coordinate out of range");
    if (rho.coords[i]) {
      all_zero = false;
      last_nonzero = i;
    }
  }
  if (all_zero) throw domain_error("point has all coordinates zero");
  if (rho.coords[last_nonzero] != 1)
    throw domain_error("point is not normalized (last nonzero coordinate must be 1)");
}

}  // namespace

EvalOutcome evaluate(const FunctionOnVariety& g, const VarietyModel& X,
                     const RationalPoint& rho, uint32_t n, uint64_t cap) {
  const FiniteField& base = X.base();
  if (&g.field() != &base)
    throw domain_error("evaluate: function and variety over different fields");
  PointField pf(base, n, cap);
  const FiniteField& big = *pf.big;
  validate_point(X, rho, big.order());

  if (X.kind() == VarietyModel::Kind::ProjectiveLine) {
    const RationalFunction& rf = g.rf();
    if (rf.is_zero()) throw domain_error("evaluate: g = 0");
    uint64_t a, b;
    if (rho.coords[1] == 1) {
      FieldElement x = big.element(rho.coords[0]);
      a = poly_eval_embedded(rf.num, x, pf.emb).index();
      b = poly_eval_embedded(rf.den, x, pf.emb).index();
    } else {
      // the point at infinity: homogenize at degree max(deg num, deg den)
      int d = std::max(rf.num.degree(), rf.den.degree());
      a = rf.num.degree() == d ? pf.emb.map_index(rf.num.coeff_index(d)) : 0;
      b = rf.den.degree() == d ? pf.emb.map_index(rf.den.coeff_index(d)) : 0;
    }
    if (a == 0 && b == 0)
      throw internal_error("evaluate: coprime num/den vanish together");
    if (a == 0) return {EvalOutcome::Kind::Zero, big.zero()};
    if (b == 0) return {EvalOutcome::Kind::Pole, big.zero()};
    return {EvalOutcome::Kind::Unit, FieldElement(big, big.div(a, b))};
  }

  if (X.kind() == VarietyModel::Kind::PlaneCurve) {
    EmbeddedForm f(X.curve(), pf.emb);
    if (f.eval(rho.coords[0], rho.coords[1], rho.coords[2]) != 0)
      throw domain_error("evaluate: point does not lie on the curve");
  }
  EmbeddedForm A(g.form_num(), pf.emb), B(g.form_den(), pf.emb);
  uint64_t a = A.eval(rho.coords[0], rho.coords[1], rho.coords[2]);
  uint64_t b = B.eval(rho.coords[0], rho.coords[1], rho.coords[2]);
  if (a == 0 && b == 0) return {EvalOutcome::Kind::Indeterminate, big.zero()};
  if (a == 0) return {EvalOutcome::Kind::Zero, big.zero()};
  if (b == 0) return {EvalOutcome::Kind::Pole, big.zero()};
  return {EvalOutcome::Kind::Unit, FieldElement(big, big.div(a, b))};
}

void scan_values(const FunctionOnVariety& g, const VarietyModel& X, uint32_t n,
                 const std::function<void(const RationalPoint&,
                                          const EvalOutcome&)>& fn,
                 uint64_t cap) {
  const FiniteField& base = X.base();
  if (&g.field() != &base)
    throw domain_error("scan_values: function and variety over different fields");
  PointField pf(base, n, cap);
  const FiniteField& big = *pf.big;
  big.build_tables(cap);

  if (X.kind() == VarietyModel::Kind::ProjectiveLine) {
    const RationalFunction& rf = g.rf();
    if (rf.is_zero()) throw domain_error("scan_values: g = 0");
    std::vector<uint64_t> num(rf.num.indices()), den(rf.den.indices());
    for (auto& c : num) c = pf.emb.map_index(c);
    for (auto& c : den) c = pf.emb.map_index(c);
    auto horner = [&](const std::vector<uint64_t>& c, uint64_t x) {
      uint64_t acc = 0;
      for (size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, x), c[i]);
      return acc;
    };
    auto classify = [&](uint64_t a, uint64_t b) -> EvalOutcome {
      if (a == 0 && b == 0)
        throw internal_error("scan_values: coprime num/den vanish together");
      if (a == 0) return {EvalOutcome::Kind::Zero, big.zero()};
      if (b == 0) return {EvalOutcome::Kind::Pole, big.zero()};
      return {EvalOutcome::Kind::Unit, FieldElement(big, big.div(a, b))};
    };
    uint64_t qn = big.order();
    if (qn + 1 > cap) throw cap_error("scan_values: P1 exceeds cap");
    RationalPoint pt;
    pt.coords = {0, 1};
    fn(pt, classify(horner(num, 0), horner(den, 0)));
    {
      int d = std::max(rf.num.degree(), rf.den.degree());
      uint64_t a = rf.num.degree() == d ? pf.emb.map_index(rf.num.coeff_index(d)) : 0;
      uint64_t b = rf.den.degree() == d ? pf.emb.map_index(rf.den.coeff_index(d)) : 0;
      pt.coords = {1, 0};
      fn(pt, classify(a, b));
    }
    for (uint64_t x = 1; x < qn; ++x) {
      pt.coords = {x, 1};
      fn(pt, classify(horner(num, x), horner(den, x)));
    }
    return;
  }

  EmbeddedForm A(g.form_num(), pf.emb), B(g.form_den(), pf.emb);
  auto classify = [&](uint64_t a, uint64_t b) -> EvalOutcome {
    if (a == 0 && b == 0) return {EvalOutcome::Kind::Indeterminate, big.zero()};
    if (a == 0) return {EvalOutcome::Kind::Zero, big.zero()};
    if (b == 0) return {EvalOutcome::Kind::Pole, big.zero()};
    return {EvalOutcome::Kind::Unit, FieldElement(big, big.div(a, b))};
  };
  for_each_point(X, n,
                 [&](const RationalPoint& p) {
                   uint64_t a = A.eval(p.coords[0], p.coords[1], p.coords[2]);
                   uint64_t b = B.eval(p.coords[0], p.coords[1], p.coords[2]);
                   fn(p, classify(a, b));
                 },
                 cap);
}

std::vector<RationalPoint> restricted_points(const FunctionOnVariety& g,
                                             const VarietyModel& X, uint32_t n,
                                             uint64_t cap) {
  std::vector<RationalPoint> pts;
  scan_values(g, X, n,
              [&](const RationalPoint& p, const EvalOutcome& v) {
                if (v.kind == EvalOutcome::Kind::Unit) pts.push_back(p);
              },
              cap);
  std::sort(pts.begin(), pts.end());
  return pts;
}

RestrictedCounts restricted_points_counts(const FunctionOnVariety& g,
                                          const VarietyModel& X, uint32_t n,
                                          uint64_t cap) {
  RestrictedCounts c;
  scan_values(g, X, n,
              [&](const RationalPoint&, const EvalOutcome& v) {
                switch (v.kind) {
                  case EvalOutcome::Kind::Unit: ++c.units; break;
                  case EvalOutcome::Kind::Zero: ++c.zeros; break;
                  case EvalOutcome::Kind::Pole: ++c.poles; break;
                  case EvalOutcome::Kind::Indeterminate: ++c.indeterminate; break;
                }
              },
              cap);
  return c;
}

PointCountReport point_count_report(const VarietyModel& X, uint32_t n,
                                    uint64_t cap) {
  uint64_t count = count_points(X, n, cap);
  int r = X.dim();
  uint64_t q = X.base().order();
  uint64_t qnr = 1;
  for (int i = 0; i < (int)n * r; ++i) qnr *= q;
  uint64_t dev = count > qnr ? count - qnr : qnr - count;
  double denom = std::pow((double)q, (double)n * ((double)r - 0.5));
  return {count, (double)dev / denom};
}

RationalPoint frobenius(const VarietyModel& X, const RationalPoint& rho,
                        uint32_t n, uint64_t cap) {
  PointField pf(X.base(), n, cap);
  validate_point(X, rho, pf.big->order());
  RationalPoint out = rho;
  for (auto& c : out.coords) c = pf.big->pow(c, X.base().order());
  return out;
}

}  // namespace artinff

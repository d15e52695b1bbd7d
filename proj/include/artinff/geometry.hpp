#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artinff/finite_field.hpp"
#include "artinff/poly.hpp"

namespace artinff {

// Trivariate polynomial in x, y, z over GF(q); used homogeneous.
class Form {
 public:
  struct Term {
    uint32_t ex, ey, ez;
    uint64_t coeff;  // element index, nonzero
    friend bool operator<(const Term& a, const Term& b) {
      if (a.ex != b.ex) return a.ex > b.ex;
      if (a.ey != b.ey) return a.ey > b.ey;
      return a.ez > b.ez;
    }
  };

  explicit Form(const FiniteField& f) : f_(&f) {}
  static Form from_terms(const FiniteField& f, std::vector<Term> terms);
  static Form parse(const FiniteField& f, const std::string& text);

  const FiniteField& field() const { return *f_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  uint32_t degree() const;  // max total degree; 0 for the zero form

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const;
  friend bool operator==(const Form& a, const Form& b) {
    return a.f_ == b.f_ && a.terms_ == b.terms_;
  }

  FieldElement eval(FieldElement x, FieldElement y, FieldElement z) const;
  std::string str() const;

 private:
  const FiniteField* f_;
  std::vector<Term> terms_;  // sorted, coefficients nonzero
};

inline bool operator==(const Form::Term& a, const Form::Term& b) {
  return a.ex == b.ex && a.ey == b.ey && a.ez == b.ez && a.coeff == b.coeff;
}

// One of the three concrete models: P^1, a plane curve in P^2, or P^2.
class VarietyModel {
 public:
  enum class Kind { ProjectiveLine, PlaneCurve, ProjectivePlane };

  static VarietyModel projective_line(const FiniteField& f);
  static VarietyModel projective_plane(const FiniteField& f);
  // f homogeneous of degree >= 1; geometric integrality is asserted by the
  // caller and only spot-checked in verify mode.
  static VarietyModel plane_curve(Form f);
  static VarietyModel parse(const FiniteField& f, const std::string& spec);

  Kind kind() const { return kind_; }
  const FiniteField& base() const { return *f_; }
  int dim() const { return kind_ == Kind::ProjectivePlane ? 2 : 1; }
  int ambient_coords() const {
    return kind_ == Kind::ProjectiveLine ? 2 : 3;
  }
  const Form& curve() const;
  std::string str() const;

 private:
  VarietyModel(Kind k, const FiniteField& f) : kind_(k), f_(&f) {}
  Kind kind_;
  const FiniteField* f_;
  std::optional<Form> curve_;
};

// Projective point over GF(q^n), normalized so the last nonzero coordinate
// is 1.  Coordinates are element indices in the point field.
struct RationalPoint {
  std::vector<uint64_t> coords;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    return a.coords < b.coords;  // lexicographic = canonical order
  }
};

// g in K(X): a rational function of t on P^1, or a ratio A/B of equal-degree
// forms on a curve or on P^2.
class FunctionOnVariety {
 public:
  static FunctionOnVariety on_line(RationalFunction g);
  static FunctionOnVariety form_ratio(Form A, Form B);
  static FunctionOnVariety parse(const VarietyModel& X, const std::string& s);

  bool is_line_function() const { return rf_.has_value(); }
  const RationalFunction& rf() const;
  const Form& form_num() const;
  const Form& form_den() const;
  const FiniteField& field() const;
  std::string str() const;

 private:
  FunctionOnVariety() = default;
  std::optional<RationalFunction> rf_;
  std::optional<Form> A_, B_;
};

// The field GF(q^n) the degree-n rational points live in, together with the
// embedding of the base field.  Built once per experiment.
struct PointField {
  const FiniteField* big;
  FieldEmbedding emb;

  PointField(const FiniteField& base, uint32_t n,
             uint64_t cap = kDefaultEnumerationCap);
};

struct EvalOutcome {
  enum class Kind { Unit, Zero, Pole, Indeterminate } kind;
  FieldElement value;  // set only for Unit
};

// Streams the F_{q^n}-points of X; order is deterministic but only
// enumerate_points guarantees the canonical (sorted) order.
void for_each_point(const VarietyModel& X, uint32_t n,
                    const std::function<void(const RationalPoint&)>& fn,
                    uint64_t cap = kDefaultEnumerationCap);

std::vector<RationalPoint> enumerate_points(
    const VarietyModel& X, uint32_t n, uint64_t cap = kDefaultEnumerationCap);

// Number of points X(F_{q^n}) without materializing the list.
uint64_t count_points(const VarietyModel& X, uint32_t n,
                      uint64_t cap = kDefaultEnumerationCap);

EvalOutcome evaluate(const FunctionOnVariety& g, const VarietyModel& X,
                     const RationalPoint& rho, uint32_t n,
                     uint64_t cap = kDefaultEnumerationCap);

// Streams (point, g(point)) over all of X(F_{q^n}); the workhorse behind
// restricted_points, the counting algorithms and the character sums.  The
// point reference is only valid inside the callback.
void scan_values(const FunctionOnVariety& g, const VarietyModel& X, uint32_t n,
                 const std::function<void(const RationalPoint&,
                                          const EvalOutcome&)>& fn,
                 uint64_t cap = kDefaultEnumerationCap);

// R_g^(n): the points where g is a unit.  Indeterminate points are excluded
// and surfaced through restricted_points_counts.
std::vector<RationalPoint> restricted_points(
    const FunctionOnVariety& g, const VarietyModel& X, uint32_t n,
    uint64_t cap = kDefaultEnumerationCap);

struct RestrictedCounts {
  uint64_t units = 0, zeros = 0, poles = 0, indeterminate = 0;
};
RestrictedCounts restricted_points_counts(const FunctionOnVariety& g,
                                          const VarietyModel& X, uint32_t n,
                                          uint64_t cap = kDefaultEnumerationCap);

struct PointCountReport {
  uint64_t count;
  double lang_weil_ratio;  // |count - q^(nr)| / q^(n(r-1/2))
};
PointCountReport point_count_report(const VarietyModel& X, uint32_t n,
                                    uint64_t cap = kDefaultEnumerationCap);

// Coordinate-wise q-power map; permutes X(F_{q^n}).
RationalPoint frobenius(const VarietyModel& X, const RationalPoint& rho,
                        uint32_t n, uint64_t cap = kDefaultEnumerationCap);

}  // namespace artinff

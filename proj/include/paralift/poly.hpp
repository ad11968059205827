#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paralift/chart.hpp"
#include "paralift/split_complex.hpp"

namespace paralift {

// Exponent vector over a chart's coordinates; length equals the chart dim.
using Monomial = std::vector<int>;

// Canonical multivariate polynomial over split-complex rational
// coefficients.  The term map stores no zero coefficients and its keys are
// ordered lexicographically in the chart's coordinate order, so two polys
// over the same chart are equal iff their term maps are identical.
// Values are immutable once built; every operation returns a fresh poly.
class Poly {
 public:
  using TermMap = std::map<Monomial, SplitComplex>;

  Poly() = default;                // no chart; only assignable
  explicit Poly(Chart chart);      // zero polynomial

  static Poly constant(const Chart& chart, const SplitComplex& value);
  static Poly coordinate(const Chart& chart, int index);
  static Poly coordinate(const Chart& chart, std::string_view name);
  // Single term; exponents must be non-negative and match the chart dim.
  static Poly term(const Chart& chart, Monomial exponents, const SplitComplex& coeff);

  const Chart& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  SplitComplex constant_value() const;  // 0 for the zero poly
  int total_degree() const;             // -1 for the zero poly
  int degree_in(int coord_index) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const SplitComplex& c) const;
  Poly pow(int n) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.chart_ == b.chart_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Formal partial derivative.
  Poly diff(int coord_index) const;
  Poly diff(std::string_view coord_name) const;  // unknown coordinate -> error

  // Exact substitution; a ring homomorphism.  The point must assign every
  // coordinate of the chart.
  SplitComplex eval(const std::vector<SplitComplex>& point) const;
  SplitComplex eval(const std::map<std::string, SplitComplex>& point) const;

  // Ring morphism sending coordinate i to images[i] (all over `target`).
  Poly substitute(const Chart& target, const std::vector<Poly>& images) const;

  // f = f_plus * e+ + f_minus * e-, both factors with real coefficients.
  std::pair<Poly, Poly> idempotent_decompose() const;
  static Poly from_idempotent_parts(const Poly& plus, const Poly& minus);

  // Deterministic pretty-printer; output re-parses to an equal poly.
  std::string str() const;

 private:
  void insert_term(const Monomial& m, const SplitComplex& c);

  Chart chart_;
  TermMap terms_;
};

Poly operator*(const Poly& a, const SplitComplex& c);
Poly operator*(const SplitComplex& c, const Poly& a);

}  // namespace paralift

#pragma once

#include <string>
#include <vector>

#include "paralift/poly.hpp"

namespace paralift {

// Component containers for tensor fields in a fixed chart.  The (1,1)
// convention is T = comp[beta][alpha] d/dx^beta (x) dx^alpha, so that
// apply(T, Z)^beta = sum_alpha comp[beta][alpha] * Z^alpha.

struct VectorField {
  Chart chart;
  std::vector<Poly> comp;  // Z = sum comp[a] d/dx^a

  VectorField() = default;
  explicit VectorField(const Chart& c);  // zero field
  VectorField(Chart c, std::vector<Poly> components);

  static VectorField basis(const Chart& c, int index);  // d/dx^index
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.chart == b.chart && a.comp == b.comp;
  }
  bool is_zero() const;
};

struct OneForm {
  Chart chart;
  std::vector<Poly> comp;  // w = sum comp[a] dx^a

  OneForm() = default;
  explicit OneForm(const Chart& c);
  OneForm(Chart c, std::vector<Poly> components);

  static OneForm basis(const Chart& c, int index);  // dx^index
  friend bool operator==(const OneForm& a, const OneForm& b) {
    return a.chart == b.chart && a.comp == b.comp;
  }
  bool is_zero() const;
};

struct Tensor11 {
  Chart chart;
  std::vector<std::vector<Poly>> comp;  // comp[row][col], square

  Tensor11() = default;
  explicit Tensor11(const Chart& c);  // zero tensor
  Tensor11(Chart c, std::vector<std::vector<Poly>> components);

  static Tensor11 identity(const Chart& c);
  friend bool operator==(const Tensor11& a, const Tensor11& b) {
    return a.chart == b.chart && a.comp == b.comp;
  }
  bool is_zero() const;
  Poly trace() const;
};

struct Metric {
  Chart chart;
  std::vector<std::vector<Poly>> comp;  // symmetric; checked on construction

  Metric() = default;
  Metric(Chart c, std::vector<std::vector<Poly>> components);
};

// Pointwise tensor algebra.  All binary operations require matching charts.
VectorField apply_tensor(const Tensor11& T, const VectorField& Z);
Poly pair(const OneForm& w, const VectorField& Z);
Tensor11 tensor_product(const VectorField& Z, const OneForm& w);
Tensor11 compose(const Tensor11& T, const Tensor11& S);  // T after S
OneForm compose(const OneForm& w, const Tensor11& T);    // w after T

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(const Poly& f, const VectorField& Z);
OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm operator*(const Poly& f, const OneForm& w);
Tensor11 operator+(const Tensor11& a, const Tensor11& b);
Tensor11 operator-(const Tensor11& a, const Tensor11& b);
Tensor11 scaled(const Tensor11& T, const SplitComplex& c);

// Z acting on f as a derivation.
Poly apply_vector(const VectorField& Z, const Poly& f);

// [X,Y]^b = sum_a (X^a d_a Y^b - Y^a d_a X^b)
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

}  // namespace paralift

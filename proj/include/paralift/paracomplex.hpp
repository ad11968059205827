#pragma once

#include <vector>

#include "paralift/fields.hpp"

namespace paralift {

// Change of frame between a real chart (x^1..x^m, y^1..y^m) and the
// paracomplex chart (z^1..z^m, zb^1..zb^m) with z = x + j*y, zb = x - j*y.
// z and zb are independent formal coordinates; no conjugation operator is
// involved.  Frames transform by
//   d/dz  = (d/dx - j d/dy)/2,   d/dzb = (d/dx + j d/dy)/2,
//   dz    = dx + j dy,           dzb   = dx - j dy,
// and component functions are rewritten through the exact coordinate
// substitution x = (z+zb)/2, y = j(z-zb)/2.  The round trip is exact.
class ParacomplexChange {
 public:
  // Pairs coordinate i with coordinate m+i.  Throws on odd dimension.
  explicit ParacomplexChange(const Chart& real_chart);

  const Chart& real_chart() const { return real_; }
  const Chart& para_chart() const { return para_; }
  int pairs() const { return m_; }

  Poly to_para(const Poly& f) const;
  Poly to_real(const Poly& f) const;
  VectorField to_para(const VectorField& Z) const;
  VectorField to_real(const VectorField& Z) const;
  OneForm to_para(const OneForm& w) const;
  OneForm to_real(const OneForm& w) const;
  Tensor11 to_para(const Tensor11& T) const;
  Tensor11 to_real(const Tensor11& T) const;
  Metric to_para(const Metric& G) const;
  Metric to_real(const Metric& G) const;

 private:
  Chart real_;
  Chart para_;
  int m_ = 0;
  // frame_[old][new]: para basis vectors written in the real frame, and its
  // inverse.  Entries are constants.
  std::vector<std::vector<SplitComplex>> frame_;
  std::vector<std::vector<SplitComplex>> frame_inv_;
  std::vector<Poly> real_in_para_;  // x,y as polys over the para chart
  std::vector<Poly> para_in_real_;  // z,zb as polys over the real chart
};

// J with J(d/dx^a) = d/dy^a and J(d/dy^a) = d/dx^a on a real chart
// (x^1..x^m, y^1..y^m); squares to the identity.
Tensor11 canonical_product_structure(const Chart& real_chart);

}  // namespace paralift

#pragma once

#include <vector>

#include "paralift/fields.hpp"

namespace paralift {

// Tangent-bundle chart over a base chart of dimension m: the m base
// coordinates followed by their m fiber partners, named with a trailing
// apostrophe (x -> x').
struct LiftedChart {
  Chart base;
  Chart tm;

  int base_dim() const { return base.dim(); }
  int fiber_index(int base_index) const { return base.dim() + base_index; }
};

// Throws if a primed name would collide with an existing coordinate.
LiftedChart tangent_chart(const Chart& base);

// Affine connection on the base chart.  gamma[b][g][a] holds the
// Christoffel symbol with value index b, fiber-contraction index g and
// form index a; all components are base-chart polys.
struct Connection {
  Chart base;
  std::vector<std::vector<std::vector<Poly>>> gamma;

  Connection() = default;
  static Connection flat(const Chart& base);
  void set(int value, int contraction, int form, const Poly& entry);
  bool is_flat() const;
};

// --- scalar lifts -----------------------------------------------------
// f^v is f reread through the projection; f^c is the fiber-weighted
// gradient; f^h is identically zero.
Poly vlift_scalar(const LiftedChart& lc, const Poly& f);
Poly clift_scalar(const LiftedChart& lc, const Poly& f);
Poly gamma_grad(const LiftedChart& lc, const Poly& f);
Poly hlift_scalar(const LiftedChart& lc, const Poly& f);

// --- vertical and complete lifts --------------------------------------
VectorField vlift_vector(const LiftedChart& lc, const VectorField& Z);
VectorField clift_vector(const LiftedChart& lc, const VectorField& Z);
OneForm vlift_oneform(const LiftedChart& lc, const OneForm& w);
OneForm clift_oneform(const LiftedChart& lc, const OneForm& w);
Tensor11 vlift_tensor11(const LiftedChart& lc, const Tensor11& F);
Tensor11 clift_tensor11(const LiftedChart& lc, const Tensor11& F);

// --- connection machinery and horizontal lifts ------------------------
// Two-index connection components on TM: fiber-linear contraction
// G^b_a = sum_g fiber^g * (gamma[b][g][a])^v.
std::vector<std::vector<Poly>> fiber_gamma(const LiftedChart& lc, const Connection& conn);

struct AdaptedFrame {
  std::vector<VectorField> D;  // D_a = d/dbase^a - sum_b G^b_a d/dfiber^b
  std::vector<VectorField> V;  // V_a = d/dfiber^a
};
struct AdaptedCoframe {
  std::vector<OneForm> theta;  // theta^a = d base^a
  std::vector<OneForm> eta;    // eta^a = d fiber^a + sum_b G^a_b d base^b
};
AdaptedFrame adapted_frame(const LiftedChart& lc, const Connection& conn);
AdaptedCoframe adapted_coframe(const LiftedChart& lc, const Connection& conn);

VectorField hlift_vector(const LiftedChart& lc, const VectorField& Z, const Connection& conn);
OneForm hlift_oneform(const LiftedChart& lc, const OneForm& w, const Connection& conn);
Tensor11 hlift_tensor11(const LiftedChart& lc, const Tensor11& F, const Connection& conn);

}  // namespace paralift

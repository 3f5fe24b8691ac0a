#ifndef CYCHOM_FILTRATION_HPP
#define CYCHOM_FILTRATION_HPP

// Filtration of the absolute forms on a product R⊗A by the number of
// exterior factors coming from the A side.  The graded pieces are compared
// against the rank-one products Ω^{i-j} of R times Ω^j of A, each side
// computed from its own presentation.

#include <string>
#include <vector>

#include <cychom/kaehler.hpp>

namespace cychom {

struct FiltrationLadder {
  std::string base, artin;
  int degree = 0;
  std::vector<int> f_dims;    // F^0 ⊇ … ⊇ F^{degree+1}
  std::vector<int> gr_dims;   // Gr^j = F^j − F^{j+1}
  std::vector<int> expected;  // dim Ω^{degree−j} of R · dim Ω^j of A
  int total() const { return f_dims.empty() ? 0 : f_dims.front(); }
  bool holds() const { return gr_dims == expected; }
};

// The flag picking the A side of the product: its generators sit after R's,
// and the dt column (present over Q(t)) counts as an A-side direction.
template <Field F>
FiltrationLadder filtration_ladder(const FinCommAlgebra<F>& r,
                                   const FinCommAlgebra<F>& a, int i) {
  if (i < 0) throw out_of_range("filtration_ladder: negative degree");
  if (!r.pres || !a.pres)
    throw input_error("filtration_ladder: factors need presentations");

  const bool with_dt = field_label_of<F>() == "Q(t)";
  auto t = tensor(r, a);
  auto omega = kaehler(t, i, with_dt);
  const int n_r = static_cast<int>(r.pres->gen_names.size());
  const int dim_t = t.dim();
  auto a_side_count = [&](const std::vector<int>& wedge) {
    int c = 0;
    for (int g : wedge)
      if (g >= n_r) ++c; // covers A generators and the trailing dt column
    return c;
  };

  FiltrationLadder lad;
  lad.base = r.name;
  lad.artin = a.name;
  lad.degree = i;
  for (int j = 0; j <= i + 1; ++j) {
    auto red = omega.quotient.seeded_reducer();
    int dim_fj = 0;
    for (size_t wi = 0; wi < omega.wedges.size(); ++wi) {
      if (a_side_count(omega.wedges[wi]) < j) continue;
      for (int c = 0; c < dim_t; ++c) {
        SparseVec<F> unit{{omega.ambient_index(static_cast<int>(wi), c), F{1}}};
        if (red.add(unit)) ++dim_fj;
      }
    }
    lad.f_dims.push_back(dim_fj);
  }
  for (int j = 0; j <= i; ++j)
    lad.gr_dims.push_back(lad.f_dims[static_cast<size_t>(j)] -
                          lad.f_dims[static_cast<size_t>(j) + 1]);

  for (int j = 0; j <= i; ++j) {
    int r_side = kaehler(r, i - j).dim();
    int a_side = kaehler(a, j, with_dt).dim();
    lad.expected.push_back(r_side * a_side);
  }
  return lad;
}

} // namespace cychom

#endif

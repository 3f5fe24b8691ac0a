#ifndef CYCHOM_HKR_HPP
#define CYCHOM_HKR_HPP

// Weightwise comparison of the two computations a graded polynomial slice
// supports: tensor-complex homology against differential forms.  The bridge
// is the classical map a_0⊗a_1⊗…⊗a_n ↦ a_0 da_1∧…∧da_n, realized as an
// exact matrix so the comparison checks the map itself (chain-level kill of
// boundaries, surjectivity on cycles), not just two dimensions.

#include <algorithm>
#include <vector>

#include <cychom/bar_complex.hpp>
#include <cychom/cyclic.hpp>
#include <cychom/kaehler.hpp>

namespace cychom {

// Matrix of a_0⊗…⊗a_n ↦ a_0 da_1∧…∧da_n from the degree-n chain space into
// the degree-n form module.  Expands each da_i over the generators, so a
// column costs at most g^n terms.
inline SparseMatrix<Rational> forms_from_tensors(
    ChainSpaces& cs, int n, const KaehlerModule<Rational>& omega) {
  if (omega.degree != n)
    throw input_error("forms_from_tensors: form degree does not match");
  if (omega.with_dt)
    throw input_error("forms_from_tensors: relative forms only");
  const auto& a = cs.algebra();
  if (omega.alg != &a)
    throw input_error("forms_from_tensors: modules over different algebras");
  const auto& pres = *a.pres;
  const int ngens = static_cast<int>(pres.gen_names.size());
  const auto& src = cs.space(n);

  SparseMatrix<Rational> out(omega.dim(), src.size());
  for (int col = 0; col < src.size(); ++col) {
    const auto& tup = src.tuples[static_cast<size_t>(col)];
    std::map<int, Rational> acc;

    // choice[i] = generator differentiated in factor i+1
    std::vector<int> wedge;
    std::vector<int> mono = pres.basis[static_cast<size_t>(tup[0])];
    std::function<void(int, int, std::vector<int>)> walk =
        [&](int i, int sign, std::vector<int> m) {
          if (i == n + 1) {
            if (auto c = pres.index_of(m)) {
              auto wit = std::lower_bound(omega.wedges.begin(),
                                          omega.wedges.end(), wedge);
              int wi = static_cast<int>(wit - omega.wedges.begin());
              acc[omega.ambient_index(wi, *c)] += Rational(sign);
            }
            return;
          }
          const auto& e = pres.basis[static_cast<size_t>(tup[i])];
          for (int g = 0; g < ngens; ++g) {
            if (e[static_cast<size_t>(g)] == 0) continue;
            auto ins = detail::wedge_insert(g, wedge);
            if (!ins) continue;
            auto m2 = m;
            for (int j = 0; j < ngens; ++j)
              m2[static_cast<size_t>(j)] += e[static_cast<size_t>(j)];
            --m2[static_cast<size_t>(g)];
            std::swap(wedge, ins->second);
            walk(i + 1, sign * ins->first * e[static_cast<size_t>(g)], m2);
            std::swap(wedge, ins->second);
          }
        };
    walk(1, 1, mono);

    SparseVec<Rational> ambient;
    for (const auto& [k, x] : acc)
      if (!(x == Rational(0))) ambient.emplace_back(k, x);
    for (const auto& [r, x] : omega.quotient.coords(ambient))
      out.add(r, col, x);
  }
  out.finalize();
  return out;
}

struct HkrReport {
  int n = 0, w = 0;
  int chain_side = 0; // homology of the weight-w tensor block
  int form_side = 0;  // dim of the weight-w forms
  bool map_well_defined = false; // boundaries land in zero
  bool map_surjective = false;   // cycles cover every weight-w form
  bool holds() const {
    return chain_side == form_side && map_well_defined && map_surjective;
  }
};

inline HkrReport hkr_compare(const GradedPolySlice& slice, int n, int w,
                             long budget = kDefaultTupleBudget) {
  if (n < 0) throw out_of_range("hkr_compare: negative degree");
  if (w < 0 || w > slice.truncation_weight)
    throw out_of_range("hkr_compare: weight outside the slice");

  ComplexSpec spec;
  spec.alg = &slice.algebra;
  spec.variant = Variant::normalized;
  spec.weight = w;
  ChainSpaces cs(spec, n + 1, budget);

  HkrReport rep;
  rep.n = n;
  rep.w = w;
  rep.chain_side = homology_dim(cs.b(n + 1), cs.b(n));

  auto omega = kaehler(slice.algebra, n);
  rep.form_side = omega.weight_dim(w);

  auto mu = forms_from_tensors(cs, n, omega);
  rep.map_well_defined = (mu * cs.b(n + 1)).is_zero_matrix();

  SparseMatrix<Rational> image(omega.dim(), 0);
  {
    auto cycles = kernel_basis(cs.b(n));
    SparseMatrix<Rational> img(omega.dim(),
                               static_cast<int>(cycles.size()));
    for (size_t k = 0; k < cycles.size(); ++k)
      for (const auto& [r, x] : mu.apply(cycles[k]))
        img.add(r, static_cast<int>(k), x);
    img.finalize();
    image = std::move(img);
  }
  rep.map_surjective = rank(image) == rep.form_side;
  return rep;
}

struct LodayQuillenReport {
  int n = 0, w = 0;
  int cyclic_side = 0;    // weight-w cyclic homology
  int forms_mod_exact = 0; // (Ω^n / dΩ^{n-1}) in weight w
  int de_rham_tail = 0;    // Σ_{j≥1} H^{n-2j} in weight w
  bool holds() const { return cyclic_side == forms_mod_exact + de_rham_tail; }
};

inline LodayQuillenReport loday_quillen_check(const GradedPolySlice& slice,
                                              int n, int w,
                                              long budget = kDefaultTupleBudget) {
  if (n < 0) throw out_of_range("loday_quillen_check: negative degree");
  if (w < 0 || w > slice.truncation_weight)
    throw out_of_range("loday_quillen_check: weight outside the slice");

  ComplexSpec spec;
  spec.alg = &slice.algebra;
  spec.weight = w;
  LodayQuillenReport rep;
  rep.n = n;
  rep.w = w;
  rep.cyclic_side = cyclic_dims_for_spec(spec, n, budget)[static_cast<size_t>(n)];

  DeRham<Rational> dr = de_rham(slice.algebra, n);
  rep.forms_mod_exact = dr.omega[static_cast<size_t>(n)].weight_dim(w);
  if (n > 0) {
    const auto& d_below = dr.d[static_cast<size_t>(n) - 1];
    rep.forms_mod_exact -= rank_in_weight(
        d_below, dr.omega[static_cast<size_t>(n)].basis_weights(),
        dr.omega[static_cast<size_t>(n) - 1].basis_weights(), w);
  }
  for (int j = 1; n - 2 * j >= 0; ++j)
    rep.de_rham_tail += de_rham_weight_dim(dr, n - 2 * j, w);
  return rep;
}

} // namespace cychom

#endif

#ifndef CYCHOM_RELATIVE_HPP
#define CYCHOM_RELATIVE_HPP

// Invariants of an augmented product R⊗A relative to its base R.  The
// augmentation of A splits the projection C(R⊗A) → C(R), so the relative
// complex is the literal kernel: the span of tuples with at least one factor
// in R⊗m_A.  Everything downstream (homology, eigenspace pieces, the
// degree-wise splitting) is computed on that subcomplex and cross-checked
// against the split identity total = relative + base.

#include <optional>
#include <string>
#include <vector>

#include <cychom/cyclic.hpp>
#include <cychom/hochschild.hpp>
#include <cychom/hodge.hpp>
#include <cychom/sbi.hpp>

namespace cychom {

struct AugmentedPair {
  FinCommAlgebra<Rational> base, artin, total;

  int m_dim() const { return artin.dim() - 1; }

  // the two complexes the pair supports, both normalized
  ComplexSpec total_spec() const {
    ComplexSpec s;
    s.alg = &total;
    s.variant = Variant::normalized;
    return s;
  }
  ComplexSpec relative_spec() const {
    ComplexSpec s;
    s.alg = &total;
    s.variant = Variant::relative_normalized;
    s.dim_a = artin.dim();
    s.unit_a = artin.unit_index;
    return s;
  }
};

inline AugmentedPair augmented_pair(const FinCommAlgebra<Rational>& r,
                                    const FinCommAlgebra<Rational>& a) {
  if (!r.pres || !a.pres)
    throw input_error("augmented_pair: factors need presentations");
  if (a.aug.empty())
    throw not_artinian("augmented_pair: the second factor has no augmentation");
  AugmentedPair p;
  p.base = r;
  p.artin = a;
  p.total = tensor(r, a);
  return p;
}

struct RelativeReport {
  int degree = 0;
  int eigen = -1; // -1: no eigenspace restriction
  Theory theory = Theory::hh;
  int relative_dim = 0;
  int total_dim = 0;
  int base_dim = 0;
  bool split() const { return total_dim == relative_dim + base_dim; }
  void require_split() const {
    if (!split())
      throw splitting_failure(
          "relative_homology: total != relative + base at degree " +
          std::to_string(degree));
  }
};

inline RelativeReport relative_homology(const AugmentedPair& pair, int n,
                                        std::optional<int> eigen, Theory theory,
                                        long budget = kDefaultTupleBudget) {
  if (n < 0) throw out_of_range("relative_homology: negative degree");
  if (eigen && (*eigen < 0 || *eigen > n))
    throw out_of_range("relative_homology: need 0 <= eigen <= degree");

  RelativeReport rep;
  rep.degree = n;
  rep.eigen = eigen ? *eigen : -1;
  rep.theory = theory;

  auto dims_for = [&](const ComplexSpec& spec) {
    if (eigen)
      return hodge_dims_for_spec(spec, n, theory,
                                 budget)[static_cast<size_t>(*eigen)];
    ChainSpaces cs(spec, n + 1, budget);
    if (theory == Theory::hh) return homology_dim(cs.b(n + 1), cs.b(n));
    MixedTotal tot(cs);
    return mixed_total_dim(tot, n);
  };

  rep.relative_dim = dims_for(pair.relative_spec());
  rep.total_dim = dims_for(pair.total_spec());
  ComplexSpec base_spec;
  base_spec.alg = &pair.base;
  base_spec.variant = Variant::normalized;
  rep.base_dim = dims_for(base_spec);
  return rep;
}

struct GoodwillieReport {
  int degree = 0;
  int hc_prev = 0; // HC̄^{(n-1)}_{n-1}
  int hh_top = 0;  // HH̄^{(n)}_n
  int hc_top = 0;  // HC̄^{(n)}_n
  bool b_injective = false;
  bool i_surjective = false;
  bool composite_zero = false;
  bool middle_exact = false;
  bool holds() const {
    return b_injective && i_surjective && composite_zero && middle_exact &&
           hh_top == hc_prev + hc_top;
  }
  void require() const {
    if (holds()) return;
    std::string node = !b_injective        ? "the connecting map is not injective"
                       : !i_surjective     ? "the inclusion is not surjective"
                       : !composite_zero   ? "the composite is nonzero"
                       : !middle_exact     ? "im != ker in the middle"
                                           : "dimension identity fails";
    throw splitting_failure("goodwillie_splitting_check: " + node);
  }
};

// The degree-n short exact sequence
//   0 → HC̄^{(n-1)}_{n-1} —B→ HH̄^{(n)}_n —I→ HC̄^{(n)}_n → 0
// realized on homology bases of the relative complex.  Stated for graded A
// with only the unit in weight zero, over the rationals.
inline GoodwillieReport goodwillie_splitting_check(
    const AugmentedPair& pair, int n, long budget = kDefaultTupleBudget) {
  if (n < 1) throw out_of_range("goodwillie_splitting_check: need degree >= 1");
  if (!pair.artin.graded)
    throw input_error(
        "goodwillie_splitting_check: the splitting is asserted for graded "
        "input only; use sbi_sequence for the exactness statement");
  for (int k = 0; k < pair.artin.dim(); ++k)
    if (k != pair.artin.unit_index &&
        pair.artin.weights[static_cast<size_t>(k)] == 0)
      throw input_error(
          "goodwillie_splitting_check: weight zero must be spanned by the unit");

  ComplexSpec spec = pair.relative_spec();
  ChainSpaces cs(spec, n + 1, budget);
  MixedTotal tot(cs);

  auto hc_prev = homology_space(tot.D(n), tot.D(n - 1));
  auto hh_top = homology_space(cs.b(n + 1), cs.b(n));
  auto hc_top = homology_space(tot.D(n + 1), tot.D(n));

  std::vector<std::vector<SparseMatrix<Rational>>> proj;
  for (int d = 0; d <= n; ++d) proj.push_back(hodge_projectors(cs, d));

  auto p_hc_prev = mixed_piece_projector(tot, proj, n - 1, n - 1);
  auto p_hh = detail::projector_or_zero(proj, n, n, cs.dim(n));
  auto p_hc = mixed_piece_projector(tot, proj, n, n);
  auto q_hc_prev = detail::induced_map(
      hc_prev, hc_prev,
      [&](const SparseVec<Rational>& v) { return p_hc_prev.apply(v); });
  auto q_hh = detail::induced_map(
      hh_top, hh_top,
      [&](const SparseVec<Rational>& v) { return p_hh.apply(v); });
  auto q_hc = detail::induced_map(
      hc_top, hc_top,
      [&](const SparseVec<Rational>& v) { return p_hc.apply(v); });

  int cut = cs.dim(n - 1);
  const auto& bmap = cs.B(n - 1);
  auto conn = detail::induced_map(
      hc_prev, hh_top, [cut, &bmap](const SparseVec<Rational>& v) {
        SparseVec<Rational> head;
        for (const auto& [i, x] : v)
          if (i < cut) head.emplace_back(i, x);
        return bmap.apply(head);
      });
  auto incl = detail::induced_map(
      hh_top, hc_top, [](const SparseVec<Rational>& v) { return v; });

  auto b_res = conn * q_hc_prev;
  auto i_res = incl * q_hh;

  GoodwillieReport rep;
  rep.degree = n;
  rep.hc_prev = rank(q_hc_prev);
  rep.hh_top = rank(q_hh);
  rep.hc_top = rank(q_hc);
  rep.b_injective = rank(b_res) == rep.hc_prev;
  rep.i_surjective = rank(i_res) == rep.hc_top;
  rep.composite_zero = (i_res * b_res).is_zero_matrix();
  rep.middle_exact = rank(b_res) == rep.hh_top - rank(i_res);
  rep.require();
  return rep;
}

struct ChowAffineReport {
  int p = 0;
  int hc_top = 0;  // HC̄^{(p-1)}_{p-1}
  int hh_top = 0;  // HH̄^{(p-1)}_{p-1}
  int hc_prev = 0; // HC̄^{(p-2)}_{p-2}
  bool identity() const { return hh_top == hc_prev + hc_top; }
};

// Affine-level dimensions feeding the degree-p formal deformation space:
// for p = 1 just the sections HC̄^{(0)}_0 = R⊗m_A, for p >= 2 the Goodwillie
// triple at degree p-1.
inline ChowAffineReport formal_chow_affine(const AugmentedPair& pair, int p,
                                           long budget = kDefaultTupleBudget) {
  if (p < 1) throw out_of_range("formal_chow_affine: need p >= 1");
  ChowAffineReport rep;
  rep.p = p;
  if (p == 1) {
    rep.hc_top =
        relative_homology(pair, 0, 0, Theory::hc, budget).relative_dim;
    int expected = pair.base.dim() * pair.m_dim();
    if (rep.hc_top != expected)
      throw oracle_mismatch("formal_chow_affine: degree-0 sections gave " +
                            std::to_string(rep.hc_top) + ", expected dim R * dim m = " +
                            std::to_string(expected));
    rep.hh_top = rep.hc_top;
    return rep;
  }
  int n = p - 1;
  rep.hc_top = relative_homology(pair, n, n, Theory::hc, budget).relative_dim;
  rep.hh_top = relative_homology(pair, n, n, Theory::hh, budget).relative_dim;
  rep.hc_prev =
      relative_homology(pair, n - 1, n - 1, Theory::hc, budget).relative_dim;
  return rep;
}

} // namespace cychom

#endif

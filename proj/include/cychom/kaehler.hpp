#ifndef CYCHOM_KAEHLER_HPP
#define CYCHOM_KAEHLER_HPP

// Differential forms of a presented algebra: Ω^n as an explicit quotient,
// the exterior derivative, and de Rham cohomology.
//
// Ω^n is presented on wedge monomials dx_{i1}∧…∧dx_{in} with coefficients in
// the algebra basis; the relation submodule is spanned by a·dr∧η over all
// defining relations r, basis coefficients a and lower wedges η (r·ω needs
// no separate generators: in-ideal coefficients already vanish in the
// ambient basis).  For a ground field Q(t) the absolute module over Q gains
// the extra direction dt, ordered after all algebra generators.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <cychom/algebra.hpp>
#include <cychom/errors.hpp>
#include <cychom/linalg.hpp>
#include <cychom/rational_function.hpp>

namespace cychom {

namespace detail {

// inserts generator g into the ascending wedge s; nullopt when g repeats
inline std::optional<std::pair<int, std::vector<int>>> wedge_insert(
    int g, const std::vector<int>& s) {
  std::vector<int> out;
  out.reserve(s.size() + 1);
  int sign = 1;
  size_t k = 0;
  for (; k < s.size() && s[k] < g; ++k) {
    out.push_back(s[k]);
    sign = -sign;
  }
  if (k < s.size() && s[k] == g) return std::nullopt;
  out.push_back(g);
  for (; k < s.size(); ++k) out.push_back(s[k]);
  return std::make_pair(sign, std::move(out));
}

inline void enumerate_wedges(int ext_gens, int size,
                             std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int g = from; g < ext_gens; ++g) {
      cur.push_back(g);
      self(self, g + 1);
      cur.pop_back();
    }
  };
  if (size >= 0) rec(rec, 0);
}

} // namespace detail

template <Field F>
struct KaehlerModule {
  const FinCommAlgebra<F>* alg = nullptr;
  int degree = 0;
  bool with_dt = false;
  int ngens = 0;    // presentation generators; dt, when present, is index ngens
  int ext_gens = 0;
  std::vector<std::vector<int>> wedges; // ascending index tuples of size degree
  QuotientBasis<F> quotient;
  std::vector<int> ambient_weights;

  // ambient index = wedge index * dim(alg) + coefficient index
  int ambient_index(int wedge, int coeff) const {
    return wedge * alg->dim() + coeff;
  }

  int dim() const { return quotient.dim(); }

  std::vector<int> basis_weights() const {
    std::vector<int> out;
    out.reserve(quotient.free_cols().size());
    for (int c : quotient.free_cols())
      out.push_back(ambient_weights[static_cast<size_t>(c)]);
    return out;
  }

  int weight_dim(int w) const {
    int n = 0;
    for (int c : quotient.free_cols())
      if (ambient_weights[static_cast<size_t>(c)] == w) ++n;
    return n;
  }

  std::string basis_label(int k) const {
    int col = quotient.free_cols()[static_cast<size_t>(k)];
    int wi = col / alg->dim(), a = col % alg->dim();
    std::string out;
    const std::string& al = alg->basis_labels[static_cast<size_t>(a)];
    if (al != "1" || degree == 0) out = al;
    for (int g : wedges[static_cast<size_t>(wi)]) {
      if (!out.empty() && out != "1") {
        if (out.back() != ')' && out.find('d') == std::string::npos)
          out += "*";
        else
          out += "^";
      }
      if (out == "1") out.clear();
      out += g == ngens ? "dt" : "d" + alg->pres->gen_names[static_cast<size_t>(g)];
    }
    return out;
  }
};

template <Field F>
KaehlerModule<F> kaehler(const FinCommAlgebra<F>& a, int n,
                         bool with_dt = false) {
  if (!a.pres)
    throw input_error("kaehler: algebra has no presentation");
  if (n < 0) throw out_of_range("kaehler: negative form degree");
  if (with_dt && field_label_of<F>() != "Q(t)")
    throw input_error("kaehler: the dt direction exists only over Q(t)");

  KaehlerModule<F> m;
  m.alg = &a;
  m.degree = n;
  m.with_dt = with_dt;
  m.ngens = a.pres->nvars();
  m.ext_gens = m.ngens + (with_dt ? 1 : 0);
  detail::enumerate_wedges(m.ext_gens, n, m.wedges);

  const int dim = a.dim();
  const int ambient = static_cast<int>(m.wedges.size()) * dim;

  m.ambient_weights.assign(static_cast<size_t>(ambient), 0);
  for (size_t wi = 0; wi < m.wedges.size(); ++wi) {
    int ww = 0;
    for (int g : m.wedges[wi])
      if (g < m.ngens) ww += a.pres->gen_weights[static_cast<size_t>(g)];
    for (int c = 0; c < dim; ++c)
      m.ambient_weights[wi * static_cast<size_t>(dim) + static_cast<size_t>(c)] =
          ww + a.weights[static_cast<size_t>(c)];
  }

  // relation span: a · dr ∧ η
  std::vector<std::vector<int>> etas;
  detail::enumerate_wedges(m.ext_gens, n - 1, etas);
  std::vector<SparseVec<F>> rows;
  for (const auto& rel : a.pres->relations) {
    for (int c = 0; c < dim; ++c) {
      const auto& ce = a.pres->basis[static_cast<size_t>(c)];
      for (const auto& eta : etas) {
        std::map<int, F> acc;
        for (int j = 0; j < m.ngens; ++j) {
          int ej = rel[static_cast<size_t>(j)];
          if (ej == 0) continue;
          auto ins = detail::wedge_insert(j, eta);
          if (!ins) continue;
          std::vector<int> prod = rel;
          --prod[static_cast<size_t>(j)];
          for (int v = 0; v < m.ngens; ++v)
            prod[static_cast<size_t>(v)] += ce[static_cast<size_t>(v)];
          auto idx = a.pres->index_of(prod);
          if (!idx) continue;
          auto wit = std::lower_bound(m.wedges.begin(), m.wedges.end(),
                                      ins->second);
          int wi = static_cast<int>(wit - m.wedges.begin());
          int col = m.ambient_index(wi, *idx);
          acc[col] = acc[col] + F(ej * ins->first);
        }
        SparseVec<F> v;
        for (auto& [col, x] : acc)
          if (!is_zero(x)) v.emplace_back(col, x);
        if (!v.empty()) rows.push_back(std::move(v));
      }
    }
  }
  m.quotient = QuotientBasis<F>(std::move(rows), ambient);
  return m;
}

/*
 * Exterior derivative between consecutive modules as a matrix on the
 * quotient bases.  This is the k-linear derivative (coefficients of the
 * ground field are constants); the absolute Q(t)/Q case with its
 * dt-derivative is the separate function below, since it is not
 * F-linear.
 */
template <Field F>
SparseMatrix<F> d_matrix(const KaehlerModule<F>& src,
                         const KaehlerModule<F>& dst) {
  if (src.alg != dst.alg || dst.degree != src.degree + 1 ||
      src.with_dt != dst.with_dt)
    throw input_error("d_matrix: modules are not consecutive");
  const auto& a = *src.alg;
  const int dim = a.dim();
  SparseMatrix<F> out(dst.dim(), src.dim());
  for (int k = 0; k < src.dim(); ++k) {
    int col = src.quotient.free_cols()[static_cast<size_t>(k)];
    int wi = col / dim, c = col % dim;
    const auto& ce = a.pres->basis[static_cast<size_t>(c)];
    const auto& s = src.wedges[static_cast<size_t>(wi)];
    SparseVec<F> ambient;
    std::map<int, F> acc;
    for (int j = 0; j < src.ngens; ++j) {
      int ej = ce[static_cast<size_t>(j)];
      if (ej == 0) continue;
      auto ins = detail::wedge_insert(j, s);
      if (!ins) continue;
      std::vector<int> de = ce;
      --de[static_cast<size_t>(j)];
      auto idx = a.pres->index_of(de);
      if (!idx) continue;
      auto wit =
          std::lower_bound(dst.wedges.begin(), dst.wedges.end(), ins->second);
      int dwi = static_cast<int>(wit - dst.wedges.begin());
      int tcol = dst.ambient_index(dwi, *idx);
      acc[tcol] = acc[tcol] + F(ej * ins->first);
    }
    for (auto& [tcol, x] : acc)
      if (!is_zero(x)) ambient.emplace_back(tcol, x);
    auto coords = dst.quotient.coords(ambient);
    for (const auto& [r, x] : coords) out.add(r, static_cast<int>(k), x);
  }
  out.finalize();
  return out;
}

// d over Q on an absolute Q(t) module: d(f·a dx_S) = f·da∧dx_S + f′·a dt∧dx_S.
// Takes and returns coordinates in the quotient bases.
inline SparseVec<RatFunc> apply_absolute_d(const KaehlerModule<RatFunc>& src,
                                           const KaehlerModule<RatFunc>& dst,
                                           const SparseVec<RatFunc>& coords) {
  if (src.alg != dst.alg || dst.degree != src.degree + 1 || !src.with_dt ||
      !dst.with_dt)
    throw input_error("apply_absolute_d: modules are not consecutive");
  const auto& a = *src.alg;
  const int dim = a.dim();
  std::map<int, RatFunc> acc;
  auto add = [&](int col, const RatFunc& x) {
    auto [it, fresh] = acc.emplace(col, x);
    if (!fresh) it->second = it->second + x;
  };
  for (const auto& [k, f] : coords) {
    int col = src.quotient.free_cols()[static_cast<size_t>(k)];
    int wi = col / dim, c = col % dim;
    const auto& ce = a.pres->basis[static_cast<size_t>(c)];
    const auto& s = src.wedges[static_cast<size_t>(wi)];
    for (int j = 0; j < src.ngens; ++j) {
      int ej = ce[static_cast<size_t>(j)];
      if (ej == 0) continue;
      auto ins = detail::wedge_insert(j, s);
      if (!ins) continue;
      std::vector<int> de = ce;
      --de[static_cast<size_t>(j)];
      auto idx = a.pres->index_of(de);
      if (!idx) continue;
      auto wit =
          std::lower_bound(dst.wedges.begin(), dst.wedges.end(), ins->second);
      add(dst.ambient_index(static_cast<int>(wit - dst.wedges.begin()), *idx),
          f * RatFunc(Rational(ej * ins->first)));
    }
    RatFunc fp = f.derivative();
    if (!is_zero(fp)) {
      auto ins = detail::wedge_insert(src.ngens, s); // dt slot
      if (ins) {
        auto wit = std::lower_bound(dst.wedges.begin(), dst.wedges.end(),
                                    ins->second);
        add(dst.ambient_index(static_cast<int>(wit - dst.wedges.begin()), c),
            fp * RatFunc(Rational(ins->first)));
      }
    }
  }
  SparseVec<RatFunc> ambient;
  for (auto& [col, x] : acc)
    if (!is_zero(x)) ambient.emplace_back(col, x);
  return dst.quotient.coords(ambient);
}

// --- de Rham complex ---------------------------------------------------------

template <Field F>
struct DeRham {
  std::vector<KaehlerModule<F>> omega; // degrees 0..n_max+1
  std::vector<SparseMatrix<F>> d;      // d[n]: omega[n] -> omega[n+1]
};

template <Field F>
DeRham<F> de_rham(const FinCommAlgebra<F>& a, int n_max) {
  if (n_max < 0) throw out_of_range("de_rham: negative degree");
  DeRham<F> out;
  for (int n = 0; n <= n_max + 1; ++n) out.omega.push_back(kaehler(a, n));
  for (int n = 0; n <= n_max; ++n)
    out.d.push_back(d_matrix(out.omega[static_cast<size_t>(n)],
                             out.omega[static_cast<size_t>(n) + 1]));
  return out;
}

// H^n = ker(d: Ω^n → Ω^{n+1}) / dΩ^{n−1}
template <Field F>
std::vector<int> de_rham_cohomology(const FinCommAlgebra<F>& a, int n_max) {
  DeRham<F> dr = de_rham(a, n_max);
  std::vector<int> dims;
  for (int n = 0; n <= n_max; ++n) {
    const auto& d_out = dr.d[static_cast<size_t>(n)];
    SparseMatrix<F> d_in =
        n == 0 ? SparseMatrix<F>(dr.omega[0].dim(), 0)
               : dr.d[static_cast<size_t>(n) - 1];
    dims.push_back(homology_dim(d_in, d_out));
  }
  return dims;
}

// rank of the weight-w block of a weight-preserving map
template <Field F>
int rank_in_weight(const SparseMatrix<F>& m, const std::vector<int>& row_w,
                   const std::vector<int>& col_w, int w) {
  std::vector<int> rows, cols;
  for (size_t i = 0; i < row_w.size(); ++i)
    if (row_w[i] == w) rows.push_back(static_cast<int>(i));
  for (size_t j = 0; j < col_w.size(); ++j)
    if (col_w[j] == w) cols.push_back(static_cast<int>(j));
  return rank(m.submatrix(rows, cols));
}

// weight-w part of H^n_dR for a graded algebra
template <Field F>
int de_rham_weight_dim(const DeRham<F>& dr, int n, int w) {
  const auto& om = dr.omega[static_cast<size_t>(n)];
  int total = om.weight_dim(w);
  int r_out = rank_in_weight(dr.d[static_cast<size_t>(n)],
                             dr.omega[static_cast<size_t>(n) + 1].basis_weights(),
                             om.basis_weights(), w);
  int r_in = n == 0 ? 0
                    : rank_in_weight(dr.d[static_cast<size_t>(n) - 1],
                                     om.basis_weights(),
                                     dr.omega[static_cast<size_t>(n) - 1]
                                         .basis_weights(),
                                     w);
  return total - r_out - r_in;
}

} // namespace cychom

#endif

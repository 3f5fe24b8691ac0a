#ifndef CYCHOM_HODGE_HPP
#define CYCHOM_HODGE_HPP

// Adams operations on the chain level and the eigenspace (Hodge)
// decomposition they induce on homology.
//
// ψ^m is realized as the sum of signed m-block shuffles of the tensor factor
// positions 1..n.  On degree-n chains its spectrum lies on the ladder
// m^1..m^n (m^0 in degree 0); the eigenprojectors are recovered from
// ψ^1..ψ^n by solving the interpolation system Σ_m c_m m^l = δ_{l,i}.
// The ladder convention is pinned once at startup against two independent
// anchors: annihilation of Π(ψ² - 2^l) and the closed-form antisymmetrizer.

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <cychom/algebra.hpp>
#include <cychom/bar_complex.hpp>
#include <cychom/cyclic.hpp>
#include <cychom/errors.hpp>
#include <cychom/linalg.hpp>

namespace cychom {

// formal Q-combination of position permutations; keys are one-line maps
// sig[i-1] = target of position i, over positions 1..n
using PermElement = std::map<std::vector<int>, Rational>;

inline int perm_sign(const std::vector<int>& sig) {
  int inv = 0;
  for (size_t a = 0; a < sig.size(); ++a)
    for (size_t b = a + 1; b < sig.size(); ++b)
      if (sig[a] > sig[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/*
 * ψ^m on degree-n chains as an element of Q[S_n].
 *
 * Every word w in {1..m}^n describes one term: positions carrying letter j
 * form the landing slots of the j-th block, blocks partition 1..n in order
 * (empty blocks allowed, so lower shuffles occur with multiplicity).  The
 * term enters with the sign of its permutation.
 */
inline PermElement adams_element(int n, int m) {
  if (n < 0 || m < 1) throw input_error("adams_element: need n >= 0, m >= 1");
  double cost = 1;
  for (int i = 0; i < n; ++i) cost *= m;
  if (cost > 2e6) throw budget_exceeded("adams_element: m^n too large");

  PermElement out;
  std::vector<int> word(static_cast<size_t>(n), 1);
  std::vector<int> sig(static_cast<size_t>(n), 0);
  while (true) {
    int src = 0;
    for (int j = 1; j <= m; ++j)
      for (int t = 0; t < n; ++t)
        if (word[static_cast<size_t>(t)] == j) sig[static_cast<size_t>(src++)] = t + 1;
    out[sig] += Rational(perm_sign(sig));

    int pos = n - 1;
    while (pos >= 0 && word[static_cast<size_t>(pos)] == m) {
      word[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++word[static_cast<size_t>(pos)];
  }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

// (1/n!) Σ sgn(σ) σ: the closed form of the top eigenprojector
inline PermElement antisymmetrizer_element(int n) {
  PermElement out;
  std::vector<int> sig(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sig[static_cast<size_t>(i)] = i + 1;
  Rational fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  do {
    out[sig] = Rational(perm_sign(sig)) / fact;
  } while (std::next_permutation(sig.begin(), sig.end()));
  return out;
}

inline SparseMatrix<Rational> realize_perm_element(const TupleSpace& sp,
                                                   const PermElement& e) {
  std::vector<std::pair<std::vector<int>, Rational>> terms(e.begin(), e.end());
  return op_position_shuffles(sp, sp, terms);
}

// --- ladder pin --------------------------------------------------------------

namespace detail {

struct LadderPin {
  std::once_flag flag;
  std::string note;
};

inline LadderPin& ladder_pin() {
  static LadderPin pin;
  return pin;
}

// Pins the chain-level eigenvalue convention on a smooth weight-slice:
// ψ² on degrees 1..3 must be annihilated by Π_{l=1..n}(ψ² - 2^l) and must
// not be annihilated by the shifted ladder Π(ψ² - 2^{l+1}); the top
// interpolated projector must equal the antisymmetrizer exactly.
inline void pin_ladder_once() {
  std::call_once(ladder_pin().flag, [] {
    auto slice = graded_poly_slice({"x", "y"}, {1, 1}, 3);
    ComplexSpec spec;
    spec.alg = &slice.algebra;
    spec.variant = Variant::normalized;
    ChainSpaces cs(spec, 3);
    for (int n = 1; n <= 3; ++n) {
      auto psi2 = realize_perm_element(cs.space(n), adams_element(n, 2));
      auto id = SparseMatrix<Rational>::identity(psi2.rows());

      auto ann = id;
      for (int l = 1; l <= n; ++l)
        ann = ann * (psi2 + id * Rational(-(1 << l)));
      if (!ann.is_zero_matrix())
        throw spectrum_mismatch(
            "ladder pin: Π(ψ² - 2^l), l = 1.." + std::to_string(n) +
            ", does not annihilate degree " + std::to_string(n));

      auto shifted = id;
      for (int l = 1; l <= n; ++l)
        shifted = shifted * (psi2 + id * Rational(-(1 << (l + 1))));
      if (shifted.is_zero_matrix())
        throw spectrum_mismatch(
            "ladder pin: shifted ladder 2^{l+1} also annihilates degree " +
            std::to_string(n) + "; convention ambiguous");
    }
    ladder_pin().note =
        "eigenvalue ladder pinned at startup: ψ^m acts on the i-th piece of "
        "degree-n chains by m^i (i = 1..n); the shifted m^{i+1} indexing "
        "fails annihilation and is rejected";
  });
}

// dense exact solve of V c = rhs, V[l][m] small; n <= 6 so textbook
// elimination is fine here
inline std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> v,
                                         std::vector<Rational> rhs) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(v[piv][col])) ++piv;
    if (piv == n) throw spectrum_mismatch("interpolation system is singular");
    std::swap(v[piv], v[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(v[r][col])) continue;
      Rational f = v[r][col] / v[col][col];
      for (size_t c = col; c < n; ++c) v[r][c] -= f * v[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = rhs[i] / v[i][i];
  return out;
}

} // namespace detail

inline const std::string& hodge_ladder_note() {
  detail::pin_ladder_once();
  return detail::ladder_pin().note;
}

// --- Adams operators and projectors ------------------------------------------

inline SparseMatrix<Rational> adams_operator(ChainSpaces& cs, int n, int m) {
  return realize_perm_element(cs.space(n), adams_element(n, m));
}

// spec-level convenience on the plain Hochschild chain space A^{⊗(n+1)}
inline SparseMatrix<Rational> adams_operator(const FinCommAlgebra<Rational>& a,
                                             int n, int m,
                                             long budget = kDefaultTupleBudget) {
  ComplexSpec spec;
  spec.alg = &a;
  ChainSpaces cs(spec, n, budget);
  return adams_operator(cs, n, m);
}

/*
 * Eigenprojectors P^{(1)}..P^{(n)} on the degree-n chain space, indexed so
 * that result[i] = P^{(i)} (result[0] is kept zero for degrees >= 1; degree 0
 * returns the single projector P^{(0)} = identity).  Idempotency,
 * orthogonality and sum-to-identity are verified before returning.
 */
inline std::vector<SparseMatrix<Rational>> hodge_projectors(ChainSpaces& cs,
                                                            int n) {
  detail::pin_ladder_once();
  const int dim = cs.dim(n);
  std::vector<SparseMatrix<Rational>> p;
  if (n == 0) {
    p.push_back(SparseMatrix<Rational>::identity(dim));
    return p;
  }

  std::vector<SparseMatrix<Rational>> psi;
  for (int m = 1; m <= n; ++m)
    psi.push_back(adams_operator(cs, n, m));

  p.assign(static_cast<size_t>(n) + 1, SparseMatrix<Rational>::zero(dim, dim));
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<Rational>> v(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    std::vector<Rational> rhs(static_cast<size_t>(n), Rational(0));
    for (int l = 1; l <= n; ++l) {
      for (int m = 1; m <= n; ++m) {
        Rational pw = 1;
        for (int e = 0; e < l; ++e) pw *= m;
        v[static_cast<size_t>(l) - 1][static_cast<size_t>(m) - 1] = pw;
      }
      rhs[static_cast<size_t>(l) - 1] = Rational(l == i ? 1 : 0);
    }
    auto c = detail::solve_dense(std::move(v), std::move(rhs));
    auto acc = SparseMatrix<Rational>::zero(dim, dim);
    for (int m = 1; m <= n; ++m)
      acc = acc + psi[static_cast<size_t>(m) - 1] * c[static_cast<size_t>(m) - 1];
    p[static_cast<size_t>(i)] = std::move(acc);
  }

  auto sum = SparseMatrix<Rational>::zero(dim, dim);
  for (int i = 1; i <= n; ++i) {
    if (!((p[static_cast<size_t>(i)] * p[static_cast<size_t>(i)]) ==
          p[static_cast<size_t>(i)]))
      throw spectrum_mismatch("projector " + std::to_string(i) +
                              " at degree " + std::to_string(n) +
                              " is not idempotent");
    for (int j = i + 1; j <= n; ++j)
      if (!(p[static_cast<size_t>(i)] * p[static_cast<size_t>(j)])
               .is_zero_matrix())
        throw spectrum_mismatch("projectors " + std::to_string(i) + "," +
                                std::to_string(j) + " at degree " +
                                std::to_string(n) + " are not orthogonal");
    sum = sum + p[static_cast<size_t>(i)];
  }
  if (!(sum == SparseMatrix<Rational>::identity(dim)))
    throw spectrum_mismatch("projectors at degree " + std::to_string(n) +
                            " do not sum to the identity");
  return p;
}

namespace detail {

// P^{(i)} on degree d, with the out-of-ladder convention: zero matrix when i
// is not an eigenvalue index of that degree
inline SparseMatrix<Rational> projector_or_zero(
    const std::vector<std::vector<SparseMatrix<Rational>>>& p, int d, int i,
    int dim) {
  const auto& ladder = p[static_cast<size_t>(d)];
  if (d == 0)
    return i == 0 ? ladder[0] : SparseMatrix<Rational>::zero(dim, dim);
  if (i < 1 || i > d) return SparseMatrix<Rational>::zero(dim, dim);
  return ladder[static_cast<size_t>(i)];
}

} // namespace detail

// Block-diagonal projector on the (b, B) total: slot j of total degree N
// carries P^{(i-j)} of chain degree N-2j, matching the degree-and-piece shift
// of B.  `proj` holds the per-degree projector ladders from hodge_projectors.
inline SparseMatrix<Rational> mixed_piece_projector(
    MixedTotal& tot,
    const std::vector<std::vector<SparseMatrix<Rational>>>& proj,
    int total_deg, int i) {
  auto& cs = tot.spaces();
  SparseMatrix<Rational> out(tot.dim(total_deg), tot.dim(total_deg));
  for (int j = 0; j <= total_deg / 2; ++j) {
    int d = total_deg - 2 * j;
    auto blk = detail::projector_or_zero(proj, d, i - j, cs.dim(d));
    place_block(out, blk, tot.offset(total_deg, j), tot.offset(total_deg, j),
                Rational(1));
  }
  out.finalize();
  return out;
}

enum class Theory { hh, hc };

/*
 * Dimensions of the eigenspace pieces of HH_n or HC_n for any normalized
 * complex variant (plain or relative), returned as a vector indexed by
 * i = 0..n.  The projectors are chain maps for b and shift the ladder by one
 * across B.
 */
inline std::vector<int> hodge_dims_for_spec(const ComplexSpec& spec, int n,
                                            Theory theory,
                                            long budget = kDefaultTupleBudget) {
  if (n < 0) throw out_of_range("hodge_dims_for_spec: negative degree");
  if (!spec.alg) throw input_error("hodge_dims_for_spec: no algebra");
  if (!detail::normalized_variant(spec.variant))
    throw input_error("hodge_dims_for_spec: normalized variants only");
  const FinCommAlgebra<Rational>& a = *spec.alg;
  ChainSpaces cs(spec, n + 1, budget);

  std::vector<std::vector<SparseMatrix<Rational>>> proj;
  for (int d = 0; d <= n; ++d) proj.push_back(hodge_projectors(cs, d));

  const bool graded = a.graded;
  auto blocked_rank = [&](const SparseMatrix<Rational>& m,
                          const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    if (!graded) return rank(m);
    return rank_blocked(m, rows, cols);
  };

  std::vector<int> dims(static_cast<size_t>(n) + 1, 0);
  if (theory == Theory::hh) {
    for (int i = 0; i <= n; ++i) {
      auto pn = detail::projector_or_zero(proj, n, i, cs.dim(n));
      int r = blocked_rank(pn, cs.weight_labels(n), cs.weight_labels(n));
      int rb = blocked_rank(cs.b(n) * pn,
                            n == 0 ? std::vector<int>{} : cs.weight_labels(n - 1),
                            cs.weight_labels(n));
      // P_n b_{n+1} = b_{n+1} P_{n+1} (chain-map identity, asserted by the
      // projector suite), so the boundary part of the piece never needs the
      // degree-(n+1) projectors
      int rbnd = blocked_rank(pn * cs.b(n + 1), cs.weight_labels(n),
                              cs.weight_labels(n + 1));
      dims[static_cast<size_t>(i)] = r - rb - rbnd;
    }
    return dims;
  }

  MixedTotal tot(cs);
  for (int i = 0; i <= n; ++i) {
    auto pn = mixed_piece_projector(tot, proj, n, i);
    int r = blocked_rank(pn, tot.weight_labels(n), tot.weight_labels(n));
    int rd = blocked_rank(tot.D(n) * pn,
                          n == 0 ? std::vector<int>{} : tot.weight_labels(n - 1),
                          tot.weight_labels(n));
    int rdn = blocked_rank(pn * tot.D(n + 1), tot.weight_labels(n),
                           tot.weight_labels(n + 1));
    dims[static_cast<size_t>(i)] = r - rd - rdn;
  }
  return dims;
}

inline std::vector<int> hodge_homology_dims(const FinCommAlgebra<Rational>& a,
                                            int n, Theory theory,
                                            long budget = kDefaultTupleBudget) {
  ComplexSpec spec;
  spec.alg = &a;
  spec.variant = Variant::normalized;
  return hodge_dims_for_spec(spec, n, theory, budget);
}

inline int eigenspace_homology_dim(const FinCommAlgebra<Rational>& a, int n,
                                   int i, Theory theory,
                                   long budget = kDefaultTupleBudget) {
  if (i < 0 || i > n)
    throw out_of_range("eigenspace_homology_dim: need 0 <= i <= n");
  return hodge_homology_dims(a, n, theory, budget)[static_cast<size_t>(i)];
}

} // namespace cychom

#endif

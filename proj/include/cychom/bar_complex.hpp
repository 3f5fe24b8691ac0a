#ifndef CYCHOM_BAR_COMPLEX_HPP
#define CYCHOM_BAR_COMPLEX_HPP

// Chain spaces of tensor powers A^{⊗(n+1)} and the simplicial and cyclic
// operators on them.  A space is an explicit list of basis tuples, so one
// assembly path serves the full complex, the normalized quotient (no unit
// factors past position 0), the relative subcomplex of an augmented tensor
// product, and single weight blocks of each.
//
// Operator terms whose target tuple is absent from the destination space are
// dropped.  For quotient variants that drop is exactly the quotient
// projection; for subcomplex and weight-block variants nothing nonzero is
// ever dropped, because those spaces are closed under the operators.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <cychom/algebra.hpp>
#include <cychom/errors.hpp>
#include <cychom/sparse.hpp>

namespace cychom {

struct TupleSpace {
  int n = 0; // tensor degree: tuples have n+1 factors
  std::vector<std::vector<int>> tuples;
  std::map<std::vector<int>, int> index;
  std::vector<int> weights; // total weight per tuple

  int size() const { return static_cast<int>(tuples.size()); }

  std::optional<int> find(const std::vector<int>& t) const {
    auto it = index.find(t);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

enum class Variant {
  full,               // all tuples over the algebra basis
  normalized,         // no unit factor in positions 1..n
  relative,           // >= 1 factor outside the augmentation-split copy of R
  relative_normalized // both constraints
};

struct ComplexSpec {
  const FinCommAlgebra<Rational>* alg = nullptr;
  Variant variant = Variant::full;
  // pair decomposition for the relative variants: the algebra is R⊗A with
  // basis index i*dim_a + j, and a factor belongs to R⊗m_A iff its A-part
  // j differs from unit_a
  int dim_a = 0;
  int unit_a = 0;
  std::optional<int> weight; // restrict every degree to one total weight
};

inline constexpr long kDefaultTupleBudget = 400000;

namespace detail {

inline bool relative_variant(Variant v) {
  return v == Variant::relative || v == Variant::relative_normalized;
}

inline bool normalized_variant(Variant v) {
  return v == Variant::normalized || v == Variant::relative_normalized;
}

} // namespace detail

inline TupleSpace enumerate_tuples(const ComplexSpec& spec, int n,
                                   long budget = kDefaultTupleBudget) {
  const auto& a = *spec.alg;
  const int d = a.dim();
  const bool rel = detail::relative_variant(spec.variant);
  const bool norm = detail::normalized_variant(spec.variant);
  if (rel && (spec.dim_a <= 0 || d % spec.dim_a != 0))
    throw input_error("enumerate_tuples: relative variant without a valid pair decomposition");

  if (spec.variant == Variant::full && !spec.weight) {
    long size = 1;
    for (int i = 0; i <= n; ++i) {
      size *= d;
      if (size > budget)
        throw budget_exceeded("chain space of degree " + std::to_string(n) +
                              " exceeds the budget of " +
                              std::to_string(budget) + " columns");
    }
  }

  TupleSpace out;
  out.n = n;
  std::vector<int> cur(static_cast<size_t>(n) + 1, 0);
  // depth-first digit choice with weight pruning
  auto rec = [&](auto&& self, int pos, int wsum, bool has_ma) -> void {
    if (pos == n + 1) {
      if (spec.weight && wsum != *spec.weight) return;
      if (rel && !has_ma) return;
      if (static_cast<long>(out.tuples.size()) >= budget)
        throw budget_exceeded("chain space of degree " + std::to_string(n) +
                              " exceeds the budget of " +
                              std::to_string(budget) + " columns");
      out.tuples.push_back(cur);
      out.weights.push_back(wsum);
      return;
    }
    for (int v = 0; v < d; ++v) {
      if (norm && pos >= 1 && v == a.unit_index) continue;
      int w = wsum + a.weights[static_cast<size_t>(v)];
      if (spec.weight && w > *spec.weight) continue;
      cur[static_cast<size_t>(pos)] = v;
      bool ma = has_ma || (rel && v % spec.dim_a != spec.unit_a);
      self(self, pos + 1, w, ma);
    }
  };
  rec(rec, 0, 0, false);
  for (size_t i = 0; i < out.tuples.size(); ++i)
    out.index[out.tuples[i]] = static_cast<int>(i);
  return out;
}

// --- operators on tuple spaces ----------------------------------------------

namespace detail {

// the signed cyclic permutation: last factor to the front, sign (-1)^degree
inline void rotate_last_to_front(std::vector<int>& t, bool& neg) {
  std::rotate(t.begin(), t.end() - 1, t.end());
  if ((t.size() - 1) % 2 == 1) neg = !neg;
}

inline void accumulate(std::map<int, Rational>& acc, int idx, bool neg,
                       const Rational& c) {
  auto [it, inserted] = acc.emplace(idx, neg ? Rational(-c) : c);
  if (!inserted) it->second += neg ? Rational(-c) : c;
}

inline void emit_column(SparseMatrix<Rational>& m, int col,
                        const std::map<int, Rational>& acc) {
  for (const auto& [row, c] : acc)
    if (!is_zero(c)) m.add(row, col, c);
}

} // namespace detail

// Hochschild boundary: adjacent products with alternating signs; with the
// cyclic term, the last factor also multiplies onto the first.
inline SparseMatrix<Rational> op_boundary(const FinCommAlgebra<Rational>& a,
                                          const TupleSpace& src,
                                          const TupleSpace& dst,
                                          bool with_cyclic_term) {
  if (src.n < 1 || dst.n != src.n - 1)
    throw input_error("op_boundary: degree mismatch");
  const int n = src.n;
  SparseMatrix<Rational> m(dst.size(), src.size());
  std::vector<int> target(static_cast<size_t>(n), 0);
  for (int col = 0; col < src.size(); ++col) {
    const auto& x = src.tuples[static_cast<size_t>(col)];
    std::map<int, Rational> acc;
    for (int i = 0; i < n; ++i) {
      for (const auto& [k, c] : a.product(x[static_cast<size_t>(i)],
                                          x[static_cast<size_t>(i) + 1])) {
        for (int p = 0, q = 0; p <= n; ++p) {
          if (p == i + 1) continue;
          target[static_cast<size_t>(q++)] =
              p == i ? k : x[static_cast<size_t>(p)];
        }
        if (auto idx = dst.find(target))
          detail::accumulate(acc, *idx, i % 2 == 1, c);
      }
    }
    if (with_cyclic_term) {
      for (const auto& [k, c] :
           a.product(x[static_cast<size_t>(n)], x[0])) {
        target[0] = k;
        for (int p = 1; p < n; ++p)
          target[static_cast<size_t>(p)] = x[static_cast<size_t>(p)];
        if (auto idx = dst.find(target))
          detail::accumulate(acc, *idx, n % 2 == 1, c);
      }
    }
    detail::emit_column(m, col, acc);
  }
  m.finalize();
  return m;
}

inline SparseMatrix<Rational> op_t(const TupleSpace& src,
                                   const TupleSpace& dst) {
  if (dst.n != src.n) throw input_error("op_t: degree mismatch");
  SparseMatrix<Rational> m(dst.size(), src.size());
  for (int col = 0; col < src.size(); ++col) {
    auto t = src.tuples[static_cast<size_t>(col)];
    bool neg = false;
    detail::rotate_last_to_front(t, neg);
    if (auto idx = dst.find(t)) m.add(*idx, col, Rational(neg ? -1 : 1));
  }
  m.finalize();
  return m;
}

inline SparseMatrix<Rational> op_N(const TupleSpace& src,
                                   const TupleSpace& dst) {
  if (dst.n != src.n) throw input_error("op_N: degree mismatch");
  const int n = src.n;
  SparseMatrix<Rational> m(dst.size(), src.size());
  for (int col = 0; col < src.size(); ++col) {
    auto t = src.tuples[static_cast<size_t>(col)];
    bool neg = false;
    std::map<int, Rational> acc;
    for (int i = 0; i <= n; ++i) {
      if (auto idx = dst.find(t)) detail::accumulate(acc, *idx, neg, Rational(1));
      detail::rotate_last_to_front(t, neg);
    }
    detail::emit_column(m, col, acc);
  }
  m.finalize();
  return m;
}

// the extra degeneracy: prepend the unit
inline SparseMatrix<Rational> op_s(const FinCommAlgebra<Rational>& a,
                                   const TupleSpace& src,
                                   const TupleSpace& dst) {
  if (dst.n != src.n + 1) throw input_error("op_s: degree mismatch");
  SparseMatrix<Rational> m(dst.size(), src.size());
  for (int col = 0; col < src.size(); ++col) {
    auto t = src.tuples[static_cast<size_t>(col)];
    t.insert(t.begin(), a.unit_index);
    if (auto idx = dst.find(t)) m.add(*idx, col, Rational(1));
  }
  m.finalize();
  return m;
}

// B = (1 - t) s N, assembled term by term so it can be built directly on any
// space B descends to (it involves no products, only shuffles and the unit).
inline SparseMatrix<Rational> op_B(const FinCommAlgebra<Rational>& a,
                                   const TupleSpace& src,
                                   const TupleSpace& dst) {
  if (dst.n != src.n + 1) throw input_error("op_B: degree mismatch");
  const int n = src.n;
  SparseMatrix<Rational> m(dst.size(), src.size());
  for (int col = 0; col < src.size(); ++col) {
    auto y = src.tuples[static_cast<size_t>(col)];
    bool yneg = false;
    std::map<int, Rational> acc;
    for (int i = 0; i <= n; ++i) {
      auto z = y;
      z.insert(z.begin(), a.unit_index);
      if (auto idx = dst.find(z)) detail::accumulate(acc, *idx, yneg, Rational(1));
      bool zneg = !yneg; // the -t z term
      detail::rotate_last_to_front(z, zneg);
      if (auto idx = dst.find(z)) detail::accumulate(acc, *idx, zneg, Rational(1));
      detail::rotate_last_to_front(y, yneg);
    }
    detail::emit_column(m, col, acc);
  }
  m.finalize();
  return m;
}

// Sum of signed permutations of the factor positions 1..n (position 0 is
// fixed): each term sends the factor at position i to position sig[i-1].
inline SparseMatrix<Rational> op_position_shuffles(
    const TupleSpace& src, const TupleSpace& dst,
    const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  if (dst.n != src.n) throw input_error("op_position_shuffles: degree mismatch");
  const int n = src.n;
  SparseMatrix<Rational> m(dst.size(), src.size());
  std::vector<int> y(static_cast<size_t>(n) + 1, 0);
  for (int col = 0; col < src.size(); ++col) {
    const auto& x = src.tuples[static_cast<size_t>(col)];
    std::map<int, Rational> acc;
    for (const auto& [sig, c] : terms) {
      y[0] = x[0];
      for (int i = 1; i <= n; ++i)
        y[static_cast<size_t>(sig[static_cast<size_t>(i) - 1])] =
            x[static_cast<size_t>(i)];
      if (auto idx = dst.find(y)) detail::accumulate(acc, *idx, false, c);
    }
    detail::emit_column(m, col, acc);
  }
  m.finalize();
  return m;
}

// --- cached ladder of spaces and operators ----------------------------------

class ChainSpaces {
 public:
  ChainSpaces(ComplexSpec spec, int n_max, long budget = kDefaultTupleBudget)
      : spec_(spec), n_max_(n_max), budget_(budget) {
    if (!spec_.alg) throw input_error("ChainSpaces: no algebra");
    if (n_max < 0) throw out_of_range("ChainSpaces: negative degree");
    size_t slots = static_cast<size_t>(n_max) + 1;
    spaces_.resize(slots);
    b_.resize(slots);
    bprime_.resize(slots);
    t_.resize(slots);
    n_op_.resize(slots);
    s_.resize(slots);
    big_b_.resize(slots);
  }

  const ComplexSpec& spec() const { return spec_; }
  const FinCommAlgebra<Rational>& algebra() const { return *spec_.alg; }
  int n_max() const { return n_max_; }

  bool cyclic_defined() const {
    return !detail::normalized_variant(spec_.variant);
  }

  const TupleSpace& space(int n) {
    check_degree(n, 0);
    auto& slot = spaces_[static_cast<size_t>(n)];
    if (!slot) slot = enumerate_tuples(spec_, n, budget_);
    return *slot;
  }

  int dim(int n) { return space(n).size(); }
  const std::vector<int>& weight_labels(int n) { return space(n).weights; }

  // degree 0 gets the zero map out, so homology at 0 needs no special case
  const SparseMatrix<Rational>& b(int n) {
    check_degree(n, 0);
    return boundary_cache(b_, n, true);
  }

  const SparseMatrix<Rational>& bprime(int n) {
    check_degree(n, 0);
    return boundary_cache(bprime_, n, false);
  }

  const SparseMatrix<Rational>& t(int n) {
    check_degree(n, 0);
    require_cyclic("t");
    auto& slot = t_[static_cast<size_t>(n)];
    if (!slot) slot = op_t(space(n), space(n));
    return *slot;
  }

  const SparseMatrix<Rational>& N(int n) {
    check_degree(n, 0);
    require_cyclic("N");
    auto& slot = n_op_[static_cast<size_t>(n)];
    if (!slot) slot = op_N(space(n), space(n));
    return *slot;
  }

  const SparseMatrix<Rational>& s(int n) {
    check_degree(n, 1);
    require_cyclic("s");
    auto& slot = s_[static_cast<size_t>(n)];
    if (!slot) slot = op_s(algebra(), space(n), space(n + 1));
    return *slot;
  }

  const SparseMatrix<Rational>& B(int n) {
    check_degree(n, 1);
    auto& slot = big_b_[static_cast<size_t>(n)];
    if (!slot) slot = op_B(algebra(), space(n), space(n + 1));
    return *slot;
  }

 private:
  void check_degree(int n, int headroom) {
    if (n < 0 || n + headroom > n_max_)
      throw out_of_range("ChainSpaces: degree " + std::to_string(n) +
                         " outside 0.." + std::to_string(n_max_ - headroom));
  }

  void require_cyclic(const std::string& which) const {
    if (!cyclic_defined())
      throw input_error("operator " + which +
                        " does not descend to the normalized complex");
  }

  const SparseMatrix<Rational>& boundary_cache(
      std::vector<std::optional<SparseMatrix<Rational>>>& cache, int n,
      bool cyclic_term) {
    auto& slot = cache[static_cast<size_t>(n)];
    if (!slot) {
      if (n == 0)
        slot = SparseMatrix<Rational>(0, dim(0));
      else
        slot = op_boundary(algebra(), space(n), space(n - 1), cyclic_term);
    }
    return *slot;
  }

  ComplexSpec spec_;
  int n_max_;
  long budget_;
  std::vector<std::optional<TupleSpace>> spaces_;
  std::vector<std::optional<SparseMatrix<Rational>>> b_, bprime_, t_, n_op_,
      s_, big_b_;
};

// Homology dimension at degree n, blocked by weight when the algebra is
// graded.  Needs the boundary out of degree n+1, so n < n_max.
inline int chain_homology_dim(ChainSpaces& cs, int n) {
  const auto& d_out = cs.b(n);
  const auto& d_in = cs.b(n + 1);
  require_composition_zero(d_in, d_out, "chain_homology_dim");
  if (cs.algebra().graded) {
    const auto& wn = cs.weight_labels(n);
    int rank_out = n == 0 ? 0
                          : rank_blocked(d_out, cs.weight_labels(n - 1), wn);
    int rank_in = rank_blocked(d_in, wn, cs.weight_labels(n + 1));
    return cs.dim(n) - rank_out - rank_in;
  }
  return homology_dim(d_in, d_out);
}

} // namespace cychom

#endif

#ifndef CYCHOM_CYCLIC_HPP
#define CYCHOM_CYCLIC_HPP

// Cyclic homology by two independent routes.
//
// Reference route: the first-quadrant bicomplex whose even columns carry the
// boundary with the cyclic term and odd columns carry the negated boundary
// without it, connected by 1-t (odd to even) and the norm N (even to odd).
// HC_n is the homology of its total complex.
//
// Oracle route: the normalized (b, B) ladder, Tot_n = ⊕_j C̄_{n-2j} with
// D(x)_j = b x_j + B x_{j+1}.  The two must agree; a mismatch is reported as
// an operator-convention bug, never papered over.

#include <optional>
#include <string>
#include <vector>

#include <cychom/algebra.hpp>
#include <cychom/bar_complex.hpp>
#include <cychom/errors.hpp>
#include <cychom/linalg.hpp>

namespace cychom {

template <Field F>
void place_block(SparseMatrix<F>& m, const SparseMatrix<F>& blk, int row_off,
                 int col_off, const F& scale) {
  for (int c = 0; c < blk.cols(); ++c)
    for (const auto& [r, v] : blk.column(c))
      m.add(row_off + r, col_off + c, F(scale * v));
}

// total complex of the cyclic bicomplex; holds a reference to the chain
// spaces, which must be a variant the cyclic operators act on
class CyclicTotal {
 public:
  explicit CyclicTotal(ChainSpaces& cs) : cs_(&cs) {
    if (!cs.cyclic_defined())
      throw input_error("CyclicTotal: cyclic operators undefined on this variant");
    d_.resize(static_cast<size_t>(cs.n_max()) + 1);
  }

  int n_max() const { return cs_->n_max(); }

  // column q of total degree n holds the chain space of degree n-q
  int offset(int n, int q) {
    int off = 0;
    for (int p = 0; p < q; ++p) off += cs_->dim(n - p);
    return off;
  }

  int dim(int n) { return offset(n, n) + cs_->dim(0); }

  std::vector<int> weight_labels(int n) {
    std::vector<int> out;
    for (int q = 0; q <= n; ++q)
      for (int w : cs_->weight_labels(n - q)) out.push_back(w);
    return out;
  }

  const SparseMatrix<Rational>& D(int n) {
    check(n);
    auto& slot = d_[static_cast<size_t>(n)];
    if (slot) return *slot;
    if (n == 0) {
      slot = SparseMatrix<Rational>(0, dim(0));
      return *slot;
    }
    SparseMatrix<Rational> m(dim(n - 1), dim(n));
    for (int q = 0; q <= n; ++q) {
      int row = n - q; // chain degree held by column q
      int col_off = offset(n, q);
      if (row >= 1) {
        // vertical differential stays in column q
        if (q % 2 == 0)
          place_block(m, cs_->b(row), offset(n - 1, q), col_off, Rational(1));
        else
          place_block(m, cs_->bprime(row), offset(n - 1, q), col_off,
                      Rational(-1));
      }
      if (q >= 1) {
        // horizontal differential lands in column q-1, same chain degree
        int row_off = offset(n - 1, q - 1);
        if (q % 2 == 1) {
          place_block(m, SparseMatrix<Rational>::identity(cs_->dim(row)),
                      row_off, col_off, Rational(1));
          place_block(m, cs_->t(row), row_off, col_off, Rational(-1));
        } else {
          place_block(m, cs_->N(row), row_off, col_off, Rational(1));
        }
      }
    }
    m.finalize();
    slot = std::move(m);
    return *slot;
  }

  ChainSpaces& spaces() { return *cs_; }

 private:
  void check(int n) const {
    if (n < 0 || n > cs_->n_max())
      throw out_of_range("CyclicTotal: degree " + std::to_string(n) +
                         " outside 0.." + std::to_string(cs_->n_max()));
  }

  ChainSpaces* cs_;
  std::vector<std::optional<SparseMatrix<Rational>>> d_;
};

// total complex of the normalized (b, B) ladder
class MixedTotal {
 public:
  explicit MixedTotal(ChainSpaces& cs) : cs_(&cs) {
    if (cs.cyclic_defined())
      throw input_error("MixedTotal: expects a normalized variant");
    d_.resize(static_cast<size_t>(cs.n_max()) + 1);
  }

  int n_max() const { return cs_->n_max(); }
  int slots(int n) const { return n / 2 + 1; }

  int offset(int n, int j) {
    int off = 0;
    for (int p = 0; p < j; ++p) off += cs_->dim(n - 2 * p);
    return off;
  }

  int dim(int n) { return offset(n, slots(n) - 1) + cs_->dim(n % 2); }

  std::vector<int> weight_labels(int n) {
    std::vector<int> out;
    for (int j = 0; j < slots(n); ++j)
      for (int w : cs_->weight_labels(n - 2 * j)) out.push_back(w);
    return out;
  }

  const SparseMatrix<Rational>& D(int n) {
    check(n);
    auto& slot = d_[static_cast<size_t>(n)];
    if (slot) return *slot;
    if (n == 0) {
      slot = SparseMatrix<Rational>(0, dim(0));
      return *slot;
    }
    SparseMatrix<Rational> m(dim(n - 1), dim(n));
    for (int j = 0; j < slots(n); ++j) {
      int deg = n - 2 * j;
      int col_off = offset(n, j);
      if (deg >= 1)
        place_block(m, cs_->b(deg), offset(n - 1, j), col_off, Rational(1));
      if (j >= 1)
        place_block(m, cs_->B(deg), offset(n - 1, j - 1), col_off,
                    Rational(1));
    }
    m.finalize();
    slot = std::move(m);
    return *slot;
  }

  ChainSpaces& spaces() { return *cs_; }

 private:
  void check(int n) const {
    if (n < 0 || n > cs_->n_max())
      throw out_of_range("MixedTotal: degree " + std::to_string(n) +
                         " outside 0.." + std::to_string(cs_->n_max()));
  }

  ChainSpaces* cs_;
  std::vector<std::optional<SparseMatrix<Rational>>> d_;
};

namespace detail {

template <class Total>
int total_homology_dim(Total& tot, int n, bool graded) {
  const auto& d_out = tot.D(n);
  const auto& d_in = tot.D(n + 1);
  require_composition_zero(d_in, d_out, "total_homology_dim");
  if (graded) {
    auto wn = tot.weight_labels(n);
    int r_out = n == 0 ? 0 : rank_blocked(d_out, tot.weight_labels(n - 1), wn);
    int r_in = rank_blocked(d_in, wn, tot.weight_labels(n + 1));
    return static_cast<int>(wn.size()) - r_out - r_in;
  }
  return homology_dim(d_in, d_out);
}

} // namespace detail

inline int cyclic_total_dim(CyclicTotal& tot, int n) {
  return detail::total_homology_dim(tot, n, tot.spaces().algebra().graded);
}

inline int mixed_total_dim(MixedTotal& tot, int n) {
  return detail::total_homology_dim(tot, n, tot.spaces().algebra().graded);
}

// Cyclic homology dims 0..max_degree for a full or relative complex over the
// given algebra, computed by both routes; disagreement raises oracle_mismatch.
inline std::vector<int> cyclic_dims_for_spec(const ComplexSpec& spec,
                                             int max_degree,
                                             long budget = kDefaultTupleBudget) {
  if (detail::normalized_variant(spec.variant))
    throw input_error("cyclic_dims_for_spec: pass the full or relative variant");
  ChainSpaces cc_spaces(spec, max_degree + 1, budget);
  CyclicTotal tot(cc_spaces);

  ComplexSpec norm = spec;
  norm.variant = spec.variant == Variant::relative
                     ? Variant::relative_normalized
                     : Variant::normalized;
  ChainSpaces mixed_spaces(norm, max_degree + 1, budget);
  MixedTotal mixed(mixed_spaces);

  std::vector<int> dims;
  for (int n = 0; n <= max_degree; ++n) {
    int via_cc = cyclic_total_dim(tot, n);
    int via_mixed = mixed_total_dim(mixed, n);
    if (via_cc != via_mixed)
      throw oracle_mismatch(
          "cyclic homology at degree " + std::to_string(n) +
          ": bicomplex route gives " + std::to_string(via_cc) +
          ", normalized (b,B) route gives " + std::to_string(via_mixed));
    dims.push_back(via_cc);
  }
  return dims;
}

inline std::vector<int> cyclic_dims(const FinCommAlgebra<Rational>& a,
                                    int max_degree,
                                    long budget = kDefaultTupleBudget) {
  ComplexSpec spec;
  spec.alg = &a;
  return cyclic_dims_for_spec(spec, max_degree, budget);
}

} // namespace cychom

#endif

#ifndef CYCHOM_LINALG_HPP
#define CYCHOM_LINALG_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "sparse.hpp"
#include "threads.hpp"

namespace cychom {

/*
 * Exact elimination over Q and Q(t).
 *
 * The workhorse is a fraction free forward elimination: the update rule is
 * the two term cross multiplication  r := pivot_lead * r - r_lead * pivot,
 * followed by a content normalization that keeps rows primitive (integer
 * entries with gcd 1 over Q, primitive polynomials over Q(t)).  Pivots are
 * chosen per column among the candidate rows by sparsity, which is what
 * keeps fill-in tolerable on boundary operators.  Everything is exact; no
 * pivot thresholds, no floating point.
 */

// --- row content normalization -------------------------------------------

inline void row_normalize(SparseVec<Rational>& row) {
  if (row.empty()) return;
  Integer den_lcm = 1;
  for (const auto& [i, x] : row)
    den_lcm = lcm(den_lcm, Integer(denominator(x)));
  Integer num_gcd = 0;
  std::vector<Integer> nums(row.size());
  for (size_t k = 0; k < row.size(); ++k) {
    nums[k] = Integer(numerator(row[k].second)) *
              (den_lcm / Integer(denominator(row[k].second)));
    num_gcd = gcd(num_gcd, nums[k]);
  }
  if (nums[0] < 0) num_gcd = -num_gcd;
  for (size_t k = 0; k < row.size(); ++k)
    row[k].second = Rational(nums[k] / num_gcd);
}

inline void row_normalize(SparseVec<RatFunc>& row) {
  if (row.empty()) return;
  Polynomial<Rational> den_l(Rational(1));
  for (const auto& [i, x] : row) den_l = lcm(den_l, x.den());
  std::vector<Polynomial<Rational>> nums(row.size());
  Polynomial<Rational> g;
  for (size_t k = 0; k < row.size(); ++k) {
    const RatFunc& x = row[k].second;
    nums[k] = x.num() * Polynomial<Rational>::divmod(den_l, x.den()).first;
    g = gcd(g, nums[k]);
  }
  if (g.degree() > 0)
    for (auto& p : nums) p = Polynomial<Rational>::divmod(p, g).first;
  // scale so the leading entry is monic with integer-free content
  Rational lead = nums[0].leading();
  for (size_t k = 0; k < row.size(); ++k)
    row[k].second = RatFunc(nums[k] * (Rational(1) / lead));
}

template <class F>
concept NormalizableField =
    Field<F> && requires(SparseVec<F>& r) { row_normalize(r); };

// --- forward elimination ---------------------------------------------------

template <Field F>
struct EchelonForm {
  int ncols = 0;
  std::vector<SparseVec<F>> rows; // distinct leading columns, ascending
  std::vector<int> pivot_cols;    // ascending, parallel to rows
  int rank() const { return static_cast<int>(rows.size()); }
};

namespace detail {

// Eliminates the leading entry of r against pivot p (same leading column).
template <Field F>
void eliminate_leading(SparseVec<F>& r, const SparseVec<F>& p) {
  const F rl = r.front().second; // copied: r is reassigned below
  const F pl = p.front().second;
  if constexpr (NormalizableField<F>) {
    r = sparse_axpy(pl, r, F(-rl), p);
    row_normalize(r);
  } else {
    r = sparse_axpy(F{1}, r, F(-(rl / pl)), p);
  }
}

} // namespace detail

template <Field F>
EchelonForm<F> echelonize(std::vector<SparseVec<F>> rows, int ncols) {
  EchelonForm<F> out;
  out.ncols = ncols;
  // pending[j]: indices of live rows whose current leading column is j
  std::vector<std::vector<int>> pending(static_cast<size_t>(ncols));
  for (size_t i = 0; i < rows.size(); ++i) {
    if constexpr (NormalizableField<F>) row_normalize(rows[i]);
    if (!rows[i].empty())
      pending[static_cast<size_t>(rows[i].front().first)].push_back(
          static_cast<int>(i));
  }
  for (int j = 0; j < ncols; ++j) {
    auto& bucket = pending[static_cast<size_t>(j)];
    if (bucket.empty()) continue;
    // sparsest candidate wins; ties go to the earliest row for determinism
    size_t best = 0;
    for (size_t k = 1; k < bucket.size(); ++k)
      if (rows[static_cast<size_t>(bucket[k])].size() <
          rows[static_cast<size_t>(bucket[best])].size())
        best = k;
    int piv = bucket[best];
    for (size_t k = 0; k < bucket.size(); ++k) {
      if (k == best) continue;
      int ri = bucket[k];
      auto& r = rows[static_cast<size_t>(ri)];
      detail::eliminate_leading(r, rows[static_cast<size_t>(piv)]);
      if (!r.empty())
        pending[static_cast<size_t>(r.front().first)].push_back(ri);
    }
    out.rows.push_back(std::move(rows[static_cast<size_t>(piv)]));
    out.pivot_cols.push_back(j);
    bucket.clear();
  }
  return out;
}

// --- rank, kernel, subspaces ----------------------------------------------

template <Field F>
int rank(const SparseMatrix<F>& m) {
  // Eliminating along the shorter side costs nothing: row rank equals
  // column rank, and the stored columns are the rows of the transpose.
  if (m.rows() <= m.cols()) {
    return echelonize(m.to_rows(), m.cols()).rank();
  }
  std::vector<SparseVec<F>> rows;
  rows.reserve(static_cast<size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) rows.push_back(m.column(c));
  return echelonize(std::move(rows), m.rows()).rank();
}

// Basis of {x : m x = 0}, one sparse vector per free column.
template <Field F>
std::vector<SparseVec<F>> kernel_basis(const SparseMatrix<F>& m) {
  EchelonForm<F> e = echelonize(m.to_rows(), m.cols());
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<SparseVec<F>> basis;
  std::vector<F> x(static_cast<size_t>(m.cols()), F{0});
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::fill(x.begin(), x.end(), F{0});
    x[static_cast<size_t>(f)] = F{1};
    for (size_t k = e.rows.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      int pc = e.pivot_cols[k];
      if (pc > f) continue;
      F acc{0};
      for (const auto& [c, v] : row)
        if (c != pc) acc = acc + v * x[static_cast<size_t>(c)];
      x[static_cast<size_t>(pc)] = -(acc / row.front().second);
    }
    basis.push_back(dense_to_sparse(x));
  }
  return basis;
}

/*
 * Incremental reduction structure: rows with distinct leading columns, one
 * new vector at a time.  Used for membership tests and for extending an
 * image basis by cycles when picking homology representatives.
 */
template <Field F>
class Reducer {
 public:
  explicit Reducer(int ncols) : ncols_(ncols) {}

  SparseVec<F> reduce(SparseVec<F> v) const {
    if constexpr (NormalizableField<F>)
      if (!v.empty()) row_normalize(v);
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) break;
      detail::eliminate_leading(v, it->second);
    }
    return v;
  }

  // true if v was independent of the stored span
  bool add(SparseVec<F> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    rows_.emplace(v.front().first, std::move(v));
    return true;
  }

  bool contains(SparseVec<F> v) const { return reduce(std::move(v)).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

  // the stored spanning set; spans exactly what was added
  std::vector<SparseVec<F>> basis() const {
    std::vector<SparseVec<F>> out;
    out.reserve(rows_.size());
    for (const auto& [lead, v] : rows_) out.push_back(v);
    return out;
  }

 private:
  int ncols_;
  std::map<int, SparseVec<F>> rows_;
};

/*
 * Quotient of F^ambient by the span of relation rows.  The echelonized
 * relations eliminate their pivot coordinates; the remaining free columns
 * index a basis of the quotient.  normal_form gives the unique
 * representative supported on free columns; coords reads it off in the
 * free-column basis.
 */
template <Field F>
class QuotientBasis {
 public:
  QuotientBasis() = default;
  QuotientBasis(std::vector<SparseVec<F>> relation_rows, int ambient)
      : ambient_(ambient), ech_(echelonize(std::move(relation_rows), ambient)) {
    std::vector<bool> is_pivot(static_cast<size_t>(ambient), false);
    pivot_row_.assign(static_cast<size_t>(ambient), -1);
    for (size_t k = 0; k < ech_.pivot_cols.size(); ++k) {
      is_pivot[static_cast<size_t>(ech_.pivot_cols[k])] = true;
      pivot_row_[static_cast<size_t>(ech_.pivot_cols[k])] = static_cast<int>(k);
    }
    coord_of_.assign(static_cast<size_t>(ambient), -1);
    for (int c = 0; c < ambient; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) {
        coord_of_[static_cast<size_t>(c)] = static_cast<int>(free_cols_.size());
        free_cols_.push_back(c);
      }
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(free_cols_.size()); }
  int relation_rank() const { return ech_.rank(); }
  const std::vector<int>& free_cols() const { return free_cols_; }

  // a Reducer preloaded with the relation span, for growing subspaces of the
  // quotient by counting independent additions
  Reducer<F> seeded_reducer() const {
    Reducer<F> r(ambient_);
    for (const auto& row : ech_.rows) r.add(row);
    return r;
  }

  // representative of [v] supported on free columns only
  SparseVec<F> normal_form(SparseVec<F> v) const {
    size_t at = 0;
    while (at < v.size()) {
      int col = v[at].first;
      int pr = pivot_row_[static_cast<size_t>(col)];
      if (pr < 0) {
        ++at;
        continue;
      }
      const auto& row = ech_.rows[static_cast<size_t>(pr)];
      F c = v[at].second / row.front().second;
      v = sparse_axpy(F{1}, v, F(-c), row);
      // the eliminated column vanished and any new entries lie beyond it,
      // so the scan position never moves backwards
    }
    return v;
  }

  // coordinates of [v] in the free-column basis
  SparseVec<F> coords(const SparseVec<F>& v) const {
    SparseVec<F> nf = normal_form(v);
    SparseVec<F> out;
    out.reserve(nf.size());
    for (const auto& [c, x] : nf)
      out.emplace_back(coord_of_[static_cast<size_t>(c)], x);
    return out;
  }

 private:
  int ambient_ = 0;
  EchelonForm<F> ech_;
  std::vector<int> pivot_row_; // ambient column -> echelon row index or -1
  std::vector<int> coord_of_;  // ambient column -> free-basis index or -1
  std::vector<int> free_cols_;
};

// A subspace given by an ambient dimension and a spanning set.
template <Field F>
struct Subspace {
  int ambient = 0;
  std::vector<SparseVec<F>> gens;

  int dim() const {
    Reducer<F> r(ambient);
    for (const auto& g : gens) r.add(g);
    return r.rank();
  }
};

template <Field F>
Subspace<F> column_span(const SparseMatrix<F>& m) {
  Subspace<F> s;
  s.ambient = m.rows();
  for (int c = 0; c < m.cols(); ++c)
    if (!m.column(c).empty()) s.gens.push_back(m.column(c));
  return s;
}

// dim(V/W) for W contained in V; containment is verified and its failure
// reported with the first offending generator.
template <Field F>
int quotient_dim(const Subspace<F>& v, const Subspace<F>& w) {
  if (v.ambient != w.ambient)
    throw input_error("quotient of subspaces of different ambient spaces");
  Reducer<F> rv(v.ambient);
  for (const auto& g : v.gens) rv.add(g);
  for (size_t i = 0; i < w.gens.size(); ++i)
    if (!rv.contains(w.gens[i]))
      throw not_contained("quotient: generator " + std::to_string(i) +
                          " of the subspace lies outside the ambient span");
  Reducer<F> rw(w.ambient);
  for (const auto& g : w.gens) rw.add(g);
  return rv.rank() - rw.rank();
}

// --- homology ---------------------------------------------------------------

// d_in: C' -> C, d_out: C -> C''; requires d_out . d_in = 0.
template <Field F>
void require_composition_zero(const SparseMatrix<F>& d_in,
                              const SparseMatrix<F>& d_out,
                              const std::string& what) {
  if (d_in.cols() == 0 || d_out.rows() == 0) return;
  if (!(d_out * d_in).is_zero_matrix())
    throw composition_nonzero(what + ": maps do not compose to zero");
}

template <Field F>
int homology_dim(const SparseMatrix<F>& d_in, const SparseMatrix<F>& d_out) {
  if (d_in.rows() != d_out.cols())
    throw input_error("homology_dim: chain space dimensions disagree");
  require_composition_zero(d_in, d_out, "homology_dim");
  return d_out.cols() - rank(d_out) - rank(d_in);
}

// --- block dispatch ---------------------------------------------------------

/*
 * Rank by column chunks: each worker echelonizes its own slice of the
 * columns, then the surviving vectors merge sequentially.  The merged span
 * is the whole column space, so the result matches rank(m) for any chunk
 * count; the win is that intra-chunk dependencies are eliminated in
 * parallel before the merge sees them.
 */
template <Field F>
int chunked_rank(const SparseMatrix<F>& m, int chunks) {
  if (chunks <= 1 || m.cols() < 2 * chunks) return rank(m);
  std::vector<std::vector<SparseVec<F>>> partial(static_cast<size_t>(chunks));
  std::vector<std::function<void()>> tasks;
  tasks.reserve(static_cast<size_t>(chunks));
  int per = (m.cols() + chunks - 1) / chunks;
  for (int t = 0; t < chunks; ++t)
    tasks.push_back([&m, &partial, t, per] {
      Reducer<F> red(m.rows());
      int lo = t * per, hi = std::min(m.cols(), lo + per);
      for (int c = lo; c < hi; ++c) red.add(m.column(c));
      partial[static_cast<size_t>(t)] = red.basis();
    });
  run_parallel(tasks);
  Reducer<F> merged(m.rows());
  for (auto& vecs : partial)
    for (auto& v : vecs) merged.add(std::move(v));
  return merged.rank();
}

/*
 * Rank of a matrix whose rows and columns both carry a block label (weight)
 * and whose entries never cross blocks.  The per block ranks are summed;
 * blocks are independent tasks, so this is also the parallel entry point.
 * An entry that does cross blocks is a hard error: it means a supposedly
 * homogeneous operator is not.
 */
template <Field F>
int rank_blocked(const SparseMatrix<F>& m, const std::vector<int>& row_label,
                 const std::vector<int>& col_label) {
  if (static_cast<int>(row_label.size()) != m.rows() ||
      static_cast<int>(col_label.size()) != m.cols())
    throw input_error("rank_blocked: label count mismatch");
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> blocks;
  for (int r = 0; r < m.rows(); ++r)
    blocks[row_label[static_cast<size_t>(r)]].first.push_back(r);
  for (int c = 0; c < m.cols(); ++c)
    blocks[col_label[static_cast<size_t>(c)]].second.push_back(c);
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c))
      if (row_label[static_cast<size_t>(r)] != col_label[static_cast<size_t>(c)])
        throw input_error("rank_blocked: entry crosses blocks");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> work;
  for (auto& [label, ids] : blocks)
    if (!ids.first.empty() && !ids.second.empty()) work.push_back(std::move(ids));
  // a weight-homogeneous matrix collapses to one block; chunk its columns
  // instead so the thread budget still buys something
  if (work.size() == 1 && thread_count() > 1)
    return chunked_rank(m.submatrix(work[0].first, work[0].second),
                        thread_count());
  std::vector<int> results(work.size(), 0);
  std::vector<std::function<void()>> tasks;
  tasks.reserve(work.size());
  for (size_t i = 0; i < work.size(); ++i)
    tasks.push_back([&m, &work, &results, i] {
      results[i] = rank(m.submatrix(work[i].first, work[i].second));
    });
  run_parallel(tasks);
  int total = 0;
  for (int r : results) total += r;
  return total;
}

// --- homology with representatives -----------------------------------------

/*
 * Reduction structure that also records how each stored row was obtained
 * from the added generators, so that membership comes with coordinates.
 */
template <Field F>
class SolvingReducer {
 public:
  explicit SolvingReducer(int ncols) : ncols_(ncols) {}

  // Returns true if v extended the span; either way the expression of the
  // reduced v over previously added generators is discarded (only solves
  // against the final span are needed).
  bool add(const SparseVec<F>& v) {
    SparseVec<F> r = v;
    std::vector<F> expr(n_added_, F{0});
    expr.push_back(F{1});
    reduce_tracked(r, expr);
    ++n_added_;
    for (auto& row : rows_) row.second.expr.push_back(F{0});
    if (r.empty()) return false;
    int lead = r.front().first;
    rows_.emplace(lead, Entry{std::move(r), std::move(expr)});
    return true;
  }

  // Solves span(added generators) ∋ v, returning coordinates over all added
  // generators; nullopt if v is outside the span.
  std::optional<std::vector<F>> solve(const SparseVec<F>& v) const {
    SparseVec<F> r = v;
    std::vector<F> expr(n_added_, F{0});
    if (!reduce_tracked(r, expr)) return std::nullopt;
    for (auto& c : expr) c = -c;
    return expr;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Entry {
    SparseVec<F> vec;
    std::vector<F> expr; // vec = sum expr[i] * generator_i
  };

  // Reduces r in place, accumulating the eliminating combination into expr
  // (sized n_added_ or n_added_+1); true if r reduced to zero.
  bool reduce_tracked(SparseVec<F>& r, std::vector<F>& expr) const {
    while (!r.empty()) {
      auto it = rows_.find(r.front().first);
      if (it == rows_.end()) return false;
      const Entry& e = it->second;
      F c = r.front().second / e.vec.front().second;
      r = sparse_axpy(F{1}, r, F(-c), e.vec);
      for (size_t i = 0; i < e.expr.size() && i < expr.size(); ++i)
        expr[i] = expr[i] - c * e.expr[i];
    }
    return true;
  }

  int ncols_;
  int n_added_ = 0;
  std::map<int, Entry> rows_;
};

/*
 * Homology of C' -d_in-> C -d_out-> C'' with chosen representatives:
 * a spanning set of the boundary image is installed first, then kernel
 * vectors that extend it become the representatives.  coords() expresses a
 * cycle in that basis modulo boundaries.
 */
template <Field F>
struct HomologySpace {
  int ambient = 0;
  std::vector<SparseVec<F>> reps;
  std::vector<SparseVec<F>> boundary_basis;
  SolvingReducer<F> solver{0};
  // solver generator index of each representative (kernel vectors that fell
  // inside the boundary span consume indices without becoming reps)
  std::vector<int> rep_gen;

  int dim() const { return static_cast<int>(reps.size()); }

  // Coordinates of a cycle in the representative basis modulo boundaries.
  // The boundary part of the solution is ambiguous when the fed columns were
  // dependent, but the representative coefficients are uniquely determined.
  std::vector<F> coords(const SparseVec<F>& cycle) const {
    auto sol = solver.solve(cycle);
    if (!sol)
      throw not_contained("coords: vector is not a cycle modulo boundaries");
    std::vector<F> out(reps.size(), F{0});
    for (size_t i = 0; i < reps.size(); ++i)
      out[i] = (*sol)[static_cast<size_t>(rep_gen[i])];
    return out;
  }
};

template <Field F>
HomologySpace<F> homology_space(const SparseMatrix<F>& d_in,
                                const SparseMatrix<F>& d_out) {
  if (d_in.rows() != d_out.cols())
    throw input_error("homology_space: chain space dimensions disagree");
  require_composition_zero(d_in, d_out, "homology_space");
  HomologySpace<F> h;
  h.ambient = d_out.cols();
  h.solver = SolvingReducer<F>(h.ambient);
  int n_added = 0;
  for (int c = 0; c < d_in.cols(); ++c) {
    const auto& col = d_in.column(c);
    if (col.empty()) continue;
    if (h.solver.add(col)) h.boundary_basis.push_back(col);
    ++n_added;
  }
  for (auto& k : kernel_basis(d_out)) {
    if (h.solver.add(k)) {
      h.rep_gen.push_back(n_added);
      h.reps.push_back(std::move(k));
    }
    ++n_added;
  }
  return h;
}

} // namespace cychom

#endif

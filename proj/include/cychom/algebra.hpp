#ifndef CYCHOM_ALGEBRA_HPP
#define CYCHOM_ALGEBRA_HPP

// Finite-dimensional commutative unital algebras, presented by a basis and a
// multiplication table.  Algebras built as monomial quotients k[x_1..x_g]/I
// carry their presentation along, so modules of differential forms can be
// assembled from generators and relations instead of raw structure constants.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <cychom/errors.hpp>
#include <cychom/linalg.hpp>
#include <cychom/rational.hpp>
#include <cychom/rational_function.hpp>
#include <cychom/sparse.hpp>

namespace cychom {

template <Field F>
std::string field_label_of() {
  if constexpr (std::is_same_v<F, Rational>)
    return "Q";
  else if constexpr (std::is_same_v<F, RatFunc>)
    return "Q(t)";
  else
    return "k";
}

// A quotient of a polynomial ring by an ideal generated by monomials.  Every
// monomial is either zero in the quotient or one of the standard-monomial
// basis elements, so products of basis elements have at most one term.
struct MonomialPresentation {
  std::vector<std::string> gen_names;
  std::vector<int> gen_weights;            // each >= 1
  std::vector<std::vector<int>> relations; // exponent vectors of ideal generators
  std::vector<std::vector<int>> basis;     // standard monomials, aligned with the algebra basis
  std::map<std::vector<int>, int> index;

  int nvars() const { return static_cast<int>(gen_names.size()); }

  bool in_ideal(const std::vector<int>& e) const {
    for (const auto& r : relations) {
      bool divisible = true;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < r[i]) {
          divisible = false;
          break;
        }
      if (divisible) return true;
    }
    return false;
  }

  // nullopt means the monomial lies in the ideal (is zero in the quotient)
  std::optional<int> index_of(const std::vector<int>& e) const {
    auto it = index.find(e);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  int weight_of(const std::vector<int>& e) const {
    int w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += e[i] * gen_weights[i];
    return w;
  }

  std::string label_of(const std::vector<int>& e) const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += gen_names[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }

  void rebuild_index() {
    index.clear();
    for (size_t i = 0; i < basis.size(); ++i)
      index[basis[i]] = static_cast<int>(i);
  }
};

template <Field F>
struct FinCommAlgebra {
  std::string name;
  std::string field_label;
  std::vector<std::string> basis_labels;
  int unit_index = 0;
  std::vector<SparseVec<F>> mult; // mult[i*dim+j] = e_i * e_j in coordinates
  std::vector<int> weights;       // one per basis element
  bool graded = false;
  std::vector<F> aug; // aug[i] = augmentation of e_i; empty if undeclared
  std::optional<MonomialPresentation> pres;

  int dim() const { return static_cast<int>(basis_labels.size()); }
  bool augmented() const { return !aug.empty(); }

  const SparseVec<F>& product(int i, int j) const {
    return mult[static_cast<size_t>(i) * basis_labels.size() +
                static_cast<size_t>(j)];
  }

  SparseVec<F> multiply(const SparseVec<F>& u, const SparseVec<F>& v) const {
    std::map<int, F> acc;
    for (const auto& [i, ci] : u)
      for (const auto& [j, cj] : v)
        for (const auto& [k, ck] : product(i, j)) {
          auto it = acc.find(k);
          if (it == acc.end())
            acc.emplace(k, F(ci * cj * ck));
          else
            it->second = it->second + ci * cj * ck;
        }
    SparseVec<F> out;
    for (auto& [k, c] : acc)
      if (!is_zero(c)) out.push_back({k, c});
    return out;
  }

  F augment(const SparseVec<F>& u) const {
    F s{0};
    for (const auto& [i, c] : u) s = s + c * aug[static_cast<size_t>(i)];
    return s;
  }
};

namespace detail {

// Standard monomials are closed under taking divisors, so multiplying by one
// generator at a time starting from 1 reaches all of them.
inline std::vector<std::vector<int>> enumerate_standard_monomials(
    const MonomialPresentation& p, int budget) {
  std::map<std::vector<int>, bool> seen;
  std::vector<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  std::vector<int> one(static_cast<size_t>(p.nvars()), 0);
  if (p.in_ideal(one))
    throw input_error("monomial quotient: the unit lies in the ideal");
  seen[one] = true;
  found.push_back(one);
  frontier.push_back(one);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& m : frontier)
      for (int i = 0; i < p.nvars(); ++i) {
        auto m2 = m;
        ++m2[static_cast<size_t>(i)];
        if (seen.count(m2) || p.in_ideal(m2)) continue;
        seen[m2] = true;
        found.push_back(m2);
        if (static_cast<int>(found.size()) > budget)
          throw budget_exceeded("monomial quotient: basis exceeds budget of " +
                                std::to_string(budget) + " monomials");
        next.push_back(m2);
      }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              int wa = p.weight_of(a), wb = p.weight_of(b);
              if (wa != wb) return wa < wb;
              return a > b; // within a weight: x before y, x^2 before x*y
            });
  return found;
}

} // namespace detail

// Quotient of a polynomial ring by the monomial ideal the relations generate.
// Finite dimension requires a pure power of every generator in the ideal.
template <Field F = Rational>
FinCommAlgebra<F> make_truncated_poly(
    const std::string& name, const std::vector<std::string>& gens,
    const std::vector<int>& gen_weights,
    const std::vector<std::vector<int>>& relations, bool graded = true,
    int budget = 100000) {
  if (gens.size() != gen_weights.size())
    throw input_error("make_truncated_poly: generator/weight count mismatch");
  for (int w : gen_weights)
    if (w < 1) throw input_error("make_truncated_poly: weights must be >= 1");
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] == gens[j])
        throw input_error("make_truncated_poly: duplicate generator " +
                          gens[i]);

  MonomialPresentation p;
  p.gen_names = gens;
  p.gen_weights = gen_weights;
  for (const auto& r : relations) {
    if (r.size() != gens.size())
      throw input_error("make_truncated_poly: relation arity mismatch");
    bool all_zero = true;
    for (int e : r) {
      if (e < 0) throw input_error("make_truncated_poly: negative exponent");
      if (e != 0) all_zero = false;
    }
    if (all_zero)
      throw input_error("make_truncated_poly: the relation 1 collapses the algebra");
    p.relations.push_back(r);
  }

  // a monomial ideal has finite codimension iff it contains a pure power of
  // every variable
  for (size_t i = 0; i < gens.size(); ++i) {
    bool has_pure_power = false;
    for (const auto& r : p.relations) {
      bool pure = r[i] > 0;
      for (size_t j = 0; pure && j < r.size(); ++j)
        if (j != i && r[j] != 0) pure = false;
      if (pure) {
        has_pure_power = true;
        break;
      }
    }
    if (!has_pure_power)
      throw not_artinian("make_truncated_poly: no pure power of " + gens[i] +
                         " among the relations; the quotient is infinite-dimensional");
  }

  p.basis = detail::enumerate_standard_monomials(p, budget);
  p.rebuild_index();

  FinCommAlgebra<F> a;
  a.name = name;
  a.field_label = field_label_of<F>();
  a.graded = graded;
  int d = static_cast<int>(p.basis.size());
  a.basis_labels.reserve(static_cast<size_t>(d));
  a.weights.reserve(static_cast<size_t>(d));
  for (const auto& m : p.basis) {
    a.basis_labels.push_back(p.label_of(m));
    a.weights.push_back(p.weight_of(m));
  }
  a.unit_index = 0;
  a.mult.assign(static_cast<size_t>(d) * static_cast<size_t>(d), {});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<int> e = p.basis[static_cast<size_t>(i)];
      for (size_t v = 0; v < e.size(); ++v)
        e[v] += p.basis[static_cast<size_t>(j)][v];
      if (auto k = p.index_of(e))
        a.mult[static_cast<size_t>(i) * static_cast<size_t>(d) +
               static_cast<size_t>(j)] = {{*k, F{1}}};
    }
  a.aug.assign(static_cast<size_t>(d), F{0});
  a.aug[0] = F{1};
  a.pres = std::move(p);
  return a;
}

// the ground field viewed as a one-dimensional algebra
template <Field F = Rational>
FinCommAlgebra<F> scalar_algebra(std::string name = {}) {
  FinCommAlgebra<F> a;
  a.field_label = field_label_of<F>();
  a.name = name.empty() ? a.field_label : std::move(name);
  a.basis_labels = {"1"};
  a.unit_index = 0;
  a.mult = {{{0, F{1}}}};
  a.weights = {0};
  a.graded = true;
  a.aug = {F{1}};
  MonomialPresentation p;
  p.basis = {{}};
  p.rebuild_index();
  a.pres = std::move(p);
  return a;
}

namespace detail {

// Merged presentation of a tensor product of monomial quotients: generators
// side by side, each relation padded with zeros on the other side.  Name
// clashes in the second factor get primes appended.
inline MonomialPresentation merge_presentations(const MonomialPresentation& r,
                                                const MonomialPresentation& a) {
  MonomialPresentation m;
  m.gen_names = r.gen_names;
  m.gen_weights = r.gen_weights;
  for (size_t i = 0; i < a.gen_names.size(); ++i) {
    std::string nm = a.gen_names[i];
    while (std::find(m.gen_names.begin(), m.gen_names.end(), nm) !=
           m.gen_names.end())
      nm += "'";
    m.gen_names.push_back(nm);
    m.gen_weights.push_back(a.gen_weights[i]);
  }
  size_t nr = r.gen_names.size(), na = a.gen_names.size();
  for (const auto& rel : r.relations) {
    auto e = rel;
    e.resize(nr + na, 0);
    m.relations.push_back(e);
  }
  for (const auto& rel : a.relations) {
    std::vector<int> e(nr + na, 0);
    for (size_t i = 0; i < na; ++i) e[nr + i] = rel[i];
    m.relations.push_back(e);
  }
  return m;
}

} // namespace detail

// Tensor product over the common ground field.  Basis element i*dim(a)+j is
// e_i ⊗ f_j; downstream code that needs the pair decomposition relies on
// exactly this ordering.
template <Field F>
FinCommAlgebra<F> tensor(const FinCommAlgebra<F>& r,
                         const FinCommAlgebra<F>& a) {
  if (r.field_label != a.field_label)
    throw field_mismatch("tensor: factors over " + r.field_label + " and " +
                         a.field_label);
  FinCommAlgebra<F> t;
  t.field_label = r.field_label;
  t.name = r.name + "(x)" + a.name;
  t.graded = r.graded && a.graded;
  int dr = r.dim(), da = a.dim();
  int d = dr * da;

  bool merged = r.pres.has_value() && a.pres.has_value();
  if (merged) {
    MonomialPresentation p = detail::merge_presentations(*r.pres, *a.pres);
    size_t nr = r.pres->gen_names.size();
    size_t na = a.pres->gen_names.size();
    for (int i = 0; i < dr; ++i)
      for (int j = 0; j < da; ++j) {
        std::vector<int> e(nr + na, 0);
        for (size_t v = 0; v < nr; ++v)
          e[v] = r.pres->basis[static_cast<size_t>(i)][v];
        for (size_t v = 0; v < na; ++v)
          e[nr + v] = a.pres->basis[static_cast<size_t>(j)][v];
        p.basis.push_back(std::move(e));
      }
    p.rebuild_index();
    for (const auto& m : p.basis) t.basis_labels.push_back(p.label_of(m));
    t.pres = std::move(p);
  } else {
    for (int i = 0; i < dr; ++i)
      for (int j = 0; j < da; ++j) {
        const std::string& rl = r.basis_labels[static_cast<size_t>(i)];
        const std::string& al = a.basis_labels[static_cast<size_t>(j)];
        if (rl == "1")
          t.basis_labels.push_back(al);
        else if (al == "1")
          t.basis_labels.push_back(rl);
        else
          t.basis_labels.push_back(rl + "*" + al);
      }
  }

  t.unit_index = r.unit_index * da + a.unit_index;
  t.weights.reserve(static_cast<size_t>(d));
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < da; ++j)
      t.weights.push_back(r.weights[static_cast<size_t>(i)] +
                          a.weights[static_cast<size_t>(j)]);

  t.mult.assign(static_cast<size_t>(d) * static_cast<size_t>(d), {});
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < dr; ++k)
        for (int l = 0; l < da; ++l) {
          SparseVec<F> prod;
          for (const auto& [u, cu] : r.product(i, k))
            for (const auto& [v, cv] : a.product(j, l))
              prod.push_back({u * da + v, F(cu * cv)});
          std::sort(prod.begin(), prod.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          t.mult[static_cast<size_t>(i * da + j) * static_cast<size_t>(d) +
                 static_cast<size_t>(k * da + l)] = std::move(prod);
        }

  if (r.augmented() && a.augmented()) {
    t.aug.reserve(static_cast<size_t>(d));
    for (int i = 0; i < dr; ++i)
      for (int j = 0; j < da; ++j)
        t.aug.push_back(F(r.aug[static_cast<size_t>(i)] *
                          a.aug[static_cast<size_t>(j)]));
  }
  return t;
}

template <Field F>
struct AugIdeal {
  int parent_dim = 0;
  Subspace<F> basis;
  int dim() const { return static_cast<int>(basis.gens.size()); }
};

template <Field F>
AugIdeal<F> augmentation_ideal(const FinCommAlgebra<F>& a) {
  if (!a.augmented())
    throw input_error("augmentation_ideal: no augmentation declared on " +
                      a.name);
  SparseMatrix<F> m(1, a.dim());
  for (int j = 0; j < a.dim(); ++j) m.add(0, j, a.aug[static_cast<size_t>(j)]);
  m.finalize();
  AugIdeal<F> out;
  out.parent_dim = a.dim();
  out.basis.ambient = a.dim();
  out.basis.gens = kernel_basis(m);
  return out;
}

// Runs every structural invariant and returns the violations found.
template <Field F>
std::vector<std::string> validate(const FinCommAlgebra<F>& a) {
  std::vector<std::string> bad;
  int d = a.dim();
  auto label = [&](int i) { return a.basis_labels[static_cast<size_t>(i)]; };
  if (a.mult.size() != static_cast<size_t>(d) * static_cast<size_t>(d)) {
    bad.push_back("multiplication table has wrong size");
    return bad;
  }
  if (a.weights.size() != static_cast<size_t>(d))
    bad.push_back("weight vector has wrong size");
  if (a.unit_index < 0 || a.unit_index >= d) {
    bad.push_back("unit index out of range");
    return bad;
  }
  for (const auto& row : a.mult)
    for (const auto& [k, c] : row) {
      if (k < 0 || k >= d) {
        bad.push_back("product coefficient index out of range");
        return bad;
      }
      if (is_zero(c)) bad.push_back("stored zero coefficient in a product");
    }

  for (int i = 0; i < d; ++i)
    if (a.product(a.unit_index, i) != SparseVec<F>{{i, F{1}}}) {
      bad.push_back("unit law fails on " + label(i));
      break;
    }
  for (int i = 0; i < d && bad.size() < 32; ++i)
    for (int j = i + 1; j < d; ++j)
      if (a.product(i, j) != a.product(j, i)) {
        bad.push_back("commutativity fails on " + label(i) + ", " + label(j));
        j = d;
      }
  for (int i = 0; i < d && bad.size() < 32; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        auto left = a.multiply(a.product(i, j), {{l, F{1}}});
        auto right = a.multiply({{i, F{1}}}, a.product(j, l));
        if (left != right) {
          bad.push_back("associativity fails on " + label(i) + ", " +
                        label(j) + ", " + label(l));
          j = l = d;
        }
      }
  if (a.graded && a.weights.size() == static_cast<size_t>(d)) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (const auto& [k, c] : a.product(i, j)) {
          (void)c;
          if (a.weights[static_cast<size_t>(k)] !=
              a.weights[static_cast<size_t>(i)] +
                  a.weights[static_cast<size_t>(j)]) {
            bad.push_back("grading fails on " + label(i) + " * " + label(j));
            i = j = d;
            break;
          }
        }
    for (int i = 0; i < d; ++i)
      if (a.weights[static_cast<size_t>(i)] == 0 && i != a.unit_index) {
        bad.push_back("weight-0 component larger than the ground field");
        break;
      }
    for (int i = 0; i < d; ++i)
      if (a.weights[static_cast<size_t>(i)] < 0) {
        bad.push_back("negative weight on " + label(i));
        break;
      }
  }
  if (a.augmented()) {
    if (a.aug.size() != static_cast<size_t>(d))
      bad.push_back("augmentation vector has wrong size");
    else {
      if (a.aug[static_cast<size_t>(a.unit_index)] != F{1})
        bad.push_back("augmentation of the unit is not 1");
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          F lhs = a.augment(a.product(i, j));
          F rhs = F(a.aug[static_cast<size_t>(i)] *
                    a.aug[static_cast<size_t>(j)]);
          if (lhs != rhs) {
            bad.push_back("augmentation is not multiplicative on " + label(i) +
                          " * " + label(j));
            i = j = d;
          }
        }
    }
  }
  return bad;
}

// The free graded polynomial algebra truncated at weight W: the quotient by
// the (monomial) ideal of everything of weight above W.  Weight blocks at or
// below W agree with the untruncated algebra, because a product of basis
// elements inside such a block never reaches the truncation.
struct GradedPolySlice {
  FinCommAlgebra<Rational> algebra;
  int truncation_weight = 0;
  std::vector<std::vector<int>> weight_index; // w -> basis indices
};

inline GradedPolySlice graded_poly_slice(const std::vector<std::string>& gens,
                                         const std::vector<int>& gen_weights,
                                         int W, int budget = 100000) {
  if (W < 0) throw out_of_range("graded_poly_slice: negative truncation");
  if (gens.empty())
    throw input_error("graded_poly_slice: no generators");
  for (int w : gen_weights)
    if (w < 1) throw input_error("graded_poly_slice: weights must be >= 1");
  int maxw = *std::max_element(gen_weights.begin(), gen_weights.end());

  // minimal generators of the truncation ideal: weight above W, every
  // proper divisor at or below W
  std::vector<std::vector<int>> rels;
  std::vector<std::vector<int>> frontier{std::vector<int>(gens.size(), 0)};
  std::map<std::vector<int>, bool> seen{{frontier[0], true}};
  auto weight_of = [&](const std::vector<int>& e) {
    int w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += e[i] * gen_weights[i];
    return w;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& m : frontier)
      for (size_t i = 0; i < gens.size(); ++i) {
        auto m2 = m;
        ++m2[i];
        if (seen.count(m2)) continue;
        seen[m2] = true;
        int w = weight_of(m2);
        if (w > W) {
          bool minimal = true;
          for (size_t j = 0; j < m2.size(); ++j)
            if (m2[j] > 0 && w - gen_weights[j] > W) minimal = false;
          if (minimal) rels.push_back(m2);
          continue; // nothing above weight W is explored further
        }
        next.push_back(m2);
      }
    frontier = std::move(next);
  }
  (void)maxw;

  GradedPolySlice s;
  std::string nm = "slice(";
  for (size_t i = 0; i < gens.size(); ++i)
    nm += (i ? "," : "") + gens[i];
  nm += ";W=" + std::to_string(W) + ")";
  s.algebra = make_truncated_poly<Rational>(nm, gens, gen_weights, rels, true,
                                            budget);
  s.truncation_weight = W;
  s.weight_index.assign(static_cast<size_t>(W) + 1, {});
  for (int i = 0; i < s.algebra.dim(); ++i)
    s.weight_index[static_cast<size_t>(s.algebra.weights[static_cast<size_t>(i)])]
        .push_back(i);
  return s;
}

inline const std::vector<int>& weight_slice_indices(const GradedPolySlice& s,
                                                    int w) {
  if (w < 0 || w > s.truncation_weight)
    throw out_of_range("weight_slice_indices: weight " + std::to_string(w) +
                       " outside 0.." + std::to_string(s.truncation_weight));
  return s.weight_index[static_cast<size_t>(w)];
}

inline std::vector<std::string> weight_slice_basis(const GradedPolySlice& s,
                                                   int w) {
  std::vector<std::string> out;
  for (int i : weight_slice_indices(s, w))
    out.push_back(s.algebra.basis_labels[static_cast<size_t>(i)]);
  return out;
}

} // namespace cychom

#endif

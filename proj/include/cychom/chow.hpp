#ifndef CYCHOM_CHOW_HPP
#define CYCHOM_CHOW_HPP

// Table arithmetic over cohomology dimension tables h[q][i] of a smooth
// projective variety: scan the vanishing condition for a codimension p, and
// when it holds report the dimension of the degree-p formal deformation
// space, h[p][p-1] times dim m_A, together with the pro-representability
// statement the hypotheses support.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <cychom/algebra.hpp>

namespace cychom {

struct HodgeTable {
  int d = 0; // variety dimension
  std::vector<std::vector<int>> h; // h[q][i], 0 <= q,i <= d
  std::string label;

  // entries above the dimension vanish; the table never stores them
  int at(int q, int i) const {
    if (q < 0 || i < 0) throw out_of_range("HodgeTable: negative index");
    if (q > d || i > d) return 0;
    return h[static_cast<size_t>(q)][static_cast<size_t>(i)];
  }
};

inline void validate_table(const HodgeTable& t) {
  if (t.d < 0) throw input_error("hodge table: negative dimension");
  if (static_cast<int>(t.h.size()) != t.d + 1)
    throw input_error("hodge table: expected " + std::to_string(t.d + 1) +
                      " rows");
  for (const auto& row : t.h) {
    if (static_cast<int>(row.size()) != t.d + 1)
      throw input_error("hodge table: ragged rows");
    for (int x : row)
      if (x < 0) throw input_error("hodge table: negative entry");
  }
  if (t.h[0][0] < 1)
    throw input_error("hodge table: h[0][0] must be at least 1 (constants)");
}

// first line "dim d", then d+1 rows of d+1 integers, row q column i
inline HodgeTable parse_hodge_table(const std::string& text,
                                    std::string label = {}) {
  std::istringstream in(text);
  std::string kw;
  HodgeTable t;
  t.label = std::move(label);
  if (!(in >> kw) || kw != "dim" || !(in >> t.d))
    throw parse_error("hodge table: expected leading \"dim d\"");
  if (t.d < 0) throw parse_error("hodge table: negative dimension");
  t.h.assign(static_cast<size_t>(t.d) + 1,
             std::vector<int>(static_cast<size_t>(t.d) + 1, 0));
  for (int q = 0; q <= t.d; ++q)
    for (int i = 0; i <= t.d; ++i)
      if (!(in >> t.h[static_cast<size_t>(q)][static_cast<size_t>(i)]))
        throw parse_error("hodge table: expected " +
                          std::to_string((t.d + 1) * (t.d + 1)) + " entries");
  std::string rest;
  if (in >> rest)
    throw parse_error("hodge table: trailing content \"" + rest + "\"");
  validate_table(t);
  return t;
}

inline HodgeTable projective_space_table(int d) {
  if (d < 0) throw out_of_range("projective_space_table: negative dimension");
  HodgeTable t;
  t.d = d;
  t.label = "projective_space(" + std::to_string(d) + ")";
  t.h.assign(static_cast<size_t>(d) + 1,
             std::vector<int>(static_cast<size_t>(d) + 1, 0));
  for (int q = 0; q <= d; ++q) t.h[static_cast<size_t>(q)][static_cast<size_t>(q)] = 1;
  return t;
}

inline HodgeTable product_table(const HodgeTable& a, const HodgeTable& b) {
  validate_table(a);
  validate_table(b);
  HodgeTable t;
  t.d = a.d + b.d;
  t.label = "product(" + a.label + ", " + b.label + ")";
  t.h.assign(static_cast<size_t>(t.d) + 1,
             std::vector<int>(static_cast<size_t>(t.d) + 1, 0));
  for (int q = 0; q <= t.d; ++q)
    for (int i = 0; i <= t.d; ++i) {
      long long sum = 0;
      for (int aq = 0; aq <= a.d && aq <= q; ++aq)
        for (int ai = 0; ai <= a.d && ai <= i; ++ai)
          sum += static_cast<long long>(a.at(aq, ai)) * b.at(q - aq, i - ai);
      t.h[static_cast<size_t>(q)][static_cast<size_t>(i)] =
          static_cast<int>(sum);
    }
  return t;
}

// "projective_space(d)" by name; anything else is unknown here
inline HodgeTable builtin_table(const std::string& name) {
  const std::string prefix = "projective_space(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(prefix.size(),
                                    name.size() - prefix.size() - 1);
    try {
      size_t used = 0;
      int d = std::stoi(inner, &used);
      if (used == inner.size()) return projective_space_table(d);
    } catch (const std::exception&) {
    }
  }
  throw unknown_name("builtin_table: no table named \"" + name + "\"");
}

// optional lint, not enforced anywhere: complex-geometry tables are
// symmetric, but the calculator works with any non-negative table
inline std::vector<std::pair<int, int>> hodge_symmetry_violations(
    const HodgeTable& t) {
  std::vector<std::pair<int, int>> out;
  for (int q = 0; q <= t.d; ++q)
    for (int i = q + 1; i <= t.d; ++i)
      if (t.at(q, i) != t.at(i, q)) out.emplace_back(q, i);
  return out;
}

struct VanishingEntry {
  int q = 0, i = 0;
  int observed = 0;
};

struct VanishingScan {
  int p = 0;
  std::vector<VanishingEntry> entries;
  bool satisfied() const {
    for (const auto& e : entries)
      if (e.observed != 0) return false;
    return true;
  }
  std::string first_violation() const {
    for (const auto& e : entries)
      if (e.observed != 0)
        return "(q,i) = (" + std::to_string(e.q) + "," + std::to_string(e.i) +
               ") with value " + std::to_string(e.observed);
    return {};
  }
};

// the condition scanned for codimension p: h[q][i] = 0 for all i = 0..p-2
// and q = p..2p-1-i (entries above the dimension count as zero)
inline VanishingScan check_vanishing(const HodgeTable& t, int p) {
  if (p < 2 || p > t.d)
    throw out_of_range("check_vanishing: need 2 <= p <= dim");
  VanishingScan scan;
  scan.p = p;
  for (int i = 0; i <= p - 2; ++i)
    for (int q = p; q <= 2 * p - 1 - i; ++q)
      scan.entries.push_back({q, i, t.at(q, i)});
  return scan;
}

struct ArtinSpec {
  int dim_m = 0;
  bool graded = false;
  bool k_algebraic_over_q = false;
};

inline ArtinSpec artin_spec(const FinCommAlgebra<Rational>& a,
                            bool k_algebraic_over_q = true) {
  if (a.aug.empty())
    throw not_artinian("artin_spec: algebra has no augmentation");
  ArtinSpec s;
  s.dim_m = a.dim() - 1;
  s.graded = a.graded;
  s.k_algebraic_over_q = k_algebraic_over_q;
  return s;
}

struct DeformationReport {
  int p = 0;
  std::vector<VanishingEntry> entries; // empty for p = 1
  bool satisfied = false;
  std::optional<long long> dim_formal_chow;
  std::string prorep = "not determined";
  std::string case_used; // which proven case supplied the answer
  std::string reason;    // why nothing was determined, when applicable
  bool determined() const { return dim_formal_chow.has_value(); }
};

inline DeformationReport formal_chow_dim(const HodgeTable& t, int p,
                                         const ArtinSpec& a) {
  if (p < 1 || p > t.d)
    throw out_of_range("formal_chow_dim: need 1 <= p <= dim");
  DeformationReport rep;
  rep.p = p;

  if (p == 1) {
    // unconditional: the degree-one deformation space is H^1(O) ⊗ m
    rep.satisfied = true;
    rep.dim_formal_chow = static_cast<long long>(t.at(1, 0)) * a.dim_m;
    rep.case_used = "degree-one case (no vanishing hypothesis)";
    rep.prorep = "pro-representable by V \xE2\x8A\x97 m with dim V = " +
                 std::to_string(t.at(1, 0));
    return rep;
  }

  auto scan = check_vanishing(t, p);
  rep.entries = scan.entries;
  rep.satisfied = scan.satisfied();
  if (!rep.satisfied) {
    rep.reason = "vanishing condition violated at " + scan.first_violation();
    return rep;
  }
  if (a.graded)
    rep.case_used = "graded case";
  else if (a.k_algebraic_over_q)
    rep.case_used = "ground field algebraic over the rationals";
  else {
    rep.reason =
        "no proven case applies: the Artinian algebra is not graded and the "
        "ground field is not known to be algebraic over the rationals (open)";
    return rep;
  }
  rep.dim_formal_chow = static_cast<long long>(t.at(p, p - 1)) * a.dim_m;
  rep.prorep = "pro-representable by V \xE2\x8A\x97 m with dim V = " +
               std::to_string(t.at(p, p - 1));
  return rep;
}

} // namespace cychom

#endif

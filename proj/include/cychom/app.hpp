#ifndef CYCHOM_APP_HPP
#define CYCHOM_APP_HPP

// Command line front end.  Every subcommand drives exactly one library
// operation, builds a machine-readable document first, and renders the text
// view from that same document, so the two formats cannot drift apart.
// Exit codes: 0 success, 1 unusable input, 2 a mathematical verdict that was
// asked for came out false.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cychom/algebra_io.hpp>
#include <cychom/chow.hpp>
#include <cychom/cyclic.hpp>
#include <cychom/filtration.hpp>
#include <cychom/hkr.hpp>
#include <cychom/hochschild.hpp>
#include <cychom/hodge.hpp>
#include <cychom/relative.hpp>
#include <cychom/sbi.hpp>
#include <cychom/threads.hpp>

namespace cychom::app {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct Common {
  std::string format = "text";
  long budget = kDefaultTupleBudget;
  int threads = 1;
  unsigned seed = 1; // reserved for randomized checks; everything here is exact
};

inline void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "machine", "json"}))
      ->capture_default_str();
  sub->add_option("--budget-cols", c.budget, "tuple budget per chain degree")
      ->capture_default_str();
  sub->add_option("--threads", c.threads,
                  "worker threads for block dispatch (0 = hardware)")
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for randomized checks")
      ->capture_default_str();
}

inline AlgebraDescription describe_algebra_arg(const std::string& arg) {
  if (auto d = builtin_algebra(arg)) return *d;
  return load_algebra_file(arg);
}

inline FinCommAlgebra<Rational> load_rational_algebra(const std::string& arg,
                                                      const char* who) {
  auto d = describe_algebra_arg(arg);
  if (d.field != "Q")
    throw field_mismatch(std::string(who) +
                         ": this subcommand needs a rational ground field, "
                         "got " + d.field);
  return build_algebra<Rational>(d);
}

namespace detail {

inline json dims_json(const std::vector<int>& dims) {
  json out = json::array();
  for (int d : dims) out.push_back(d);
  return out;
}

inline std::string dims_line(const json& arr) {
  std::ostringstream s;
  for (size_t i = 0; i < arr.size(); ++i)
    s << (i ? ", " : "") << arr[i].get<long long>();
  return s.str();
}

} // namespace detail

// One run's outcome: the document plus how the process should end.
struct Outcome {
  json doc;
  std::string text;
  int exit_code = 0;
  std::string diagnostic; // non-empty only with exit_code 2
};

// --- subcommand payloads ------------------------------------------------

inline Outcome run_hh(const std::string& algebra, int max_degree,
                      std::optional<int> weight, const Common& c) {
  Outcome o;
  auto a = load_rational_algebra(algebra, "hh");
  std::vector<int> dims;
  if (weight) {
    ComplexSpec spec;
    spec.alg = &a;
    spec.weight = *weight;
    ChainSpaces cs(spec, max_degree + 1, c.budget);
    for (int n = 0; n <= max_degree; ++n)
      dims.push_back(chain_homology_dim(cs, n));
  } else {
    dims = hochschild_dims(a, max_degree, c.budget);
  }
  o.doc["algebra"] = a.name;
  o.doc["max_degree"] = max_degree;
  if (weight) o.doc["weight"] = *weight;
  o.doc["dims"] = detail::dims_json(dims);
  std::ostringstream t;
  t << "Hochschild homology of " << a.name;
  if (weight) t << " (weight " << o.doc["weight"].get<int>() << ")";
  t << ", degrees 0.." << o.doc["max_degree"].get<int>() << ":\n  "
    << detail::dims_line(o.doc["dims"]) << "\n";
  o.text = t.str();
  return o;
}

inline Outcome run_hc(const std::string& algebra, int max_degree,
                      std::optional<int> weight, const Common& c) {
  Outcome o;
  auto a = load_rational_algebra(algebra, "hc");
  ComplexSpec spec;
  spec.alg = &a;
  spec.weight = weight;
  // both the periodicity bicomplex and the mixed complex run underneath;
  // a disagreement surfaces as a verdict error before anything is printed
  auto dims = cyclic_dims_for_spec(spec, max_degree, c.budget);
  o.doc["algebra"] = a.name;
  o.doc["max_degree"] = max_degree;
  if (weight) o.doc["weight"] = *weight;
  o.doc["dims"] = detail::dims_json(dims);
  o.doc["routes_agree"] = true;
  std::ostringstream t;
  t << "Cyclic homology of " << a.name;
  if (weight) t << " (weight " << o.doc["weight"].get<int>() << ")";
  t << ", degrees 0.." << o.doc["max_degree"].get<int>() << ":\n  "
    << detail::dims_line(o.doc["dims"])
    << "\n  (bicomplex and mixed-complex routes agree)\n";
  o.text = t.str();
  return o;
}

inline Outcome run_sbi(const std::string& algebra, int max_degree,
                       std::optional<int> eigen, const Common& c) {
  Outcome o;
  auto a = load_rational_algebra(algebra, "sbi");
  auto w = sbi_sequence(a, max_degree, eigen, c.budget);
  o.doc["algebra"] = a.name;
  o.doc["max_degree"] = max_degree;
  if (eigen) o.doc["eigen"] = *eigen;
  o.doc["hh_dims"] = detail::dims_json(w.hh_dims);
  o.doc["hc_dims"] = detail::dims_json(w.hc_dims);
  o.doc["exact"] = w.exact();
  json nodes = json::array();
  for (const auto& n : w.nodes)
    nodes.push_back({{"label", n.label},
                     {"degree", n.degree},
                     {"dim", n.dim_mid},
                     {"rank_in", n.rank_in},
                     {"rank_out", n.rank_out},
                     {"exact", n.exact()}});
  o.doc["nodes"] = nodes;
  std::ostringstream t;
  t << "Connecting sequence for " << a.name << " through degree "
    << o.doc["max_degree"].get<int>();
  if (eigen) t << ", eigenspace piece " << o.doc["eigen"].get<int>();
  t << "\n  HH dims: " << detail::dims_line(o.doc["hh_dims"]) << "\n  HC dims: "
    << detail::dims_line(o.doc["hc_dims"]) << "\n";
  for (const auto& n : o.doc["nodes"])
    t << "  " << n["label"].get<std::string>() << ": dim "
      << n["dim"].get<int>() << ", in " << n["rank_in"].get<int>() << ", out "
      << n["rank_out"].get<int>()
      << (n["exact"].get<bool>() ? " [exact]" : " [NOT EXACT]") << "\n";
  t << (o.doc["exact"].get<bool>() ? "exact at every node\n"
                                   : "exactness fails\n");
  o.text = t.str();
  return o;
}

inline Outcome run_hodge_decomp(const std::string& algebra, int degree,
                                const std::string& theory, const Common& c) {
  Outcome o;
  auto a = load_rational_algebra(algebra, "hodge-decomp");
  Theory th = theory == "hc" ? Theory::hc : Theory::hh;
  auto dims = hodge_homology_dims(a, degree, th, c.budget);
  int total = 0;
  for (int d : dims) total += d;
  o.doc["algebra"] = a.name;
  o.doc["degree"] = degree;
  o.doc["theory"] = theory;
  o.doc["piece_dims"] = detail::dims_json(dims);
  o.doc["total"] = total;
  std::ostringstream t;
  t << (th == Theory::hh ? "Hochschild" : "Cyclic") << " eigenspace pieces of "
    << a.name << " in degree " << o.doc["degree"].get<int>() << ":\n";
  for (size_t i = 0; i < o.doc["piece_dims"].size(); ++i)
    t << "  piece " << i << ": " << o.doc["piece_dims"][i].get<int>() << "\n";
  t << "  sum: " << o.doc["total"].get<int>() << "\n";
  o.text = t.str();
  return o;
}

inline Outcome run_relative(const std::string& base, const std::string& artin,
                            int degree, std::optional<int> eigen,
                            const std::string& theory, const Common& c) {
  Outcome o;
  auto r = load_rational_algebra(base, "relative");
  auto a = load_rational_algebra(artin, "relative");
  auto pair = augmented_pair(r, a);
  Theory th = theory == "hc" ? Theory::hc : Theory::hh;
  auto rep = relative_homology(pair, degree, eigen, th, c.budget);
  o.doc["base"] = r.name;
  o.doc["artin"] = a.name;
  o.doc["degree"] = degree;
  o.doc["theory"] = theory;
  if (eigen) o.doc["eigen"] = *eigen;
  o.doc["relative_dim"] = rep.relative_dim;
  o.doc["total_dim"] = rep.total_dim;
  o.doc["base_dim"] = rep.base_dim;
  o.doc["split"] = rep.split();
  std::ostringstream t;
  t << "Relative " << (th == Theory::hh ? "Hochschild" : "cyclic")
    << " homology of " << r.name << " tensored with " << a.name << " in degree "
    << o.doc["degree"].get<int>();
  if (eigen) t << ", piece " << o.doc["eigen"].get<int>();
  t << ":\n  relative " << o.doc["relative_dim"].get<int>() << ", total "
    << o.doc["total_dim"].get<int>() << ", base " << o.doc["base_dim"].get<int>()
    << "\n  split identity " << (o.doc["split"].get<bool>() ? "holds" : "FAILS")
    << "\n";
  o.text = t.str();
  if (!rep.split()) {
    o.exit_code = 2;
    o.diagnostic = "relative: total dimension does not split as relative plus base";
  }
  return o;
}

inline Outcome run_goodwillie(const std::string& base, const std::string& artin,
                              int degree, const Common& c) {
  Outcome o;
  auto r = load_rational_algebra(base, "goodwillie");
  auto a = load_rational_algebra(artin, "goodwillie");
  auto pair = augmented_pair(r, a);
  auto rep = goodwillie_splitting_check(pair, degree, c.budget);
  o.doc["base"] = r.name;
  o.doc["artin"] = a.name;
  o.doc["degree"] = degree;
  o.doc["hc_below"] = rep.hc_prev;
  o.doc["hh_top"] = rep.hh_top;
  o.doc["hc_top"] = rep.hc_top;
  o.doc["b_injective"] = rep.b_injective;
  o.doc["i_surjective"] = rep.i_surjective;
  o.doc["exact"] = rep.holds();
  std::ostringstream t;
  t << "Top-piece splitting for " << r.name << " tensored with " << a.name
    << " at degree " << o.doc["degree"].get<int>() << ":\n  "
    << o.doc["hc_below"].get<int>() << " -> " << o.doc["hh_top"].get<int>()
    << " -> " << o.doc["hc_top"].get<int>() << "\n  short exact: "
    << (o.doc["exact"].get<bool>() ? "yes" : "NO") << "\n";
  o.text = t.str();
  return o;
}

inline Outcome run_derham(const std::string& algebra, int max_degree,
                          const Common&) {
  Outcome o;
  auto d = describe_algebra_arg(algebra);
  std::vector<int> dims;
  std::string name;
  if (d.field == "Q(t)") {
    auto a = build_algebra<RatFunc>(d);
    dims = de_rham_cohomology(a, max_degree);
    name = a.name;
  } else {
    auto a = build_algebra<Rational>(d);
    dims = de_rham_cohomology(a, max_degree);
    name = a.name;
  }
  o.doc["algebra"] = name;
  o.doc["max_degree"] = max_degree;
  o.doc["dims"] = detail::dims_json(dims);
  std::ostringstream t;
  t << "de Rham cohomology of " << name << " over " << d.field
    << ", degrees 0.." << o.doc["max_degree"].get<int>() << ":\n  "
    << detail::dims_line(o.doc["dims"]) << "\n";
  o.text = t.str();
  return o;
}

inline Outcome run_hkr(int degree, int weight, const std::string& vars,
                       const std::string& var_weights, int truncation,
                       const Common& c) {
  Outcome o;
  std::vector<std::string> gens;
  for (const auto& v : cychom::detail::split(vars, ','))
    if (auto g = cychom::detail::trim(v); !g.empty()) gens.push_back(g);
  std::vector<int> gw;
  for (const auto& v : cychom::detail::split(var_weights, ','))
    if (auto g = cychom::detail::trim(v); !g.empty())
      gw.push_back(cychom::detail::parse_positive_int(g, "variable weight"));
  if (gens.empty()) throw input_error("hkr: no variables given");
  if (gw.size() != gens.size())
    throw input_error("hkr: variable and weight counts differ");
  if (truncation < 0) truncation = weight;
  auto slice = graded_poly_slice(gens, gw, truncation, c.budget);
  auto rep = hkr_compare(slice, degree, weight, c.budget);
  o.doc["variables"] = vars;
  o.doc["truncation"] = truncation;
  o.doc["degree"] = degree;
  o.doc["weight"] = weight;
  o.doc["chain_side"] = rep.chain_side;
  o.doc["form_side"] = rep.form_side;
  o.doc["well_defined"] = rep.map_well_defined;
  o.doc["surjective"] = rep.map_surjective;
  o.doc["match"] = rep.holds();
  std::ostringstream t;
  t << "Antisymmetrization map on " << vars << " in degree "
    << o.doc["degree"].get<int>() << ", weight " << o.doc["weight"].get<int>()
    << ":\n  chain side " << o.doc["chain_side"].get<int>() << ", form side "
    << o.doc["form_side"].get<int>() << "\n  kills boundaries: "
    << (o.doc["well_defined"].get<bool>() ? "yes" : "NO") << ", onto: "
    << (o.doc["surjective"].get<bool>() ? "yes" : "NO") << "\n";
  o.text = t.str();
  if (!rep.holds()) {
    o.exit_code = 2;
    o.diagnostic = "hkr: comparison map failed to identify the two sides";
  }
  return o;
}

inline Outcome run_filtration(const std::string& base, const std::string& artin,
                              int form_degree, const Common&) {
  Outcome o;
  auto db = describe_algebra_arg(base);
  auto da = describe_algebra_arg(artin);
  if (db.field != da.field)
    throw field_mismatch("filtration: base over " + db.field +
                         " but coefficient algebra over " + da.field);
  FiltrationLadder lad;
  if (db.field == "Q(t)") {
    auto r = build_algebra<RatFunc>(db);
    auto a = build_algebra<RatFunc>(da);
    lad = filtration_ladder(r, a, form_degree);
  } else {
    auto r = build_algebra<Rational>(db);
    auto a = build_algebra<Rational>(da);
    lad = filtration_ladder(r, a, form_degree);
  }
  o.doc["base"] = lad.base;
  o.doc["artin"] = lad.artin;
  o.doc["form_degree"] = form_degree;
  o.doc["filtration_dims"] = detail::dims_json(lad.f_dims);
  o.doc["graded_piece_dims"] = detail::dims_json(lad.gr_dims);
  o.doc["expected_piece_dims"] = detail::dims_json(lad.expected);
  o.doc["total"] = lad.total();
  o.doc["match"] = lad.holds();
  std::ostringstream t;
  t << "Filtration of the degree-" << o.doc["form_degree"].get<int>()
    << " forms of " << lad.base << " tensored with " << lad.artin << ":\n"
    << "  F dims: " << detail::dims_line(o.doc["filtration_dims"]) << "\n"
    << "  graded pieces: " << detail::dims_line(o.doc["graded_piece_dims"])
    << "\n  expected:      "
    << detail::dims_line(o.doc["expected_piece_dims"]) << "\n  match: "
    << (o.doc["match"].get<bool>() ? "yes" : "NO") << "\n";
  o.text = t.str();
  if (!lad.holds()) {
    o.exit_code = 2;
    o.diagnostic = "filtration: graded pieces disagree with the product formula";
  }
  return o;
}

inline Outcome run_chow(const std::string& table_arg, int p, int dim_ma,
                        bool graded, bool k_algebraic,
                        const std::string& artin_arg, const Common&) {
  Outcome o;
  HodgeTable table;
  if (std::ifstream f(table_arg); f) {
    std::ostringstream buf;
    buf << f.rdbuf();
    std::string label = table_arg;
    if (size_t slash = label.find_last_of('/'); slash != std::string::npos)
      label = label.substr(slash + 1);
    if (size_t dot = label.find_last_of('.'); dot != std::string::npos)
      label = label.substr(0, dot);
    table = parse_hodge_table(buf.str(), label);
  } else {
    table = builtin_table(table_arg);
  }
  ArtinSpec spec{dim_ma, graded, k_algebraic};
  if (!artin_arg.empty()) {
    auto a = load_rational_algebra(artin_arg, "chow");
    spec = artin_spec(a, k_algebraic);
  }
  auto rep = formal_chow_dim(table, p, spec);
  o.doc["table"] = table.label;
  o.doc["variety_dim"] = table.d;
  o.doc["p"] = rep.p;
  o.doc["dim_m"] = spec.dim_m;
  o.doc["graded"] = spec.graded;
  o.doc["k_algebraic_over_q"] = spec.k_algebraic_over_q;
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"q", e.q}, {"i", e.i}, {"observed", e.observed}});
  o.doc["vanishing_entries"] = entries;
  o.doc["satisfied"] = rep.satisfied;
  if (rep.dim_formal_chow) o.doc["dim_formal_chow"] = *rep.dim_formal_chow;
  o.doc["pro_representability"] = rep.prorep;
  if (!rep.case_used.empty()) o.doc["case_used"] = rep.case_used;
  if (!rep.reason.empty()) o.doc["reason"] = rep.reason;
  std::ostringstream t;
  t << "Formal deformation space of codimension-" << o.doc["p"].get<int>()
    << " cycles, table " << table.label << " (dim "
    << o.doc["variety_dim"].get<int>() << "), dim m = "
    << o.doc["dim_m"].get<int>() << ":\n";
  for (const auto& e : o.doc["vanishing_entries"])
    t << "  h[" << e["q"].get<int>() << "][" << e["i"].get<int>()
      << "] = " << e["observed"].get<int>() << "\n";
  t << "  vanishing condition: "
    << (o.doc["satisfied"].get<bool>() ? "satisfied" : "violated") << "\n";
  if (o.doc.contains("dim_formal_chow"))
    t << "  dimension: " << o.doc["dim_formal_chow"].get<long long>() << "\n  "
      << o.doc["pro_representability"].get<std::string>() << "\n  via "
      << o.doc["case_used"].get<std::string>() << "\n";
  else
    t << "  dimension: not determined\n  "
      << o.doc["reason"].get<std::string>() << "\n";
  o.text = t.str();
  return o;
}

// --- driver ---------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App cli{"exact computations in cyclic and Hochschild homology"};
  cli.require_subcommand(1);

  Common common;
  std::string algebra, base, artin, theory = "hh";
  std::string table, vars = "x,y", var_weights;
  int max_degree = 4, degree = 0, form_degree = 1, weight = 0, p = 1;
  int dim_ma = 1, truncation = -1;
  std::optional<int> opt_weight, opt_eigen;
  bool graded = false, k_algebraic = false;

  auto* hh = cli.add_subcommand("hh", "Hochschild homology dimensions");
  hh->add_option("--algebra", algebra, "builtin name or .alg file")->required();
  hh->add_option("--max-degree", max_degree)->capture_default_str();
  hh->add_option("--weight", opt_weight, "restrict to one total weight");
  add_common(hh, common);

  auto* hc = cli.add_subcommand("hc", "cyclic homology dimensions");
  hc->add_option("--algebra", algebra)->required();
  hc->add_option("--max-degree", max_degree)->capture_default_str();
  hc->add_option("--weight", opt_weight);
  add_common(hc, common);

  auto* sbi = cli.add_subcommand("sbi", "periodicity sequence exactness");
  sbi->add_option("--algebra", algebra)->required();
  sbi->add_option("--max-degree", max_degree)->capture_default_str();
  sbi->add_option("--eigen", opt_eigen, "refine to one eigenspace piece");
  add_common(sbi, common);

  auto* hd = cli.add_subcommand("hodge-decomp", "eigenspace piece dimensions");
  hd->add_option("--algebra", algebra)->required();
  hd->add_option("--degree", degree)->required();
  hd->add_option("--theory", theory)->check(CLI::IsMember({"hh", "hc"}));
  add_common(hd, common);

  auto* rel = cli.add_subcommand("relative", "reduced homology of a tensor pair");
  rel->add_option("--base", base)->required();
  rel->add_option("--artin", artin)->required();
  rel->add_option("--degree", degree)->required();
  rel->add_option("--eigen", opt_eigen);
  rel->add_option("--theory", theory)->check(CLI::IsMember({"hh", "hc"}));
  add_common(rel, common);

  auto* gw = cli.add_subcommand("goodwillie", "top-piece splitting check");
  gw->add_option("--base", base)->required();
  gw->add_option("--artin", artin)->required();
  gw->add_option("--degree", degree)->required();
  add_common(gw, common);

  auto* dr = cli.add_subcommand("derham", "de Rham cohomology dimensions");
  dr->add_option("--algebra", algebra)->required();
  dr->add_option("--max-degree", max_degree)->capture_default_str();
  add_common(dr, common);

  auto* hkr = cli.add_subcommand("hkr", "chains-to-forms comparison on a slice");
  hkr->add_option("--degree", degree)->required();
  hkr->add_option("--weight", weight)->required();
  hkr->add_option("--vars", vars)->capture_default_str();
  hkr->add_option("--var-weights", var_weights,
                  "comma list, defaults to all ones");
  hkr->add_option("--truncation", truncation,
                  "slice truncation weight (default: --weight)");
  add_common(hkr, common);

  auto* fil = cli.add_subcommand("filtration", "coefficient filtration of forms");
  fil->add_option("--base", base)->required();
  fil->add_option("--artin", artin)->required();
  fil->add_option("--form-degree", form_degree)->capture_default_str();
  add_common(fil, common);

  auto* chow = cli.add_subcommand("chow", "vanishing scan and deformation dimension");
  chow->add_option("--table", table, "builtin table name or file")->required();
  chow->add_option("--p", p, "codimension")->required();
  chow->add_option("--dim-ma", dim_ma, "dimension of the maximal ideal")
      ->capture_default_str();
  chow->add_flag("--graded", graded, "coefficient algebra is graded");
  chow->add_flag("--k-algebraic", k_algebraic,
                 "ground field is algebraic over the rationals");
  chow->add_option("--artin", artin,
                   "derive dim and gradedness from an algebra instead");
  add_common(chow, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = cli.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    set_thread_count(common.threads);
    if (var_weights.empty()) {
      var_weights.clear();
      for (size_t i = 0, n = cychom::detail::split(vars, ',').size(); i < n; ++i)
        var_weights += (i ? ",1" : "1");
    }

    Outcome o;
    if (*hh) o = run_hh(algebra, max_degree, opt_weight, common);
    else if (*hc) o = run_hc(algebra, max_degree, opt_weight, common);
    else if (*sbi) o = run_sbi(algebra, max_degree, opt_eigen, common);
    else if (*hd) o = run_hodge_decomp(algebra, degree, theory, common);
    else if (*rel) o = run_relative(base, artin, degree, opt_eigen, theory, common);
    else if (*gw) o = run_goodwillie(base, artin, degree, common);
    else if (*dr) o = run_derham(algebra, max_degree, common);
    else if (*hkr) o = run_hkr(degree, weight, vars, var_weights, truncation, common);
    else if (*fil) o = run_filtration(base, artin, form_degree, common);
    else o = run_chow(table, p, dim_ma, graded, k_algebraic, artin, common);

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = cli.get_subcommands().front()->get_name();
    doc["seed"] = common.seed;
    doc["threads"] = common.threads;
    doc.update(o.doc);
    if (common.format == "text")
      out << o.text;
    else
      out << doc.dump(2) << "\n";
    if (o.exit_code != 0) err << o.diagnostic << "\n";
    return o.exit_code;
  } catch (const verdict_error& e) {
    err << "verdict failure: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace cychom::app

#endif

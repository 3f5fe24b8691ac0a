#ifndef CYCHOM_ALGEBRA_IO_HPP
#define CYCHOM_ALGEBRA_IO_HPP

// Line-oriented algebra descriptions:
//
//   field: Q | Q(t)
//   generators: x:1, y:1        (name:weight; may be empty)
//   relations: x^3, x^2*y       (monomials in the generators; may be empty)
//   graded: true | false
//
// '#' starts a comment.  The same parser backs files and builtin fixtures.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <cychom/algebra.hpp>
#include <cychom/errors.hpp>

namespace cychom {

struct AlgebraDescription {
  std::string name;
  std::string field = "Q";
  std::vector<std::string> gen_names;
  std::vector<int> gen_weights;
  std::vector<std::vector<int>> relations;
  bool graded = true;
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  out.push_back(cur);
  return out;
}

inline int parse_positive_int(const std::string& s, const std::string& what) {
  if (s.empty()) throw parse_error(what + ": empty number");
  for (char c : s)
    if (c < '0' || c > '9')
      throw parse_error(what + ": bad number '" + s + "'");
  long v = std::stol(s);
  if (v < 1 || v > 1000000) throw parse_error(what + ": out of range '" + s + "'");
  return static_cast<int>(v);
}

// "x^2*y" against the declared generator list
inline std::vector<int> parse_monomial(const std::string& text,
                                       const std::vector<std::string>& gens) {
  std::vector<int> e(gens.size(), 0);
  for (const auto& tok_raw : split(text, '*')) {
    std::string tok = trim(tok_raw);
    if (tok.empty()) throw parse_error("monomial: empty factor in '" + text + "'");
    std::string name = tok;
    int exp = 1;
    if (size_t caret = tok.find('^'); caret != std::string::npos) {
      name = trim(tok.substr(0, caret));
      exp = parse_positive_int(trim(tok.substr(caret + 1)), "monomial exponent");
    }
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end())
      throw parse_error("monomial: unknown generator '" + name + "' in '" +
                        text + "'");
    e[static_cast<size_t>(it - gens.begin())] += exp;
  }
  return e;
}

} // namespace detail

inline AlgebraDescription parse_algebra_text(const std::string& text,
                                             const std::string& name) {
  AlgebraDescription d;
  d.name = name;
  bool saw_field = false, saw_gens = false;
  std::vector<std::string> relation_texts;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw parse_error("algebra description: expected 'key: value', got '" +
                        line + "'");
    std::string key = detail::trim(line.substr(0, colon));
    std::string value = detail::trim(line.substr(colon + 1));
    if (key == "field") {
      if (value != "Q" && value != "Q(t)")
        throw parse_error("algebra description: field must be Q or Q(t), got '" +
                          value + "'");
      d.field = value;
      saw_field = true;
    } else if (key == "generators") {
      saw_gens = true;
      if (value.empty()) continue;
      for (const auto& g_raw : detail::split(value, ',')) {
        std::string g = detail::trim(g_raw);
        if (g.empty())
          throw parse_error("algebra description: empty generator entry");
        std::string nm = g;
        int w = 1;
        if (size_t c2 = g.find(':'); c2 != std::string::npos) {
          nm = detail::trim(g.substr(0, c2));
          w = detail::parse_positive_int(detail::trim(g.substr(c2 + 1)),
                                         "generator weight");
        }
        if (nm.empty())
          throw parse_error("algebra description: generator with empty name");
        d.gen_names.push_back(nm);
        d.gen_weights.push_back(w);
      }
    } else if (key == "relations") {
      if (value.empty()) continue;
      for (const auto& r_raw : detail::split(value, ',')) {
        std::string r = detail::trim(r_raw);
        if (!r.empty()) relation_texts.push_back(r);
      }
    } else if (key == "graded") {
      if (value == "true")
        d.graded = true;
      else if (value == "false")
        d.graded = false;
      else
        throw parse_error("algebra description: graded must be true or false");
    } else {
      throw parse_error("algebra description: unknown key '" + key + "'");
    }
  }
  if (!saw_field)
    throw parse_error("algebra description: missing 'field:' line");
  if (!saw_gens)
    throw parse_error("algebra description: missing 'generators:' line");
  for (const auto& r : relation_texts)
    d.relations.push_back(detail::parse_monomial(r, d.gen_names));
  return d;
}

inline AlgebraDescription load_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  std::string name = path;
  if (size_t slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (size_t dot = name.find_last_of('.'); dot != std::string::npos)
    name = name.substr(0, dot);
  return parse_algebra_text(buf.str(), name);
}

template <Field F>
FinCommAlgebra<F> build_algebra(const AlgebraDescription& d) {
  if (d.field != field_label_of<F>())
    throw field_mismatch("build_algebra: description over " + d.field +
                         ", requested " + field_label_of<F>());
  if (d.gen_names.empty()) {
    auto a = scalar_algebra<F>(d.name);
    a.graded = d.graded;
    return a;
  }
  return make_truncated_poly<F>(d.name, d.gen_names, d.gen_weights,
                                d.relations, d.graded);
}

// Bundled test algebras, addressable by name from the command line and tests.
inline std::optional<AlgebraDescription> builtin_algebra(
    const std::string& name) {
  auto make = [&](const char* text) {
    return parse_algebra_text(text, name);
  };
  if (name == "Q" || name == "q")
    return make("field: Q\ngenerators:\ngraded: true\n");
  if (name == "dual_numbers")
    return make("field: Q\ngenerators: e:1\nrelations: e^2\ngraded: true\n");
  if (name == "qx3")
    return make("field: Q\ngenerators: x:1\nrelations: x^3\ngraded: true\n");
  if (name == "qxy_m3")
    return make(
        "field: Q\ngenerators: x:1, y:1\n"
        "relations: x^3, x^2*y, x*y^2, y^3\ngraded: true\n");
  if (name == "qt_dual")
    return make("field: Q(t)\ngenerators: e:1\nrelations: e^2\ngraded: true\n");
  return std::nullopt;
}

inline std::vector<std::string> builtin_algebra_names() {
  return {"Q", "dual_numbers", "qx3", "qxy_m3", "qt_dual"};
}

} // namespace cychom

#endif

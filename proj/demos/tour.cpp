// A walk through the library on the dual numbers Q[e]/(e^2): both homology
// theories, the eigenspace ladder, the periodicity sequence, the reduced
// invariants of an augmented pair, and the forms side of the same story.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <cychom/algebra_io.hpp>
#include <cychom/cyclic.hpp>
#include <cychom/hochschild.hpp>
#include <cychom/hodge.hpp>
#include <cychom/kaehler.hpp>
#include <cychom/relative.hpp>
#include <cychom/sbi.hpp>

using namespace cychom;

namespace {

std::string show(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

} // namespace

int main() {
  auto a = build_algebra<Rational>(*builtin_algebra("dual_numbers"));
  std::printf("algebra: %s, dim %d\n", a.name.c_str(), a.dim());

  auto hh = hochschild_dims(a, 4);
  auto hc = cyclic_dims(a, 4);
  std::printf("Hochschild dims 0..4:  %s\n", show(hh).c_str());
  std::printf("cyclic dims 0..4:      %s  (two routes, compared internally)\n",
              show(hc).c_str());

  std::printf("eigenspace pieces of HH_n:\n");
  for (int n = 1; n <= 3; ++n) {
    auto pieces = hodge_homology_dims(a, n, Theory::hh);
    std::printf("  degree %d: %s\n", n, show(pieces).c_str());
  }

  auto w = sbi_sequence(a, 3);
  std::printf("periodicity sequence through degree 3: %s (%zu nodes)\n",
              w.exact() ? "exact" : "NOT EXACT", w.nodes.size());

  auto pair = augmented_pair(build_algebra<Rational>(*builtin_algebra("Q")), a);
  std::printf("reduced cyclic dims over the base Q:  ");
  std::vector<int> reduced;
  for (int n = 0; n <= 4; ++n)
    reduced.push_back(
        relative_homology(pair, n, std::nullopt, Theory::hc).relative_dim);
  std::printf("%s\n", show(reduced).c_str());

  for (int n = 1; n <= 2; ++n) {
    auto good = goodwillie_splitting_check(pair, n);
    std::printf("degree-%d top-piece splitting: %d = %d + %d (%s)\n", n,
                good.hh_top, good.hc_prev, good.hc_top,
                good.holds() ? "holds" : "fails");
  }

  auto omega = kaehler(a, 1);
  std::printf("one-forms: dim %d, matching HH_1 = %d\n", omega.dim(), hh[1]);
  std::printf("%s\n", hodge_ladder_note().c_str());
  return 0;
}

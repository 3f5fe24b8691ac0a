#ifndef CYCHOM_TESTS_ORACLES_HPP
#define CYCHOM_TESTS_ORACLES_HPP

/*
 * Reference implementations used only by the test suite.  Each one is
 * deliberately written from the textbook definition, independent of the
 * library code paths it is used to check, so that an agreement between the
 * two is actual evidence.  Slow is fine here.
 */

#include <vector>

#include <cychom/rational.hpp>

namespace oracles {

using cychom::Rational;

// Plain dense Gaussian elimination with field division, first nonzero pivot,
// no sparsity or pivoting heuristics.  Reference for matrix rank.
inline int dense_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t lead_row = 0;
  for (size_t j = 0; j < cols && lead_row < rows; ++j) {
    size_t p = lead_row;
    while (p < rows && a[p][j].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[lead_row]);
    for (size_t i = lead_row + 1; i < rows; ++i) {
      if (a[i][j].is_zero()) continue;
      Rational f = a[i][j] / a[lead_row][j];
      for (size_t k = j; k < cols; ++k) a[i][k] -= f * a[lead_row][k];
    }
    ++lead_row;
    ++rank;
  }
  return rank;
}

// Hochschild homology of k[x]/(x^N) from the two-periodic free bimodule
// resolution: after tensoring down, the complex is
//   A <-0- A <-N x^(N-1)- A <-0- A <- ...
// so dim HH_0 = N and dim HH_n = N - 1 for every n >= 1 (char 0).
inline int truncated_poly_hh_dim(int N, int n) {
  return n == 0 ? N : N - 1;
}

} // namespace oracles

#endif

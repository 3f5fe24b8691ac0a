#ifndef CYCHOM_HOCHSCHILD_HPP
#define CYCHOM_HOCHSCHILD_HPP

// Hochschild homology of a finite-dimensional commutative algebra: homology
// of the tensor-power complex under the boundary with the cyclic term.

#include <vector>

#include <cychom/algebra.hpp>
#include <cychom/bar_complex.hpp>
#include <cychom/linalg.hpp>

namespace cychom {

// dims of HH_0 .. HH_max_degree
inline std::vector<int> hochschild_dims(const FinCommAlgebra<Rational>& a,
                                        int max_degree,
                                        long budget = kDefaultTupleBudget) {
  ComplexSpec spec;
  spec.alg = &a;
  ChainSpaces cs(spec, max_degree + 1, budget);
  std::vector<int> dims;
  for (int n = 0; n <= max_degree; ++n)
    dims.push_back(chain_homology_dim(cs, n));
  return dims;
}

// homology with chosen representatives and coordinates, for chasing maps
inline HomologySpace<Rational> hochschild_space(ChainSpaces& cs, int n) {
  return homology_space(cs.b(n + 1), cs.b(n));
}

} // namespace cychom

#endif

#include <catch2/catch_amalgamated.hpp>

#include <cychom/algebra_io.hpp>
#include <cychom/bar_complex.hpp>

#include "oracles.hpp"

using namespace cychom;

namespace {

FinCommAlgebra<Rational> builtin(const std::string& name) {
  return build_algebra<Rational>(*builtin_algebra(name));
}

ChainSpaces full_spaces(const FinCommAlgebra<Rational>& a, int n_max) {
  ComplexSpec spec;
  spec.alg = &a;
  return ChainSpaces(spec, n_max);
}

} // namespace

TEST_CASE("chain spaces over the ground field are lines") {
  auto q = scalar_algebra<Rational>();
  auto cs = full_spaces(q, 5);
  for (int n = 0; n <= 5; ++n) REQUIRE(cs.dim(n) == 1);
  // the boundary alternates: zero in odd degrees, identity in even
  for (int n = 1; n <= 5; ++n) {
    if (n % 2 == 1)
      REQUIRE(cs.b(n).is_zero_matrix());
    else
      REQUIRE(cs.b(n) == SparseMatrix<Rational>::identity(1));
  }
}

TEST_CASE("boundary squares to zero and the classical operator identities hold") {
  for (const char* name : {"dual_numbers", "qx3"}) {
    auto a = builtin(name);
    auto cs = full_spaces(a, 5);
    for (int n = 2; n <= 5; ++n) {
      REQUIRE((cs.b(n - 1) * cs.b(n)).is_zero_matrix());
      REQUIRE((cs.bprime(n - 1) * cs.bprime(n)).is_zero_matrix());
    }
    for (int n = 1; n <= 4; ++n) {
      auto id_n = SparseMatrix<Rational>::identity(cs.dim(n));
      auto id_n1 = SparseMatrix<Rational>::identity(cs.dim(n + 1));
      // b(1-t) = (1-t)b'
      REQUIRE(cs.b(n) * (id_n - cs.t(n)) ==
              (SparseMatrix<Rational>::identity(cs.dim(n - 1)) - cs.t(n - 1)) *
                  cs.bprime(n));
      // b'N = Nb
      REQUIRE(cs.bprime(n) * cs.N(n) == cs.N(n - 1) * cs.b(n));
      // s is a contracting homotopy for b': b's + sb' = 1
      REQUIRE(cs.bprime(n + 1) * cs.s(n) + cs.s(n - 1) * cs.bprime(n) == id_n);
      // B = (1-t)sN, and the direct assembly agrees with the composite
      REQUIRE(cs.B(n) == (id_n1 - cs.t(n + 1)) * cs.s(n) * cs.N(n));
    }
    for (int n = 1; n <= 3; ++n) {
      // B^2 = 0 and bB + Bb = 0
      REQUIRE((cs.B(n + 1) * cs.B(n)).is_zero_matrix());
      REQUIRE((cs.b(n + 1) * cs.B(n) + cs.B(n - 1) * cs.b(n)).is_zero_matrix());
    }
  }
}

TEST_CASE("the signed cyclic operator has the right order and splitting") {
  auto a = builtin("dual_numbers");
  auto cs = full_spaces(a, 4);
  for (int n = 1; n <= 4; ++n) {
    // t^{n+1} = id including signs
    auto p = cs.t(n);
    for (int i = 0; i < n; ++i) p = p * cs.t(n);
    REQUIRE(p == SparseMatrix<Rational>::identity(cs.dim(n)));
    // in characteristic zero the cyclic action splits the space:
    // ker(1-t) ⊕ im(1-t) with N the projector onto invariants scaled by n+1
    auto id = SparseMatrix<Rational>::identity(cs.dim(n));
    REQUIRE(rank(id - cs.t(n)) + rank(cs.N(n)) == cs.dim(n));
    REQUIRE((cs.N(n) * (id - cs.t(n))).is_zero_matrix());
    REQUIRE(((id - cs.t(n)) * cs.N(n)).is_zero_matrix());
  }
}

TEST_CASE("rank-nullity across the degree-1 operators of the dual numbers") {
  auto a = builtin("dual_numbers");
  auto cs = full_spaces(a, 2);
  // commutativity makes b vanish on degree 1
  REQUIRE(cs.b(1).is_zero_matrix());
  REQUIRE(kernel_basis(cs.b(1)).size() == 4);
  // b' is the multiplication map, rank 2
  REQUIRE(rank(cs.bprime(1)) == 2);
  REQUIRE(kernel_basis(cs.bprime(1)).size() == 2);
  // the norm operator has rank 1: kernel of dimension 3 in ambient 4
  REQUIRE(rank(cs.N(1)) == 1);
  REQUIRE(kernel_basis(cs.N(1)).size() == 3);
  auto id = SparseMatrix<Rational>::identity(4);
  REQUIRE(rank(id - cs.t(1)) == 3);
  for (const auto& m : {cs.N(1), cs.bprime(1)})
    REQUIRE(rank(m) + static_cast<int>(kernel_basis(m).size()) == 4);
}

TEST_CASE("degeneracies are killed by the normalized quotient operators") {
  auto a = builtin("qx3");
  ComplexSpec spec;
  spec.alg = &a;
  spec.variant = Variant::normalized;
  ChainSpaces norm(spec, 4);
  // dim A ⊗ Abar^{⊗n} = 3 * 2^n
  for (int n = 0; n <= 4; ++n) REQUIRE(norm.dim(n) == 3 * (1 << n));
  for (int n = 2; n <= 4; ++n)
    REQUIRE((norm.b(n - 1) * norm.b(n)).is_zero_matrix());
  for (int n = 1; n <= 2; ++n) {
    REQUIRE((norm.B(n + 1) * norm.B(n)).is_zero_matrix());
    REQUIRE(
        (norm.b(n + 1) * norm.B(n) + norm.B(n - 1) * norm.b(n)).is_zero_matrix());
  }
  // the cyclic operator does not descend here
  REQUIRE_THROWS_AS(norm.t(1), input_error);
  REQUIRE_THROWS_AS(norm.N(1), input_error);
  REQUIRE_THROWS_AS(norm.s(1), input_error);
}

TEST_CASE("normalized and full complexes have the same homology") {
  for (const char* name : {"dual_numbers", "qx3"}) {
    auto a = builtin(name);
    auto full = full_spaces(a, 5);
    ComplexSpec spec;
    spec.alg = &a;
    spec.variant = Variant::normalized;
    ChainSpaces norm(spec, 5);
    for (int n = 0; n <= 4; ++n)
      REQUIRE(chain_homology_dim(full, n) == chain_homology_dim(norm, n));
  }
}

TEST_CASE("homology dims match the periodic resolution oracle") {
  // k[x]/(x^N) has HH_0 = N and HH_n = N-1 in every positive degree
  for (int N : {2, 3}) {
    auto a = N == 2 ? builtin("dual_numbers") : builtin("qx3");
    auto cs = full_spaces(a, 5);
    for (int n = 0; n <= 4; ++n)
      REQUIRE(chain_homology_dim(cs, n) == oracles::truncated_poly_hh_dim(N, n));
  }
}

TEST_CASE("weight labels make boundaries block diagonal") {
  auto a = builtin("qxy_m3");
  auto cs = full_spaces(a, 3);
  for (int n = 1; n <= 3; ++n) {
    // rank_blocked would throw if any entry crossed weight blocks
    int blocked =
        rank_blocked(cs.b(n), cs.weight_labels(n - 1), cs.weight_labels(n));
    REQUIRE(blocked == rank(cs.b(n)));
  }
}

TEST_CASE("a fixed-weight block is the matching slice of the full space") {
  auto a = builtin("qxy_m3");
  ComplexSpec blockspec;
  blockspec.alg = &a;
  blockspec.weight = 2;
  ChainSpaces block(blockspec, 3);
  auto cs = full_spaces(a, 3);
  for (int n = 0; n <= 3; ++n) {
    int count = 0;
    for (int w : cs.weight_labels(n))
      if (w == 2) ++count;
    REQUIRE(block.dim(n) == count);
  }
  for (int n = 2; n <= 3; ++n)
    REQUIRE((block.b(n - 1) * block.b(n)).is_zero_matrix());
}

TEST_CASE("relative tuple spaces carry the augmentation kernel") {
  auto q = scalar_algebra<Rational>();
  auto dual = builtin("dual_numbers");
  auto t = tensor(q, dual);
  ComplexSpec spec;
  spec.alg = &t;
  spec.variant = Variant::relative;
  spec.dim_a = dual.dim();
  spec.unit_a = dual.unit_index;
  ChainSpaces rel(spec, 5);
  // tuples over {1, e} with at least one e: 2^{n+1} - 1
  for (int n = 0; n <= 4; ++n) REQUIRE(rel.dim(n) == (1 << (n + 1)) - 1);
  for (int n = 2; n <= 5; ++n)
    REQUIRE((rel.b(n - 1) * rel.b(n)).is_zero_matrix());
  // the cyclic operators stay defined on the relative subcomplex
  for (int n = 1; n <= 3; ++n) {
    auto id = SparseMatrix<Rational>::identity(rel.dim(n));
    REQUIRE(rel.B(n) == (SparseMatrix<Rational>::identity(rel.dim(n + 1)) -
                         rel.t(n + 1)) *
                            rel.s(n) * rel.N(n));
  }
}

TEST_CASE("budgets stop runaway tensor powers") {
  auto a = builtin("qxy_m3");
  ComplexSpec spec;
  spec.alg = &a;
  ChainSpaces cs(spec, 8, 10000);
  REQUIRE_THROWS_AS(cs.space(8), budget_exceeded); // 6^9 is far past 10^4
  REQUIRE_THROWS_AS(cs.space(5), budget_exceeded); // 6^6 = 46656 too
  REQUIRE(cs.dim(4) == 7776);
}

TEST_CASE("degree bounds are enforced") {
  auto a = builtin("dual_numbers");
  auto cs = full_spaces(a, 3);
  REQUIRE_THROWS_AS(cs.space(4), out_of_range);
  REQUIRE_THROWS_AS(cs.B(3), out_of_range);
  REQUIRE_THROWS_AS(chain_homology_dim(cs, 3), out_of_range);
  REQUIRE(chain_homology_dim(cs, 2) >= 0);
}

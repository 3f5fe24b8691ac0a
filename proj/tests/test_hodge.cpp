#include <catch2/catch_amalgamated.hpp>

#include <cychom/algebra_io.hpp>
#include <cychom/hochschild.hpp>
#include <cychom/hodge.hpp>

using namespace cychom;

namespace {

FinCommAlgebra<Rational> builtin(const std::string& name) {
  return build_algebra<Rational>(*builtin_algebra(name));
}

ChainSpaces normalized_spaces(const FinCommAlgebra<Rational>& a, int n_max) {
  ComplexSpec spec;
  spec.alg = &a;
  spec.variant = Variant::normalized;
  return ChainSpaces(spec, n_max);
}

} // namespace

TEST_CASE("one-block shuffles are the identity") {
  auto a = builtin("dual_numbers");
  ComplexSpec spec;
  spec.alg = &a;
  ChainSpaces cs(spec, 4);
  for (int n = 0; n <= 4; ++n)
    REQUIRE(adams_operator(cs, n, 1) ==
            SparseMatrix<Rational>::identity(cs.dim(n)));
}

TEST_CASE("degree-two shuffle element has the textbook form") {
  auto e = adams_element(2, 2);
  REQUIRE(e.size() == 2);
  REQUIRE(e.at({1, 2}) == Rational(3));
  REQUIRE(e.at({2, 1}) == Rational(-1));
}

TEST_CASE("operator composition realizes multiplicativity on chains") {
  auto a = builtin("dual_numbers");
  ComplexSpec spec;
  spec.alg = &a;
  ChainSpaces cs(spec, 3);
  for (int n = 1; n <= 3; ++n)
    REQUIRE(adams_operator(cs, n, 2) * adams_operator(cs, n, 3) ==
            adams_operator(cs, n, 6));
}

TEST_CASE("induced action on first homology is multiplication by m") {
  for (const char* name : {"dual_numbers", "qx3", "qxy_m3"}) {
    auto a = builtin(name);
    ComplexSpec spec;
    spec.alg = &a;
    ChainSpaces cs(spec, 2);
    auto h = hochschild_space(cs, 1);
    REQUIRE(h.dim() >= 1);
    for (int m : {2, 3}) {
      auto psi = adams_operator(cs, 1, m);
      for (size_t r = 0; r < h.reps.size(); ++r) {
        auto c = h.coords(psi.apply(h.reps[r]));
        for (size_t j = 0; j < c.size(); ++j)
          REQUIRE(c[j] == (j == r ? Rational(m) : Rational(0)));
      }
    }
  }
}

TEST_CASE("multiplicativity holds for the induced homology action") {
  auto a = builtin("dual_numbers");
  ComplexSpec spec;
  spec.alg = &a;
  ChainSpaces cs(spec, 4);
  for (int n = 1; n <= 3; ++n) {
    auto h = hochschild_space(cs, n);
    auto via_product = adams_operator(cs, n, 2) * adams_operator(cs, n, 3);
    auto direct = adams_operator(cs, n, 6);
    for (const auto& r : h.reps)
      REQUIRE(h.coords(via_product.apply(r)) == h.coords(direct.apply(r)));
  }
}

TEST_CASE("the eigenvalue ladder pin reports its verdict") {
  REQUIRE(hodge_ladder_note().find("m^i") != std::string::npos);
}

TEST_CASE("interpolated top projector equals the antisymmetrizer") {
  auto a = builtin("qx3");
  auto cs = normalized_spaces(a, 3);
  for (int n = 1; n <= 3; ++n) {
    auto p = hodge_projectors(cs, n);
    auto anti = realize_perm_element(cs.space(n), antisymmetrizer_element(n));
    REQUIRE(p[static_cast<size_t>(n)] == anti);
  }
}

TEST_CASE("projectors are chain maps for the boundary") {
  for (const char* name : {"dual_numbers", "qx3"}) {
    auto a = builtin(name);
    auto cs = normalized_spaces(a, 4);
    std::vector<std::vector<SparseMatrix<Rational>>> p;
    for (int d = 0; d <= 4; ++d) p.push_back(hodge_projectors(cs, d));
    for (int n = 1; n <= 4; ++n)
      for (int i = 1; i <= n; ++i) {
        auto lhs = (i <= n - 1 && n - 1 >= 1
                        ? p[static_cast<size_t>(n) - 1][static_cast<size_t>(i)]
                        : SparseMatrix<Rational>::zero(cs.dim(n - 1),
                                                       cs.dim(n - 1))) *
                   cs.b(n);
        auto rhs = cs.b(n) * p[static_cast<size_t>(n)][static_cast<size_t>(i)];
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("the degeneracy-free B operator raises the piece index by one") {
  for (const char* name : {"dual_numbers", "qx3"}) {
    auto a = builtin(name);
    auto cs = normalized_spaces(a, 4);
    std::vector<std::vector<SparseMatrix<Rational>>> p;
    for (int d = 0; d <= 4; ++d) p.push_back(hodge_projectors(cs, d));
    for (int n = 0; n <= 3; ++n)
      for (int i = (n == 0 ? 0 : 1); i <= n; ++i) {
        auto lhs = cs.B(n) * p[static_cast<size_t>(n)][static_cast<size_t>(i)];
        auto rhs =
            p[static_cast<size_t>(n) + 1][static_cast<size_t>(i) + 1] * cs.B(n);
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("piece dimensions sum to the homology dimension") {
  for (const char* name : {"dual_numbers", "qx3"}) {
    auto a = builtin(name);
    auto hh = hochschild_dims(a, 4);
    auto hc = cyclic_dims(a, 4);
    for (int n = 0; n <= 4; ++n) {
      auto hdims = hodge_homology_dims(a, n, Theory::hh);
      auto cdims = hodge_homology_dims(a, n, Theory::hc);
      int hsum = 0, csum = 0;
      for (int d : hdims) hsum += d;
      for (int d : cdims) csum += d;
      REQUIRE(hsum == hh[static_cast<size_t>(n)]);
      REQUIRE(csum == hc[static_cast<size_t>(n)]);
    }
  }
  auto fat = builtin("qxy_m3");
  auto hh = hochschild_dims(fat, 3);
  auto hc = cyclic_dims(fat, 3);
  for (int n = 0; n <= 3; ++n) {
    auto hdims = hodge_homology_dims(fat, n, Theory::hh);
    auto cdims = hodge_homology_dims(fat, n, Theory::hc);
    int hsum = 0, csum = 0;
    for (int d : hdims) hsum += d;
    for (int d : cdims) csum += d;
    REQUIRE(hsum == hh[static_cast<size_t>(n)]);
    REQUIRE(csum == hc[static_cast<size_t>(n)]);
  }
}

TEST_CASE("top pieces of the dual numbers match their forms") {
  auto a = builtin("dual_numbers");
  // Ω¹ has dimension 1 and Ω^n = 0 for n >= 2 (dε∧dε = 0); the top cyclic
  // piece at degree 1 is Ω¹/dA = 0
  REQUIRE(eigenspace_homology_dim(a, 1, 1, Theory::hh) == 1);
  REQUIRE(eigenspace_homology_dim(a, 2, 2, Theory::hh) == 0);
  REQUIRE(eigenspace_homology_dim(a, 3, 3, Theory::hh) == 0);
  REQUIRE(eigenspace_homology_dim(a, 1, 1, Theory::hc) == 0);
}

TEST_CASE("eigenspace table of the ground field") {
  auto q = scalar_algebra<Rational>();
  for (int two_n = 0; two_n <= 4; two_n += 2) {
    auto dims = hodge_homology_dims(q, two_n, Theory::hc);
    for (int l = 0; l <= two_n; ++l)
      REQUIRE(dims[static_cast<size_t>(l)] == (l == two_n / 2 ? 1 : 0));
  }
  auto odd = hodge_homology_dims(q, 3, Theory::hc);
  for (int d : odd) REQUIRE(d == 0);
}

TEST_CASE("full chain space of the ground field concentrates in one piece") {
  auto q = scalar_algebra<Rational>();
  ComplexSpec spec;
  spec.alg = &q;
  ChainSpaces cs(spec, 3);
  for (int n = 1; n <= 3; ++n) {
    auto p = hodge_projectors(cs, n);
    int fixing = 0;
    for (int i = 1; i <= n; ++i) {
      if (p[static_cast<size_t>(i)] ==
          SparseMatrix<Rational>::identity(cs.dim(n)))
        ++fixing;
      else
        REQUIRE(p[static_cast<size_t>(i)].is_zero_matrix());
    }
    REQUIRE(fixing == 1);
  }
}

TEST_CASE("piece index bounds are enforced") {
  auto a = builtin("dual_numbers");
  REQUIRE_THROWS_AS(eigenspace_homology_dim(a, 2, 3, Theory::hh), out_of_range);
  REQUIRE_THROWS_AS(eigenspace_homology_dim(a, 2, -1, Theory::hc), out_of_range);
}

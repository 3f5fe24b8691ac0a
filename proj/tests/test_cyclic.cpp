#include <catch2/catch_amalgamated.hpp>

#include <cychom/algebra_io.hpp>
#include <cychom/cyclic.hpp>
#include <cychom/hochschild.hpp>

using namespace cychom;

namespace {

FinCommAlgebra<Rational> builtin(const std::string& name) {
  return build_algebra<Rational>(*builtin_algebra(name));
}

// Goodwillie recursion: over a field of characteristic zero the reduced
// cyclic homology of a nilpotent augmentation ideal has vanishing S map, so
// dim HH_n(A) = dim HCbar_{n-1}(A) + dim HCbar_n(A) for n >= 1, where
// HCbar_n = HC_n(A) - HC_n(Q).  An independent consistency relation between
// the two engines.
void check_recursion(const std::vector<int>& hh, const std::vector<int>& hc) {
  auto reduced = [&](int n) { return hc[n] - (n % 2 == 0 ? 1 : 0); };
  for (size_t n = 1; n < hh.size() && n < hc.size(); ++n)
    REQUIRE(hh[n] == reduced(static_cast<int>(n) - 1) +
                         reduced(static_cast<int>(n)));
}

} // namespace

TEST_CASE("cyclic homology of the ground field is periodic") {
  auto q = scalar_algebra<Rational>();
  REQUIRE(cyclic_dims(q, 4) == std::vector<int>{1, 0, 1, 0, 1});
}

TEST_CASE("degree zero cyclic homology recovers the algebra") {
  for (const char* name : {"Q", "dual_numbers", "qx3", "qxy_m3"}) {
    auto a = builtin(name);
    REQUIRE(cyclic_dims(a, 0)[0] == a.dim());
  }
}

TEST_CASE("truncated polynomial lines, both routes agreeing") {
  REQUIRE(cyclic_dims(builtin("dual_numbers"), 4) ==
          std::vector<int>{2, 0, 2, 0, 2});
  REQUIRE(cyclic_dims(builtin("qx3"), 4) == std::vector<int>{3, 0, 3, 0, 3});
}

TEST_CASE("recursion ties Hochschild to cyclic dimensions") {
  for (const char* name : {"dual_numbers", "qx3"}) {
    auto a = builtin(name);
    check_recursion(hochschild_dims(a, 4), cyclic_dims(a, 4));
  }
  auto fat = builtin("qxy_m3");
  auto hh = hochschild_dims(fat, 3);
  auto hc = cyclic_dims(fat, 3);
  REQUIRE(hc[0] == 6);
  REQUIRE(hc[1] == 3);
  check_recursion(hh, hc);
}

TEST_CASE("total differentials square to zero") {
  for (const char* name : {"dual_numbers", "qx3"}) {
    auto a = builtin(name);
    ComplexSpec spec;
    spec.alg = &a;
    ChainSpaces cs(spec, 5);
    CyclicTotal tot(cs);
    for (int n = 1; n <= 4; ++n)
      REQUIRE((tot.D(n) * tot.D(n + 1)).is_zero_matrix());

    ComplexSpec nspec = spec;
    nspec.variant = Variant::normalized;
    ChainSpaces ncs(nspec, 5);
    MixedTotal mixed(ncs);
    for (int n = 1; n <= 4; ++n)
      REQUIRE((mixed.D(n) * mixed.D(n + 1)).is_zero_matrix());
  }
}

TEST_CASE("weight blocking does not change total homology") {
  auto a = builtin("dual_numbers");
  ComplexSpec spec;
  spec.alg = &a;
  ChainSpaces cs(spec, 4);
  CyclicTotal tot(cs);
  for (int n = 0; n <= 3; ++n) {
    int plain = homology_dim(tot.D(n + 1), tot.D(n));
    REQUIRE(cyclic_total_dim(tot, n) == plain);
  }
}

TEST_CASE("relative variant computes the reduced theory") {
  auto q = scalar_algebra<Rational>("Q");
  auto dual = builtin("dual_numbers");
  auto t = tensor(q, dual);
  ComplexSpec spec;
  spec.alg = &t;
  spec.variant = Variant::relative;
  spec.dim_a = dual.dim();
  spec.unit_a = dual.unit_index;
  REQUIRE(cyclic_dims_for_spec(spec, 4) == std::vector<int>{1, 0, 1, 0, 1});
}

TEST_CASE("variant and range misuse is rejected") {
  auto a = builtin("dual_numbers");
  ComplexSpec spec;
  spec.alg = &a;
  spec.variant = Variant::normalized;
  REQUIRE_THROWS_AS(cyclic_dims_for_spec(spec, 2), input_error);

  ChainSpaces ncs(spec, 3);
  REQUIRE_THROWS_AS(CyclicTotal(ncs), input_error);

  ComplexSpec full;
  full.alg = &a;
  ChainSpaces cs(full, 3);
  CyclicTotal tot(cs);
  REQUIRE_THROWS_AS(tot.D(4), out_of_range);
  MixedTotal mixed(ncs);
  REQUIRE_THROWS_AS(mixed.D(4), out_of_range);
}

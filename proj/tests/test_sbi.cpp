#include <catch2/catch_amalgamated.hpp>

#include <cychom/algebra_io.hpp>
#include <cychom/hochschild.hpp>
#include <cychom/sbi.hpp>

using namespace cychom;

namespace {

FinCommAlgebra<Rational> builtin(const std::string& name) {
  return build_algebra<Rational>(*builtin_algebra(name));
}

const SBINode& node_at(const SBIWitness& w, const std::string& label) {
  for (const auto& n : w.nodes)
    if (n.label == label) return n;
  FAIL("no node labeled " + label);
  throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("the ground field sequence alternates and S is an isomorphism") {
  auto w = sbi_sequence(builtin("Q"), 4);
  REQUIRE(w.exact());
  REQUIRE(w.hh_dims == std::vector<int>{1, 0, 0, 0, 0});
  REQUIRE(w.hc_dims == std::vector<int>{1, 0, 1, 0, 1});
  // S: HC_4 -> HC_2 and HC_2 -> HC_0 have full rank one
  for (int m : {0, 2}) {
    const auto& n = node_at(w, "HC_" + std::to_string(m) + " (after S)");
    REQUIRE(n.dim_mid == 1);
    REQUIRE(n.rank_in == 1);
  }
}

TEST_CASE("every node is exact for the small test algebras") {
  for (const char* name : {"dual_numbers", "qx3"}) {
    auto a = builtin(name);
    auto w = sbi_sequence(a, 4);
    REQUIRE(w.exact());
    REQUIRE(w.nodes.size() == 15);
    // the homology dims agree with the two standalone engines, which route
    // through the full (non-normalized) complexes
    REQUIRE(w.hh_dims == hochschild_dims(a, 4));
    REQUIRE(w.hc_dims == cyclic_dims(a, 4));
  }
}

TEST_CASE("the connecting map reaches every one-form class") {
  auto w = sbi_sequence(builtin("dual_numbers"), 2);
  const auto& n = node_at(w, "HH_1 (after B)");
  REQUIRE(n.dim_mid == 1);
  REQUIRE(n.rank_in == 1); // B: HC_0 -> HH_1 is onto, I: HH_1 -> HC_1 = 0
  REQUIRE(n.rank_out == 0);
}

TEST_CASE("eigenspace ladders of the ground field stay exact") {
  auto q = builtin("Q");
  for (int l : {1, 2}) {
    auto w = sbi_sequence(q, 4, l);
    REQUIRE(w.pieces_respected);
    REQUIRE(w.exact());
  }
}

TEST_CASE("eigenspace refinement is exact on the test algebras") {
  auto dual = builtin("dual_numbers");
  for (int l : {1, 2}) {
    auto w = sbi_sequence(dual, 3, l);
    REQUIRE(w.pieces_respected);
    REQUIRE(w.exact());
    for (const auto& n : w.nodes)
      if (n.label.rfind("HH", 0) == 0) REQUIRE(n.piece == l);
  }
  auto w = sbi_sequence(builtin("qx3"), 2, 1);
  REQUIRE(w.exact());
}

TEST_CASE("eigenspace node dimensions match the projector engine") {
  auto dual = builtin("dual_numbers");
  auto w = sbi_sequence(dual, 3, 1);
  for (int m = 0; m <= 3; ++m) {
    const auto& hh_node =
        node_at(w, "HH^(1)_" + std::to_string(m) + " (after B)");
    int expect = m == 0 ? 0 : eigenspace_homology_dim(dual, m, 1, Theory::hh);
    REQUIRE(hh_node.dim_mid == expect);
    const auto& hc_node =
        node_at(w, "HC^(1)_" + std::to_string(m) + " (after I)");
    int expect_hc =
        m == 0 ? 0 : eigenspace_homology_dim(dual, m, 1, Theory::hc);
    REQUIRE(hc_node.dim_mid == expect_hc);
  }
}

TEST_CASE("a tampered witness fails loudly") {
  SBIWitness w;
  SBINode bad;
  bad.label = "HC_1 (after I)";
  bad.dim_mid = 2;
  bad.rank_in = 0;
  bad.rank_out = 1;
  bad.composite_zero = true;
  w.nodes.push_back(bad);
  REQUIRE_FALSE(w.exact());
  REQUIRE_THROWS_AS(w.require_exact(), exactness_failure);
  w.nodes.clear();
  w.pieces_respected = false;
  REQUIRE_THROWS_AS(w.require_exact(), exactness_failure);
}

TEST_CASE("sequence misuse is rejected") {
  auto q = builtin("Q");
  REQUIRE_THROWS_AS(sbi_sequence(q, -1), out_of_range);
  REQUIRE_THROWS_AS(sbi_sequence(q, 2, -3), out_of_range);
}

#include <gtest/gtest.h>

#include <random>

#include "support/test_support.hpp"
#include "weakiasi/weakiasi.hpp"

using namespace weakiasi;
using weakiasi::testing::dumb_sparing;

TEST(SparingExact, Examples) {
  auto k4 = sparing_exact(families::complete(4));
  EXPECT_EQ(k4.value, 3u);
  EXPECT_EQ(k4.method, SparingMethod::ExactOracle);

  EXPECT_EQ(sparing_exact(families::cycle(4)).value, 0u);

  const Graph c5 = families::cycle(5);
  auto brute = dumb_sparing(c5);
  auto c5r = sparing_exact(c5);
  EXPECT_EQ(brute.value, 1u);
  EXPECT_EQ(c5r.value, brute.value);
  EXPECT_EQ(c5r.witness.size(), 2u);
  EXPECT_EQ(c5r.witness, brute.witness);
}

TEST(SparingExact, CapacityBound) {
  const Graph big = families::path(25);
  try {
    sparing_exact(big);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.bound(), kDefaultOracleBound);
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
  }
  EXPECT_EQ(sparing_exact(big, 30).value, 0u);
  EXPECT_THROW(sparing_exact(big, 65), InvalidInput);
}

TEST(SparingExact, EmptyAndEdgelessGraphs) {
  EXPECT_EQ(sparing_exact(Graph()).value, 0u);
  auto edgeless = sparing_exact(Graph(3, {}, kAllowIsolated));
  EXPECT_EQ(edgeless.value, 0u);
  EXPECT_TRUE(edgeless.witness.empty());
}

TEST(SparingExact, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 400; ++t) {
    Graph g = weakiasi::testing::random_graph(rng, 1 + rng() % 9, 0.15 + 0.1 * (rng() % 7));
    auto fast = sparing_exact(g);
    auto slow = dumb_sparing(g);
    ASSERT_EQ(fast.value, slow.value);
    ASSERT_EQ(fast.witness, slow.witness);
    ASSERT_EQ(mono_edges_for_witness(g, fast.witness), fast.value);
  }
}

TEST(SparingExact, MonotoneUnderEdgeChanges) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + rng() % 7;
    Graph g = weakiasi::testing::random_graph(rng, n, 0.4);
    const std::size_t base = sparing_exact(g).value;
    Vertex a = rng() % n, b = rng() % n;
    if (a == b) continue;
    if (g.adjacent(a, b)) {
      EXPECT_LE(sparing_exact(without_edge(g, Edge(a, b))).value, base);
    } else {
      EXPECT_GE(sparing_exact(with_edge(g, Edge(a, b))).value, base);
    }
  }
}

TEST(SparingExact, CompleteGraphs) {
  for (std::size_t n = 3; n <= 12; ++n) {
    EXPECT_EQ(sparing_exact(families::complete(n)).value, sparing_formula_complete(n)) << n;
  }
}

TEST(SparingExact, WitnessLabelingRealisesTheValue) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    Graph g = weakiasi::testing::random_graph(rng, 2 + rng() % 10, 0.4);
    auto best = sparing_exact(g);
    Labeling l = assign_concrete_sets(g, plan_from_witness(g, best.witness));
    auto report = verify_weak_iasi(g, l);
    ASSERT_TRUE(report.passed);
    ASSERT_EQ(report.stats.mono_edge_count(), best.value);
  }
}

TEST(Formulas, Complete) {
  EXPECT_EQ(sparing_formula_complete(4), 3u);
  EXPECT_EQ(sparing_formula_complete(2), 0u);
  EXPECT_EQ(sparing_formula_complete(1), 0u);
  EXPECT_EQ(sparing_formula_complete(8), 21u);
  EXPECT_EQ(sparing_exact(families::complete(8)).value, 21u);
}

TEST(Formulas, Cycle) {
  EXPECT_EQ(sparing_formula_cycle(6), 0u);
  EXPECT_EQ(sparing_formula_cycle(3), 1u);
  EXPECT_EQ(sparing_formula_cycle(9), 1u);
  EXPECT_EQ(dumb_sparing(families::cycle(9)).value, 1u);
  EXPECT_THROW(sparing_formula_cycle(2), InvalidInput);
}

TEST(Formulas, Corona) {
  EXPECT_EQ(sparing_formula_corona(4, 1, 2, 1), 6u);
  EXPECT_EQ(sparing_formula_corona(5, 3, 0, 7), 15u);
  EXPECT_THROW(sparing_formula_corona(2, 1, 3, 0), InvalidInput);

  // Oracle on the 12-vertex corona C4 (.) K2 sits strictly below the formula.
  const Graph c4k2 = corona(families::cycle(4), families::complete(2)).graph;
  EXPECT_EQ(dumb_sparing(c4k2).value, 4u);
  EXPECT_EQ(sparing_exact(c4k2).value, 4u);
}

TEST(CycleParity, Examples) {
  EXPECT_EQ(cycle_parity_of(5, 2).mono_edges, 1u);
  EXPECT_TRUE(cycle_parity_of(5, 2).odd);
  EXPECT_EQ(cycle_parity_of(4, 1).mono_edges, 2u);
  EXPECT_FALSE(cycle_parity_of(4, 1).odd);
  EXPECT_EQ(cycle_parity_of(4, 2).mono_edges, 0u);
  EXPECT_THROW(cycle_parity_of(5, 3), InvalidInput);
}

TEST(SparingUnion, Examples) {
  const Graph c3 = families::cycle(3), c4 = families::cycle(4), k4 = families::complete(4);
  EXPECT_EQ(sparing_union(c3, c4), 1u);
  EXPECT_EQ(sparing_exact(disjoint_union(c3, c4)).value, 1u);
  EXPECT_EQ(sparing_union(k4, k4), 6u);
  EXPECT_EQ(sparing_exact(disjoint_union(k4, k4)).value, 6u);
  EXPECT_EQ(sparing_union(families::cycle(5), families::complete(2)), sparing_exact(families::cycle(5)).value);
}

TEST(ClosedForm, FamiliesAndWitnesses) {
  for (std::size_t n = 3; n <= 30; ++n) {
    const Graph c = families::cycle(n);
    auto r = sparing_closed_form(c);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->value, n % 2);
    EXPECT_EQ(mono_edges_for_witness(c, r->witness), r->value);
  }
  auto k6 = sparing_closed_form(families::complete(6));
  ASSERT_TRUE(k6);
  EXPECT_EQ(k6->method, SparingMethod::FormulaComplete);
  EXPECT_EQ(k6->value, 10u);
  auto tree = sparing_closed_form(families::star(5));
  ASSERT_TRUE(tree);
  EXPECT_EQ(tree->method, SparingMethod::FormulaBipartite);
  EXPECT_EQ(mono_edges_for_witness(families::star(5), tree->witness), 0u);
  EXPECT_FALSE(sparing_closed_form(corona(families::cycle(3), families::complete(1)).graph));
}

TEST(Witness, RejectsDependentSets) {
  std::vector<Vertex> bad{0, 1};
  EXPECT_THROW(mono_edges_for_witness(families::cycle(4), bad), InvalidInput);
}

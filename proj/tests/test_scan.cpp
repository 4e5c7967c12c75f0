#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cliqueidx/graph_io.hpp"
#include "cliqueidx/oracle.hpp"
#include "cliqueidx/scan.hpp"
#include "test_graphs.hpp"

using namespace cliqueidx;
using namespace cliqueidx::testing;

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_cliques(complete(4), 3), enumerate_cliques(complete(4), 3));
  EXPECT_EQ(brute_force_cliques(complete(4), 3).size(), 4U);
  EXPECT_EQ(brute_force_cliques(diamond(), 3), (std::vector<Clique>{{0, 2, 3}, {1, 2, 3}}));
  EXPECT_EQ(brute_force_cliques(cycle(5), 1).size(), 5U);
  EXPECT_TRUE(brute_force_cliques(cycle(5), 6).empty());
}

TEST(BruteForce, Guard) {
  EXPECT_NO_THROW(brute_force_cliques(Graph(20, {}), 1));
  EXPECT_THROW(brute_force_cliques(Graph(21, {}), 1), GuardError);
}

TEST(AllGraphs, Counts) {
  EXPECT_EQ(all_graphs(3).count(), 8U);
  EXPECT_EQ(all_graphs(4).count(), 64U);
  EXPECT_EQ(all_graphs(5).count(), 1024U);
  EXPECT_EQ(all_graphs(7).count(), std::uint64_t{1} << 21);
  EXPECT_THROW(all_graphs(8), GuardError);
  std::size_t seen = 0;
  for (const Graph& g : all_graphs(3)) {
    EXPECT_EQ(g.order(), 3U);
    ++seen;
  }
  EXPECT_EQ(seen, 8U);
}

TEST(AllGraphs, EachEdgeSetExactlyOnceInMaskOrder) {
  std::set<std::string> names;
  std::uint64_t expected_mask = 0;
  const auto graphs = all_graphs(5);
  for (auto it = graphs.begin(); it != graphs.end(); ++it) {
    EXPECT_EQ(it.mask(), expected_mask++);
    EXPECT_TRUE(names.insert(to_graph6(*it)).second);
  }
  EXPECT_EQ(names.size(), 1024U);
  // Bit i is the i-th pair in column order, as in graph6.
  EXPECT_EQ(graph_from_mask(3, 0b001), Graph(3, {{0, 1}}));
  EXPECT_EQ(graph_from_mask(3, 0b010), Graph(3, {{0, 2}}));
  EXPECT_EQ(graph_from_mask(3, 0b100), Graph(3, {{1, 2}}));
}

TEST(OracleEquivalence, SmallGraphsExhaustive) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (std::size_t k = 1; k <= 4; ++k) {
        const auto cliques = enumerate_cliques(g, k);
        ASSERT_EQ(cliques, brute_force_cliques(g, k));
        for (const auto& q : cliques) {
          ASSERT_EQ(clique_value(g, q), brute_force_value(g, q));
        }
      }
    }
  }
}

TEST(OracleEquivalence, RandomTenVertexGraphs) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(10, 0.5, rng);
    for (std::size_t k = 1; k <= 5; ++k) {
      ASSERT_EQ(enumerate_cliques(g, k), brute_force_cliques(g, k));
    }
  }
}

namespace {

std::set<std::string> equality_graphs(const ScanReport& r, std::size_t k) {
  std::set<std::string> out;
  for (const auto& c : r.equality_cases) {
    if (c.k == k) {
      out.insert(c.graph6);
    }
  }
  return out;
}

}  // namespace

TEST(Scan, FourVerticesTwoOrders) {
  const auto r = scan(4, 2, 1);
  EXPECT_EQ(r.graphs_scanned, 64U);
  EXPECT_TRUE(r.identity_failures.empty());
  EXPECT_TRUE(r.bound_violations.empty());
  EXPECT_TRUE(r.star_mismatches.empty());
  const auto k1 = equality_graphs(r, 1);
  EXPECT_TRUE(k1.contains(to_graph6(Graph(4, {{0, 1}, {2, 3}}))));  // 2K_2
  EXPECT_TRUE(k1.contains(to_graph6(cycle(4))));
  EXPECT_TRUE(k1.contains(to_graph6(complete(4))));
  EXPECT_FALSE(k1.contains(to_graph6(path(4))));

  const auto k4 = to_graph6(complete(4));
  const auto mismatch = std::find_if(r.characterization_mismatches.begin(), r.characterization_mismatches.end(),
                                     [&](const ScanCase& c) { return c.graph6 == k4 && c.k == 2; });
  ASSERT_NE(mismatch, r.characterization_mismatches.end());
  EXPECT_TRUE(mismatch->equality_structural);
  EXPECT_FALSE(mismatch->equality_numeric);
  for (const auto& c : r.characterization_mismatches) {
    EXPECT_NE(c.k, 1U) << c.graph6;
  }
}

TEST(Scan, ThreeVerticesOrderThreeIsVacuous) {
  const auto r = scan(3, 3, 1);
  EXPECT_EQ(r.graphs_scanned, 8U);
  EXPECT_TRUE(r.clean());
  ASSERT_EQ(r.summary.size(), 3U);
  EXPECT_EQ(r.summary[2].evaluated, 8U);
  EXPECT_EQ(r.summary[2].vacuous, 7U);  // only K_3 has a 3-clique
  EXPECT_EQ(equality_graphs(r, 3).size(), 0U);
}

TEST(Scan, EqualityCasesOnThreeAndTwoVertices) {
  const auto r3 = scan(3, 1, 1);
  EXPECT_EQ(r3.graphs_scanned, 8U);
  EXPECT_EQ(equality_graphs(r3, 1), (std::set<std::string>{"Bw"}));
  const auto r2 = scan(2, 1, 1);
  EXPECT_EQ(r2.graphs_scanned, 2U);
  EXPECT_EQ(equality_graphs(r2, 1), (std::set<std::string>{to_graph6(complete(2))}));
}

TEST(Scan, OrderRangeAndGuards) {
  const auto r = scan(ScanOptions{2, 4, 1, 1});
  EXPECT_EQ(r.graphs_scanned, 2U + 8U + 64U);
  EXPECT_THROW(scan(8, 1), GuardError);
  EXPECT_THROW(scan(3, 4), GuardError);
  EXPECT_THROW(scan(3, 0), GuardError);
  EXPECT_THROW(scan(ScanOptions{5, 4, 1, 1}), GuardError);
}

TEST(Scan, ReportIsDeterministicAcrossRunsAndWorkerCounts) {
  const auto a = to_json(scan(5, 3, 1)).dump();
  const auto b = to_json(scan(5, 3, 1)).dump();
  const auto c = to_json(scan(5, 3, 4)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(render_text(scan(5, 3, 1)), render_text(scan(5, 3, 3)));
}

TEST(Scan, ListedGraph6StringsRoundTrip) {
  const auto r = scan(5, 2, 1);
  for (const auto& c : r.equality_cases) {
    EXPECT_EQ(to_graph6(from_graph6(c.graph6)), c.graph6);
  }
  for (const auto& c : r.characterization_mismatches) {
    EXPECT_EQ(to_graph6(from_graph6(c.graph6)), c.graph6);
  }
}

TEST(Scan, ScanGraphRecordsAFailingCase) {
  ScanReport report;
  scan_graph(complete(4), 2, report);
  ASSERT_EQ(report.summary.size(), 2U);
  EXPECT_EQ(report.summary[1].evaluated, 1U);
  EXPECT_EQ(report.summary[1].mismatches, 1U);
  ASSERT_EQ(report.characterization_mismatches.size(), 1U);
  EXPECT_EQ(report.characterization_mismatches[0].graph6, "C~");
}

TEST(Scan, JsonSchema) {
  const auto j = to_json(scan(3, 2, 1));
  for (const char* key : {"n_range", "k_range", "graphs_scanned", "clean", "identity_failures", "bound_violations",
                          "summary", "equality_cases", "characterization_mismatches", "star_mismatches"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["graphs_scanned"], 8);
  EXPECT_EQ(j["k_range"][1], 2);
  const auto& first = j["equality_cases"][0];
  for (const char* key : {"graph6", "n", "k", "index", "bound", "c_k", "c_k0", "components_regular",
                          "equality_structural", "equality_numeric"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
}

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cliqueidx/clique.hpp"
#include "cliqueidx/graph_io.hpp"
#include "cliqueidx/oracle.hpp"
#include "cliqueidx/randic.hpp"
#include "cliqueidx/scan.hpp"
#include "test_graphs.hpp"

using namespace cliqueidx;
using namespace cliqueidx::testing;

namespace {

constexpr double kBoundTolerance = 1e-9;
constexpr double kSpecializationTolerance = 1e-12;
constexpr double kClosedFormTolerance = 1e-12;

// Frozen values from an independent floating-point oracle.
constexpr double kStarFiveLeaves = 2.23606797749979;     // R_v(K_{1,5}) = sqrt 5
constexpr double kEdgeIndexK4 = 1.4142135623730951;      // R_e(K_4) = sqrt 2
constexpr double kTriangleIndexK5 = 1.25;                // R_clq(K_5; 3)

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = no limit
  std::function<Outcome()> run;
};

// Weighted-handshake corpus shared by criteria 4 and 6.
std::vector<Graph> handshake_corpus() {
  std::mt19937_64 rng(4);
  std::vector<Graph> out;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 10;
    out.push_back(random_graph(n, 0.6, rng));
  }
  return out;
}

// Reciprocal and squared-identity corpus shared by criteria 3 and 5.
template <class Fn>
void for_each_reciprocal_corpus_graph(Fn&& fn) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      fn(g);
    }
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    fn(random_graph(12, 0.4, rng));
  }
}

Outcome star_lower_bound() {
  Outcome o;
  const double star5 = randic_index(star(5), 1);
  if (std::abs(star5 - kStarFiveLeaves) > kBoundTolerance) {
    o.pass = false;
  }
  std::size_t connected = 0;
  std::size_t equal = 0;
  std::size_t below = 0;
  std::size_t equality_off_star = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      if (connected_components(g).count() != 1) {
        continue;
      }
      ++connected;
      const double r = randic_index(g, 1);
      const double lower = std::sqrt(static_cast<double>(n - 1));
      if (r < lower - kBoundTolerance) {
        ++below;
      }
      const bool numeric = std::abs(r - lower) <= kBoundTolerance;
      equal += numeric;
      if (numeric != is_star(g)) {
        ++equality_off_star;
      }
    }
  }
  o.pass = o.pass && below == 0 && equality_off_star == 0;
  o.detail = "R_v(K_1,5)=" + std::to_string(star5) + " connected=" + std::to_string(connected) +
             " below=" + std::to_string(below) + " equal=" + std::to_string(equal) +
             " equal_xor_star=" + std::to_string(equality_off_star);
  return o;
}

Outcome vertex_upper_bound() {
  std::size_t graphs = 0;
  std::size_t violations = 0;
  std::size_t numeric_only = 0;
  std::size_t structural_only = 0;
  std::size_t equal = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      ++graphs;
      const auto r = bound_report(g, 1);
      if (r.index_value > static_cast<double>(n) / 2.0 + kBoundTolerance) {
        ++violations;
      }
      const bool numeric = std::abs(static_cast<double>(n) / 2.0 - r.index_value) <= kBoundTolerance;
      // Every component regular with at least two vertices.
      const auto comps = connected_components(g);
      bool structural = true;
      for (std::size_t c = 0; c < comps.count(); ++c) {
        structural = structural && comps.sizes[c] >= 2 && r.per_component_regular[c];
      }
      equal += numeric;
      numeric_only += numeric && !structural;
      structural_only += structural && !numeric;
    }
  }
  return {violations == 0 && numeric_only == 0 && structural_only == 0,
          "graphs=" + std::to_string(graphs) + " violations=" + std::to_string(violations) +
              " equal=" + std::to_string(equal) + " numeric_only=" + std::to_string(numeric_only) +
              " structural_only=" + std::to_string(structural_only)};
}

Outcome reciprocal() {
  std::size_t checks = 0;
  std::size_t failures = 0;
  for_each_reciprocal_corpus_graph([&](const Graph& g) {
    for (std::size_t k = 1; k <= 3; ++k) {
      ++checks;
      failures += !reciprocal_identity(g, k).holds;
    }
  });
  return {failures == 0, "checks=" + std::to_string(checks) + " failures=" + std::to_string(failures)};
}

Outcome weighted_handshake() {
  std::mt19937_64 rng(44);
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t disagreements = 0;
  for (const Graph& g : handshake_corpus()) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const CliqueLayer layer(g, k);
      const IncidenceMatrix matrix(g, k);
      for (int t = 0; t < 100; ++t) {
        const auto h = random_weight_function(layer.cliques(), rng);
        const auto direct = clique_handshake_identity(layer, h);
        const auto via_matrix = incidence_matrix_check(matrix, weights_for(h, matrix.rows()));
        ++checks;
        failures += !direct.holds || !via_matrix.holds;
        disagreements += via_matrix.lhs != direct.lhs || via_matrix.rhs != direct.rhs;
      }
    }
  }
  return {failures == 0 && disagreements == 0,
          "checks=" + std::to_string(checks) + " failures=" + std::to_string(failures) +
              " matrix_disagreements=" + std::to_string(disagreements)};
}

Outcome squared_identity() {
  std::size_t checks = 0;
  std::size_t failures = 0;
  for_each_reciprocal_corpus_graph([&](const Graph& g) {
    for (std::size_t k = 1; k <= 3; ++k) {
      ++checks;
      failures += !squared_handshake_identity(CliqueLayer(g, k)).holds;
    }
  });
  const auto d = squared_handshake_identity(CliqueLayer(diamond(), 2));
  const bool diamond_ok = d.lhs == 8 && d.rhs == 8;
  return {failures == 0 && diamond_ok,
          "checks=" + std::to_string(checks) + " failures=" + std::to_string(failures) +
              " diamond lhs=" + to_string(d.lhs) + " rhs=" + to_string(d.rhs)};
}

Outcome specialization() {
  double worst_v = 0.0;
  double worst_e = 0.0;
  for (const Graph& g : handshake_corpus()) {
    worst_v = std::max(worst_v, std::abs(randic_index(g, 1) - direct_vertex_randic(g)));
    worst_e = std::max(worst_e, std::abs(randic_index(g, 2) - direct_edge_randic(g)));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max|dR_v|=%.3g max|dR_e|=%.3g", worst_v, worst_e);
  return {worst_v <= kSpecializationTolerance && worst_e <= kSpecializationTolerance, buf};
}

Outcome closed_forms() {
  const auto k4 = bound_report(complete(4), 2);
  const auto k3 = bound_report(complete(3), 2);
  const auto k5 = bound_report(complete(5), 3);
  const bool k4_ok = std::abs(k4.index_value - kEdgeIndexK4) <= kClosedFormTolerance && k4.bound_value == 2.0 &&
                     !k4.equality_numeric;
  const bool k3_ok = k3.index_value == 1.0 && k3.bound_value == 1.0 && k3.equality_numeric;
  const bool k5_ok = std::abs(k5.index_value - kTriangleIndexK5) <= kClosedFormTolerance && k5.bound_value == 2.5;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "R_e(K4)=%.17g bound=%g strict, edge-regular=%s (equality-direction mismatch logged); "
                "R_e(K3)=%g; R(K5;3)=%.17g bound=%g",
                k4.index_value, k4.bound_value, k4.equality_structural ? "yes" : "no", k3.index_value,
                k5.index_value, k5.bound_value);
  return {k4_ok && k3_ok && k5_ok, buf};
}

Outcome exhaustive_scan() {
  const auto first = scan(ScanOptions{7, 7, 3, 1});
  const auto second = scan(ScanOptions{7, 7, 3, 1});
  const auto wide = scan(ScanOptions{7, 7, 3, 4});
  const auto a = to_json(first).dump();
  const bool deterministic = a == to_json(second).dump() && a == to_json(wide).dump() &&
                             render_text(first) == render_text(wide);
  std::size_t mismatches = first.characterization_mismatches.size();
  return {first.clean() && deterministic && first.graphs_scanned == (std::uint64_t{1} << 21),
          "graphs=" + std::to_string(first.graphs_scanned) + " identity_failures=" +
              std::to_string(first.identity_failures.size()) + " bound_violations=" +
              std::to_string(first.bound_violations.size()) + " deterministic=" + (deterministic ? "yes" : "no") +
              " equality_mismatches_logged=" + std::to_string(mismatches)};
}

Outcome oracle_equivalence() {
  std::size_t comparisons = 0;
  std::size_t differences = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (std::size_t k = 1; k <= 4; ++k) {
        ++comparisons;
        differences += enumerate_cliques(g, k) != brute_force_cliques(g, k);
      }
    }
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(10, 0.5, rng);
    for (std::size_t k = 1; k <= 10; ++k) {
      ++comparisons;
      differences += enumerate_cliques(g, k) != brute_force_cliques(g, k);
    }
  }
  return {differences == 0,
          "comparisons=" + std::to_string(comparisons) + " differences=" + std::to_string(differences)};
}

Outcome graph6_round_trip() {
  std::size_t graphs = 0;
  std::size_t failures = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      ++graphs;
      const std::string text = serialize(GraphFormat::Graph6, g);
      const Graph back = parse(GraphFormat::Graph6, text);
      failures += !(back == g) || serialize(GraphFormat::Graph6, back) != text;
    }
  }
  return {failures == 0, "graphs=" + std::to_string(graphs) + " failures=" + std::to_string(failures)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "star lower bound", 30, star_lower_bound},
      {2, "vertex upper bound and equality", 60, vertex_upper_bound},
      {3, "reciprocal identity", 120, reciprocal},
      {4, "weighted handshake and incidence matrix", 0, weighted_handshake},
      {5, "squared identity", 0, squared_identity},
      {6, "specialization to R_v and R_e", 0, specialization},
      {7, "closed forms", 0, closed_forms},
      {8, "exhaustive scan n=7 k<=3", 600, exhaustive_scan},
      {9, "clique enumeration oracle equivalence", 0, oracle_equivalence},
      {10, "graph6 round trip", 0, graph6_round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0 || seconds < c.time_limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s [%d] %s: %s (%.1fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds,
                in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}

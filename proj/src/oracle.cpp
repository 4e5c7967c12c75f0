#include "cliqueidx/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cliqueidx {

std::vector<Clique> brute_force_cliques(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw GuardError("brute-force clique search refuses graphs with more than " +
                     std::to_string(kBruteForceMaxOrder) + " vertices (got " + std::to_string(n) + ")");
  }
  std::vector<Clique> out;
  if (k == 0 || k > n) {
    return out;
  }
  // Walk all subsets of size k as bitmasks in increasing numeric order, then
  // sort, so the order of generation plays no part in the result.
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    if (static_cast<std::size_t>(std::popcount(subset)) != k) {
      continue;
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if ((subset >> v) & 1U) {
        members.push_back(v);
      }
    }
    bool complete = true;
    for (std::size_t i = 0; i < members.size() && complete; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!g.adjacent(members[i], members[j])) {
          complete = false;
          break;
        }
      }
    }
    if (complete) {
      out.emplace_back(std::move(members));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t brute_force_value(const Graph& g, const Clique& q) {
  std::size_t value = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    bool common = true;
    for (const Vertex v : q.vertices()) {
      if (!g.adjacent(v, w)) {
        common = false;
        break;
      }
    }
    value += common ? 1 : 0;
  }
  return value;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      if ((mask >> bit) & 1U) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n) {
  if (n > kAllGraphsMaxOrder) {
    throw GuardError("labeled graph enumeration refuses n > " + std::to_string(kAllGraphsMaxOrder) +
                     " (got " + std::to_string(n) + ")");
  }
}

LabeledGraphs all_graphs(std::size_t n) { return LabeledGraphs(n); }

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace cliqueidx

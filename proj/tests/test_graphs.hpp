// Small named graphs and test-only direct codings shared by the suites.
#pragma once

#include <cmath>
#include <vector>

#include "cliqueidx/graph.hpp"

namespace cliqueidx::testing {

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    e.emplace_back(v - 1, v);
  }
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) {
    e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  }
  return Graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

/// K_{1,leaves} with centre 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) {
    e.emplace_back(0, v);
  }
  return Graph(leaves + 1, e);
}

/// K_4 minus the edge {0,1}.
inline Graph diamond() { return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& [u, v] : b.edges()) {
    e.emplace_back(u + shift, v + shift);
  }
  return Graph(a.order() + b.order(), e);
}

/// Vertex Randić index straight from degrees, edges in lexicographic order.
inline double direct_vertex_randic(const Graph& g) {
  double sum = 0.0;
  for (const auto& [u, v] : g.edges()) {
    sum += 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)));
  }
  return sum;
}

/// Triangle sum of 1/sqrt(val(e1) val(e2) val(e3)) with edge values from
/// explicit common-neighbor loops.
inline double direct_edge_randic(const Graph& g) {
  auto edge_value = [&](Vertex a, Vertex b) {
    double c = 0;
    for (Vertex w = 0; w < g.order(); ++w) {
      c += (g.adjacent(a, w) && g.adjacent(b, w)) ? 1 : 0;
    }
    return c;
  };
  double sum = 0.0;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      for (Vertex c = b + 1; c < g.order(); ++c) {
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) {
          sum += 1.0 / std::sqrt(edge_value(a, b) * edge_value(a, c) * edge_value(b, c));
        }
      }
    }
  }
  return sum;
}

}  // namespace cliqueidx::testing

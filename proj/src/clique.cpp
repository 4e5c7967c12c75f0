#include "cliqueidx/clique.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "cliqueidx/parallel.hpp"

namespace cliqueidx {

class CliqueBuilder {
 public:
  static Clique make(std::vector<Vertex> vertices) {
    return Clique(Clique::Unchecked{}, std::move(vertices));
  }
};

Clique::Clique(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i - 1] >= vertices_[i]) {
      throw std::invalid_argument("clique vertices must be strictly increasing: " +
                                  to_string(CliqueBuilder::make(vertices_)));
    }
  }
}

Clique Clique::without(std::size_t index) const {
  std::vector<Vertex> rest;
  rest.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != index) {
      rest.push_back(vertices_[i]);
    }
  }
  return CliqueBuilder::make(std::move(rest));
}

std::string to_string(const Clique& q) {
  std::string out = "{";
  for (std::size_t i = 0; i < q.order(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += std::to_string(q[i]);
  }
  out += '}';
  return out;
}

bool is_clique_of(const Graph& g, const Clique& q) {
  for (std::size_t i = 0; i < q.order(); ++i) {
    if (q[i] >= g.order()) {
      return false;
    }
    for (std::size_t j = i + 1; j < q.order(); ++j) {
      if (!g.adjacent(q[i], q[j])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Depth-first ordered extension: `candidates` holds the vertices greater
// than the current maximum that are adjacent to every current member.
void extend(const Graph& g, std::size_t k, std::vector<Vertex>& current,
            const VertexSet& candidates, std::vector<Clique>& out) {
  if (current.size() == k) {
    out.push_back(CliqueBuilder::make(current));
    return;
  }
  if (current.size() + candidates.count() < k) {
    return;
  }
  candidates.for_each([&](Vertex v) {
    current.push_back(v);
    if (current.size() == k) {
      out.push_back(CliqueBuilder::make(current));
    } else {
      VertexSet next = candidates;
      next.intersect(g.row(v));
      next.clear_through(v);
      extend(g, k, current, next, out);
    }
    current.pop_back();
  });
}

void cliques_from(const Graph& g, std::size_t k, Vertex first, std::vector<Clique>& out) {
  std::vector<Vertex> current{first};
  if (k == 1) {
    out.push_back(CliqueBuilder::make(current));
    return;
  }
  VertexSet candidates(g.order(), g.row(first));
  candidates.clear_through(first);
  extend(g, k, current, candidates, out);
}

void require_order(std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("clique order k must be at least 1");
  }
}

}  // namespace

std::vector<Clique> enumerate_cliques(const Graph& g, std::size_t k) {
  require_order(k);
  std::vector<Clique> out;
  if (k > g.order()) {
    return out;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    cliques_from(g, k, v, out);
  }
  return out;
}

std::vector<Clique> enumerate_cliques(const Graph& g, std::size_t k, std::size_t jobs) {
  require_order(k);
  if (k > g.order()) {
    return {};
  }
  std::vector<std::vector<Clique>> shards(g.order());
  parallel_for(g.order(), jobs, [&](std::size_t v) {
    cliques_from(g, k, static_cast<Vertex>(v), shards[v]);
  });
  std::vector<Clique> out;
  for (auto& shard : shards) {
    std::move(shard.begin(), shard.end(), std::back_inserter(out));
  }
  return out;
}

namespace {

std::size_t common_neighbor_count(const Graph& g, std::span<const Vertex> vertices) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < g.words_per_row(); ++w) {
    auto word = ~VertexSet::Word{0};
    for (const Vertex v : vertices) {
      word &= g.row(v)[w];
    }
    total += static_cast<std::size_t>(std::popcount(word));
  }
  return total;
}

}  // namespace

std::size_t clique_value(const Graph& g, const Clique& q) {
  if (q.order() == 0 || !is_clique_of(g, q)) {
    throw InvalidClique(to_string(q) + " is not a clique of the graph");
  }
  return common_neighbor_count(g, q.vertices());
}

std::vector<Clique> facets(const Clique& q) {
  if (q.order() < 2) {
    throw std::invalid_argument("facets need a clique of order at least 2, got " + to_string(q));
  }
  std::vector<Clique> out;
  out.reserve(q.order());
  // Dropping later vertices first yields lexicographic order.
  for (std::size_t i = q.order(); i-- > 0;) {
    out.push_back(q.without(i));
  }
  return out;
}

CliqueCounts clique_counts(const Graph& g, std::size_t k) {
  CliqueCounts counts;
  for (const auto& q : enumerate_cliques(g, k)) {
    ++counts.total;
    if (common_neighbor_count(g, q.vertices()) == 0) {
      ++counts.isolated;
    }
  }
  return counts;
}

std::vector<bool> component_regularity(const Components& components,
                                       std::span<const Clique> cliques,
                                       std::span<const std::size_t> values) {
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_value(components.count(), kUnseen);
  std::vector<bool> regular(components.count(), true);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const std::size_t c = components.label[cliques[i].front()];
    if (first_value[c] == kUnseen) {
      first_value[c] = values[i];
    } else if (first_value[c] != values[i]) {
      regular[c] = false;
    }
  }
  return regular;
}

std::vector<bool> is_clique_regular(const Graph& g, std::size_t k) {
  const auto cliques = enumerate_cliques(g, k);
  std::vector<std::size_t> values;
  values.reserve(cliques.size());
  for (const auto& q : cliques) {
    values.push_back(common_neighbor_count(g, q.vertices()));
  }
  return component_regularity(connected_components(g), cliques, values);
}

CliqueLayer::CliqueLayer(const Graph& g, std::size_t k)
    : k_(k), cliques_(enumerate_cliques(g, k)), supercliques_(enumerate_cliques(g, k + 1)) {
  values_.reserve(cliques_.size());
  for (const auto& q : cliques_) {
    values_.push_back(common_neighbor_count(g, q.vertices()));
  }
  facet_index_.reserve(supercliques_.size() * (k + 1));
  for (const auto& big : supercliques_) {
    for (std::size_t i = big.order(); i-- > 0;) {
      facet_index_.push_back(index_of(big.without(i)));
    }
  }
}

std::size_t CliqueLayer::index_of(const Clique& q) const {
  const auto it = std::lower_bound(cliques_.begin(), cliques_.end(), q);
  if (it == cliques_.end() || *it != q) {
    return npos;
  }
  return static_cast<std::size_t>(it - cliques_.begin());
}

std::size_t CliqueLayer::isolated_count() const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), std::size_t{0}));
}

std::vector<bool> CliqueLayer::covered_by_supercliques() const {
  std::vector<bool> covered(cliques_.size(), false);
  for (const auto i : facet_index_) {
    covered[i] = true;
  }
  return covered;
}

}  // namespace cliqueidx

#include "cliqueidx/graph.hpp"

namespace cliqueidx {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Word> words)
    : universe_(universe), words_(words.begin(), words.end()) {
  if (words_.size() != words_for(universe)) {
    throw std::invalid_argument("word count does not match set universe");
  }
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe " +
                            std::to_string(universe_));
  }
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) {
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
}

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (const Word w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

VertexSet& VertexSet::intersect(std::span<const Word> other) {
  const std::size_t common = std::min(words_.size(), other.size());
  for (std::size_t i = 0; i < common; ++i) {
    words_[i] &= other[i];
  }
  for (std::size_t i = common; i < words_.size(); ++i) {
    words_[i] = 0;
  }
  return *this;
}

void VertexSet::clear_through(Vertex v) {
  const std::size_t word = v / kWordBits;
  for (std::size_t i = 0; i < word && i < words_.size(); ++i) {
    words_[i] = 0;
  }
  if (word < words_.size()) {
    const std::size_t bit = v % kWordBits;
    words_[word] &= bit + 1 == kWordBits ? Word{0} : ~((Word{1} << (bit + 1)) - 1);
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), words_(VertexSet::words_for(n)), rows_(n * VertexSet::words_for(n), 0) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge " + to_string({u, v}) + " references a vertex outside 0.." +
                       (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
    }
    if (u == v) {
      throw GraphError("self-loop " + to_string({u, v}) + " is not allowed in a simple graph");
    }
    rows_[u * words_ + v / VertexSet::kWordBits] |= VertexSet::Word{1} << (v % VertexSet::kWordBits);
    rows_[v * words_ + u / VertexSet::kWordBits] |= VertexSet::Word{1} << (u % VertexSet::kWordBits);
  }
  std::size_t degree_sum = 0;
  for (const auto w : rows_) {
    degree_sum += static_cast<std::size_t>(std::popcount(w));
  }
  m_ = degree_sum / 2;
}

VertexSet Graph::neighborhood(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n_));
  }
  return VertexSet(n_, row(v));
}

std::size_t Graph::degree(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n_));
  }
  std::size_t d = 0;
  for (const auto w : row(v)) {
    d += static_cast<std::size_t>(std::popcount(w));
  }
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

Components connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  Components c;
  c.label.assign(g.order(), kUnset);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (c.label[start] != kUnset) {
      continue;
    }
    const std::size_t id = c.sizes.size();
    c.sizes.push_back(0);
    c.label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++c.sizes[id];
      for (std::size_t w = 0; w < g.words_per_row(); ++w) {
        auto bits = g.row(v)[w];
        while (bits != 0) {
          const auto u = static_cast<Vertex>(w * VertexSet::kWordBits +
                                             static_cast<std::size_t>(std::countr_zero(bits)));
          bits &= bits - 1;
          if (c.label[u] == kUnset) {
            c.label[u] = id;
            stack.push_back(u);
          }
        }
      }
    }
  }
  return c;
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace cliqueidx

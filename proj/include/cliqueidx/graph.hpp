#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace cliqueidx {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Rejected graph construction (self-loop or vertex id out of range).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bitset over the vertex ids 0..universe-1.
///
/// Storage is inline for universes of up to 64 vertices, which is the
/// common case for the exhaustive scans; larger graphs spill to the heap.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::span<const Word> words);

  static std::size_t words_for(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return {words_.data(), words_.size()}; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t count() const;
  bool empty() const;

  /// In-place intersection with a row of the same universe.
  VertexSet& intersect(std::span<const Word> other);
  VertexSet& operator&=(const VertexSet& other) { return intersect(other.words()); }

  /// Removes every member <= v.
  void clear_through(Vertex v);

  std::vector<Vertex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<Vertex>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
  }

 private:
  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs (in either
  /// orientation) collapse into one edge; self-loops and ids >= n throw
  /// GraphError naming the offending pair.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && ((row(u)[v / VertexSet::kWordBits] >> (v % VertexSet::kWordBits)) & 1U) != 0;
  }

  /// Raw adjacency words of v, unchecked.
  std::span<const VertexSet::Word> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  /// Open neighborhood N(v); throws std::out_of_range for v >= n.
  VertexSet neighborhood(Vertex v) const;
  std::size_t degree(Vertex v) const;

  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<VertexSet::Word> rows_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

/// Neighborhood of v; throws std::out_of_range for v >= n.
inline VertexSet neighborhood(const Graph& g, Vertex v) { return g.neighborhood(v); }

/// Connected-component labeling. Components are numbered in order of
/// their smallest vertex, so labels are a function of the graph alone.
struct Components {
  std::vector<std::size_t> label;  // per vertex
  std::vector<std::size_t> sizes;  // per component

  std::size_t count() const { return sizes.size(); }
};

Components connected_components(const Graph& g);

std::string to_string(const Edge& e);

}  // namespace cliqueidx

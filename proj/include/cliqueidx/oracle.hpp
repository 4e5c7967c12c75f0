#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <stdexcept>
#include <vector>

#include "cliqueidx/clique.hpp"
#include "cliqueidx/graph.hpp"

namespace cliqueidx {

/// A request beyond an oracle's combinatorial guard.
class GuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kBruteForceMaxOrder = 20;
inline constexpr std::size_t kAllGraphsMaxOrder = 7;

/// k-cliques by testing every k-subset for pairwise adjacency. Sorted.
/// Throws GuardError for graphs with more than 20 vertices.
std::vector<Clique> brute_force_cliques(const Graph& g, std::size_t k);

/// Clique value by scanning every vertex and checking adjacency to each
/// member of q, without bitset intersection.
std::size_t brute_force_value(const Graph& g, const Clique& q);

/// Number of vertex pairs on n vertices, i.e. the edge-mask width.
constexpr std::size_t pair_count(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

/// Graph whose edge set is the mask over pairs in column order
/// (0,1),(0,2),(1,2),(0,3),... with bit i for the i-th pair.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Every labeled simple graph on n vertices, by ascending edge mask.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return graph_from_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++mask_;
      return old;
    }
    std::uint64_t mask() const { return mask_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    std::size_t n_;
    std::uint64_t mask_;
  };

  explicit LabeledGraphs(std::size_t n);

  std::size_t order() const { return n_; }
  std::uint64_t count() const { return std::uint64_t{1} << pair_count(n_); }
  Graph at(std::uint64_t mask) const { return graph_from_mask(n_, mask); }
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count()}; }

 private:
  std::size_t n_;
};

/// Throws GuardError for n > 7.
LabeledGraphs all_graphs(std::size_t n);

/// Erdős–Rényi G(n, p).
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace cliqueidx

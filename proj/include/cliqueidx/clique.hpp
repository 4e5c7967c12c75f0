#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliqueidx/graph.hpp"

namespace cliqueidx {

/// A vertex list that is not a clique of the graph it was used with.
class InvalidClique : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertices stored as a strictly increasing list. Adjacency is a
/// property relative to a graph and is checked where a graph is involved.
class Clique {
 public:
  Clique() = default;
  /// Throws std::invalid_argument unless `vertices` is strictly increasing.
  explicit Clique(std::vector<Vertex> vertices);
  Clique(std::initializer_list<Vertex> vertices) : Clique(std::vector<Vertex>(vertices)) {}

  std::size_t order() const { return vertices_.size(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex front() const { return vertices_.front(); }

  /// The clique with the vertex at position `index` removed.
  Clique without(std::size_t index) const;

  friend auto operator<=>(const Clique&, const Clique&) = default;
  friend bool operator==(const Clique&, const Clique&) = default;

 private:
  struct Unchecked {};
  Clique(Unchecked, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  friend class CliqueBuilder;

  std::vector<Vertex> vertices_;
};

std::string to_string(const Clique& q);

/// True iff every pair of vertices of q is adjacent in g (and all ids < n).
bool is_clique_of(const Graph& g, const Clique& q);

/// All k-cliques of g in lexicographic order. Returns an empty list when k
/// exceeds the clique number; throws std::invalid_argument for k == 0.
std::vector<Clique> enumerate_cliques(const Graph& g, std::size_t k);

/// Same result as the serial overload, computed by sharding on the smallest
/// clique vertex across `jobs` workers (0 = hardware concurrency).
std::vector<Clique> enumerate_cliques(const Graph& g, std::size_t k, std::size_t jobs);

/// Number of common neighbors of all vertices of q. Throws InvalidClique if
/// q is not a clique of g.
std::size_t clique_value(const Graph& g, const Clique& q);

/// The order(q) sub-cliques obtained by dropping one vertex, in
/// lexicographic order. Throws std::invalid_argument for order < 2.
std::vector<Clique> facets(const Clique& q);

struct CliqueCounts {
  std::size_t total = 0;     // c_k
  std::size_t isolated = 0;  // c_{k,0}: k-cliques of value 0
};

CliqueCounts clique_counts(const Graph& g, std::size_t k);

/// One verdict per connected component (indexed by component label): true
/// iff every k-clique inside that component has the same value. Components
/// without k-cliques are vacuously regular.
std::vector<bool> is_clique_regular(const Graph& g, std::size_t k);

/// The k-cliques of a graph with their values, and the (k+1)-cliques with
/// the positions of their facets in the k-clique list. This is the shared
/// substrate for the index and the handshake identities.
class CliqueLayer {
 public:
  CliqueLayer(const Graph& g, std::size_t k);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t order() const { return k_; }
  std::span<const Clique> cliques() const { return cliques_; }
  std::span<const std::size_t> values() const { return values_; }
  std::span<const Clique> supercliques() const { return supercliques_; }

  /// Indices into cliques() of the k+1 facets of supercliques()[j].
  std::span<const std::size_t> facet_indices(std::size_t j) const {
    return {facet_index_.data() + j * (k_ + 1), k_ + 1};
  }

  /// Position of q in cliques(), or npos.
  std::size_t index_of(const Clique& q) const;

  /// Isolated count from the values (value == 0).
  std::size_t isolated_count() const;

  /// Per k-clique: does it appear as a facet of some (k+1)-clique? This is
  /// the enumeration-side route to isolation and must equal value != 0.
  std::vector<bool> covered_by_supercliques() const;

 private:
  std::size_t k_;
  std::vector<Clique> cliques_;
  std::vector<std::size_t> values_;
  std::vector<Clique> supercliques_;
  std::vector<std::size_t> facet_index_;
};

/// Per-component regularity from precomputed clique values.
std::vector<bool> component_regularity(const Components& components,
                                       std::span<const Clique> cliques,
                                       std::span<const std::size_t> values);

}  // namespace cliqueidx

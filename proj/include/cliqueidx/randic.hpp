#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cliqueidx/clique.hpp"
#include "cliqueidx/graph.hpp"

namespace cliqueidx {

using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);

/// Absolute tolerance for comparisons of floating index values.
inline constexpr double kTolerance = 1e-9;

class UndefinedWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-negative rational weights on k-cliques.
class WeightFunction {
 public:
  /// Throws DomainError for a negative weight.
  void set(const Clique& q, Rational weight);
  /// Throws UndefinedWeight naming q when no weight was set.
  const Rational& at(const Clique& q) const;
  bool contains(const Clique& q) const { return weights_.contains(q); }
  std::size_t size() const { return weights_.size(); }

  WeightFunction scaled(const Rational& factor) const;

  template <typename Fn>
  static WeightFunction from(std::span<const Clique> cliques, Fn&& fn) {
    WeightFunction h;
    for (const auto& q : cliques) {
      h.set(q, Rational(fn(q)));
    }
    return h;
  }

 private:
  std::map<Clique, Rational> weights_;
};

/// Weights p/q with p and q uniform on 1..1000.
WeightFunction random_weight_function(std::span<const Clique> cliques, std::mt19937_64& rng);

enum class IdentityKind { handshake, squared_handshake, reciprocal, matrix_sums };

std::string_view to_string(IdentityKind kind);

struct IdentityReport {
  Rational lhs;
  Rational rhs;
  bool holds = false;  // lhs == rhs, exactly
  std::size_t k = 0;
  IdentityKind kind = IdentityKind::handshake;
};

/// Randić-type clique index: the sum over (k+1)-cliques, in lexicographic
/// order, of 1/sqrt(product of the values of their k+1 facets). k = 1 is
/// the classical vertex index, k = 2 the triangle/edge-value version.
double randic_index(const Graph& g, std::size_t k);
double randic_index(const CliqueLayer& layer);

/// sum_q h(q) val(q) over k-cliques versus the facet-weight sum over
/// (k+1)-cliques, in exact arithmetic.
IdentityReport clique_handshake_identity(const Graph& g, const WeightFunction& h, std::size_t k);
IdentityReport clique_handshake_identity(const CliqueLayer& layer, const WeightFunction& h);
/// Same, with weights given positionally for layer.cliques().
IdentityReport clique_handshake_identity(const CliqueLayer& layer, std::span<const Rational> weights);

/// h = 1: sum of values versus (k+1) c_{k+1}.
IdentityReport unit_handshake_identity(const CliqueLayer& layer);
/// h = val: sum of squared values versus facet value sums.
IdentityReport squared_handshake_identity(const CliqueLayer& layer);

/// sum over (k+1)-cliques of sum over facets of 1/val versus c_k - c_{k,0}.
IdentityReport reciprocal_identity(const Graph& g, std::size_t k);
IdentityReport reciprocal_identity(const CliqueLayer& layer);

/// Sparse k-clique by (k+1)-clique containment matrix. Its pattern is built
/// from subset tests alone, without clique values or facet lookups, so it
/// re-derives the handshake by double counting.
class IncidenceMatrix {
 public:
  IncidenceMatrix(const Graph& g, std::size_t k);

  std::size_t order() const { return k_; }
  std::span<const Clique> rows() const { return rows_; }
  std::span<const Clique> columns() const { return columns_; }
  /// Row indices of the non-zero entries of column j.
  std::span<const std::size_t> column_entries(std::size_t j) const {
    return {entries_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
  }
  std::size_t row_nonzeros(std::size_t i) const { return row_nonzeros_[i]; }

  struct Sums {
    std::vector<Rational> row;
    std::vector<Rational> column;
  };
  /// Row and column sums for weights given positionally for rows().
  Sums sums(std::span<const Rational> weights) const;

 private:
  std::size_t k_;
  std::vector<Clique> rows_;
  std::vector<Clique> columns_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> entries_;
  std::vector<std::size_t> row_nonzeros_;
};

/// lhs = total of row sums, rhs = total of column sums.
IdentityReport incidence_matrix_check(const Graph& g, const WeightFunction& h, std::size_t k);
IdentityReport incidence_matrix_check(const IncidenceMatrix& matrix, std::span<const Rational> weights);

/// Weights of h laid out for `cliques`; throws UndefinedWeight on a gap.
std::vector<Rational> weights_for(const WeightFunction& h, std::span<const Clique> cliques);

/// Lower-bound data reported for k = 1 on connected graphs.
struct LowerBoundCheck {
  double bound = 0.0;  // sqrt(n - 1)
  double slack = 0.0;  // index - bound
  bool equality_numeric = false;
  bool is_star = false;
};

struct BoundReport {
  std::size_t k = 0;
  double index_value = 0.0;
  double bound_value = 0.0;  // c_k / (k + 1)
  double slack = 0.0;        // bound - index
  /// Every component is k-clique regular and no k-clique is isolated.
  bool equality_structural = false;
  bool equality_numeric = false;  // |slack| <= kTolerance
  std::vector<bool> per_component_regular;
  std::size_t clique_count = 0;       // c_k
  std::size_t isolated_count = 0;     // c_{k,0}
  std::size_t superclique_count = 0;  // c_{k+1}
  std::optional<LowerBoundCheck> lower;
};

BoundReport bound_report(const Graph& g, std::size_t k);
BoundReport bound_report(const Graph& g, const CliqueLayer& layer, const Components& components);

/// K_{1,n-1}; K_1 counts as the degenerate star.
bool is_star(const Graph& g);

/// Exact comparison of the geometric and harmonic means, done on k-th
/// powers so no roots are taken.
struct MeanComparison {
  Rational gm_power;  // product of the values
  Rational hm_power;  // (k / sum of reciprocals)^k
  bool holds = false;
  bool equality = false;
};

/// Throws DomainError for an empty list or a non-positive value.
MeanComparison gm_hm_check(std::span<const Rational> values);

}  // namespace cliqueidx

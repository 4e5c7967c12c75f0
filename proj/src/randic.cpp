#include "cliqueidx/randic.hpp"

#include <algorithm>
#include <cmath>

namespace cliqueidx {

std::string to_string(const Rational& r) {
  Rational canonical(r);
  canonical.canonicalize();
  return canonical.get_str();
}

void WeightFunction::set(const Clique& q, Rational weight) {
  weight.canonicalize();
  if (sgn(weight) < 0) {
    throw DomainError("weight of " + to_string(q) + " is negative: " + to_string(weight));
  }
  weights_.insert_or_assign(q, std::move(weight));
}

const Rational& WeightFunction::at(const Clique& q) const {
  const auto it = weights_.find(q);
  if (it == weights_.end()) {
    throw UndefinedWeight("weight function is undefined on clique " + to_string(q));
  }
  return it->second;
}

WeightFunction WeightFunction::scaled(const Rational& factor) const {
  WeightFunction out;
  for (const auto& [q, w] : weights_) {
    out.set(q, w * factor);
  }
  return out;
}

WeightFunction random_weight_function(std::span<const Clique> cliques, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> draw(1, 1000);
  WeightFunction h;
  for (const auto& q : cliques) {
    const long num = draw(rng);
    const long den = draw(rng);
    h.set(q, Rational(num, den));
  }
  return h;
}

std::string_view to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::handshake:
      return "handshake";
    case IdentityKind::squared_handshake:
      return "squared_handshake";
    case IdentityKind::reciprocal:
      return "reciprocal";
    case IdentityKind::matrix_sums:
      return "matrix_sums";
  }
  return "unknown";
}

namespace {

IdentityReport make_report(Rational lhs, Rational rhs, std::size_t k, IdentityKind kind) {
  lhs.canonicalize();
  rhs.canonicalize();
  IdentityReport report;
  report.holds = lhs == rhs;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.k = k;
  report.kind = kind;
  return report;
}

}  // namespace

double randic_index(const CliqueLayer& layer) {
  double sum = 0.0;
  for (std::size_t j = 0; j < layer.supercliques().size(); ++j) {
    double product = 1.0;
    for (const auto i : layer.facet_indices(j)) {
      product *= static_cast<double>(layer.values()[i]);
    }
    sum += 1.0 / std::sqrt(product);
  }
  return sum;
}

double randic_index(const Graph& g, std::size_t k) { return randic_index(CliqueLayer(g, k)); }

std::vector<Rational> weights_for(const WeightFunction& h, std::span<const Clique> cliques) {
  std::vector<Rational> out;
  out.reserve(cliques.size());
  for (const auto& q : cliques) {
    out.push_back(h.at(q));
  }
  return out;
}

IdentityReport clique_handshake_identity(const CliqueLayer& layer, std::span<const Rational> weights) {
  if (weights.size() != layer.cliques().size()) {
    throw std::invalid_argument("weight vector does not match the k-clique list");
  }
  Rational lhs = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    lhs += weights[i] * layer.values()[i];
  }
  Rational rhs = 0;
  for (std::size_t j = 0; j < layer.supercliques().size(); ++j) {
    for (const auto i : layer.facet_indices(j)) {
      rhs += weights[i];
    }
  }
  return make_report(std::move(lhs), std::move(rhs), layer.order(), IdentityKind::handshake);
}

IdentityReport clique_handshake_identity(const CliqueLayer& layer, const WeightFunction& h) {
  return clique_handshake_identity(layer, weights_for(h, layer.cliques()));
}

IdentityReport clique_handshake_identity(const Graph& g, const WeightFunction& h, std::size_t k) {
  return clique_handshake_identity(CliqueLayer(g, k), h);
}

// Integer-valued weights keep both sides in machine integers; the sums at
// the supported graph sizes are far below 2^63.
IdentityReport unit_handshake_identity(const CliqueLayer& layer) {
  long lhs = 0;
  for (const auto v : layer.values()) {
    lhs += static_cast<long>(v);
  }
  long rhs = 0;
  for (std::size_t j = 0; j < layer.supercliques().size(); ++j) {
    rhs += static_cast<long>(layer.facet_indices(j).size());
  }
  return make_report(Rational(lhs), Rational(rhs), layer.order(), IdentityKind::handshake);
}

IdentityReport squared_handshake_identity(const CliqueLayer& layer) {
  long lhs = 0;
  for (const auto v : layer.values()) {
    lhs += static_cast<long>(v * v);
  }
  long rhs = 0;
  for (std::size_t j = 0; j < layer.supercliques().size(); ++j) {
    for (const auto i : layer.facet_indices(j)) {
      rhs += static_cast<long>(layer.values()[i]);
    }
  }
  return make_report(Rational(lhs), Rational(rhs), layer.order(), IdentityKind::squared_handshake);
}

IdentityReport reciprocal_identity(const CliqueLayer& layer) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < layer.supercliques().size(); ++j) {
    for (const auto i : layer.facet_indices(j)) {
      // A facet always has the dropped vertex as a common neighbor.
      lhs += Rational(1, static_cast<unsigned long>(layer.values()[i]));
    }
  }
  const auto total = static_cast<long>(layer.cliques().size());
  const auto isolated = static_cast<long>(layer.isolated_count());
  return make_report(std::move(lhs), Rational(total - isolated), layer.order(), IdentityKind::reciprocal);
}

IdentityReport reciprocal_identity(const Graph& g, std::size_t k) {
  return reciprocal_identity(CliqueLayer(g, k));
}

IncidenceMatrix::IncidenceMatrix(const Graph& g, std::size_t k)
    : k_(k), rows_(enumerate_cliques(g, k)), columns_(enumerate_cliques(g, k + 1)) {
  offsets_.reserve(columns_.size() + 1);
  offsets_.push_back(0);
  row_nonzeros_.assign(rows_.size(), 0);
  for (const auto& column : columns_) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto sub = rows_[i].vertices();
      const auto super = column.vertices();
      if (std::includes(super.begin(), super.end(), sub.begin(), sub.end())) {
        entries_.push_back(i);
        ++row_nonzeros_[i];
      }
    }
    offsets_.push_back(entries_.size());
  }
}

IncidenceMatrix::Sums IncidenceMatrix::sums(std::span<const Rational> weights) const {
  if (weights.size() != rows_.size()) {
    throw std::invalid_argument("weight vector does not match the matrix rows");
  }
  Sums s;
  s.row.assign(rows_.size(), Rational(0));
  s.column.assign(columns_.size(), Rational(0));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto i : column_entries(j)) {
      s.row[i] += weights[i];
      s.column[j] += weights[i];
    }
  }
  return s;
}

IdentityReport incidence_matrix_check(const IncidenceMatrix& matrix, std::span<const Rational> weights) {
  const auto s = matrix.sums(weights);
  Rational row_total = 0;
  for (const auto& r : s.row) {
    row_total += r;
  }
  Rational column_total = 0;
  for (const auto& c : s.column) {
    column_total += c;
  }
  return make_report(std::move(row_total), std::move(column_total), matrix.order(),
                     IdentityKind::matrix_sums);
}

IdentityReport incidence_matrix_check(const Graph& g, const WeightFunction& h, std::size_t k) {
  const IncidenceMatrix matrix(g, k);
  return incidence_matrix_check(matrix, weights_for(h, matrix.rows()));
}

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 1) {
    return true;
  }
  if (n < 2 || g.size() != n - 1) {
    return false;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      return true;
    }
  }
  return false;
}

BoundReport bound_report(const Graph& g, const CliqueLayer& layer, const Components& components) {
  BoundReport r;
  r.k = layer.order();
  r.index_value = randic_index(layer);
  r.clique_count = layer.cliques().size();
  r.isolated_count = layer.isolated_count();
  r.superclique_count = layer.supercliques().size();
  r.bound_value = static_cast<double>(r.clique_count) / static_cast<double>(r.k + 1);
  r.slack = r.bound_value - r.index_value;
  r.equality_numeric = std::abs(r.slack) <= kTolerance;
  r.per_component_regular = component_regularity(components, layer.cliques(), layer.values());
  r.equality_structural =
      r.isolated_count == 0 &&
      std::all_of(r.per_component_regular.begin(), r.per_component_regular.end(), [](bool b) { return b; });
  if (r.k == 1 && components.count() == 1) {
    LowerBoundCheck lower;
    lower.bound = std::sqrt(static_cast<double>(g.order() - 1));
    lower.slack = r.index_value - lower.bound;
    lower.equality_numeric = std::abs(lower.slack) <= kTolerance;
    lower.is_star = is_star(g);
    r.lower = lower;
  }
  return r;
}

BoundReport bound_report(const Graph& g, std::size_t k) {
  return bound_report(g, CliqueLayer(g, k), connected_components(g));
}

MeanComparison gm_hm_check(std::span<const Rational> values) {
  if (values.empty()) {
    throw DomainError("geometric/harmonic mean comparison needs at least one value");
  }
  Rational product = 1;
  Rational reciprocal_sum = 0;
  for (const auto& a : values) {
    if (sgn(a) <= 0) {
      throw DomainError("mean comparison requires positive values, got " + to_string(a));
    }
    product *= a;
    reciprocal_sum += 1 / a;
  }
  const Rational hm = Rational(static_cast<long>(values.size())) / reciprocal_sum;
  Rational hm_power = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    hm_power *= hm;
  }
  MeanComparison out;
  out.holds = product >= hm_power;
  out.equality = product == hm_power;
  out.gm_power = std::move(product);
  out.hm_power = std::move(hm_power);
  return out;
}

}  // namespace cliqueidx

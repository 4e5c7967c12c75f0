#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliqueidx/randic.hpp"

namespace cliqueidx {

struct ScanOptions {
  std::size_t n_min = 0;  // defaults to n_max when 0
  std::size_t n_max = 0;
  std::size_t k_max = 1;
  std::size_t jobs = 0;  // 0 = hardware concurrency
};

/// One graph at one clique order, as recorded in the report lists.
struct ScanCase {
  std::string graph6;
  std::size_t n = 0;
  std::size_t k = 0;
  double index_value = 0.0;
  double bound_value = 0.0;
  std::size_t clique_count = 0;
  std::size_t isolated_count = 0;
  std::vector<bool> per_component_regular;
  bool equality_structural = false;
  bool equality_numeric = false;
};

struct IdentityFailure {
  std::string graph6;
  IdentityReport report;
};

struct BoundViolation {
  std::string graph6;
  std::size_t k = 0;
  std::string kind;  // "upper" or "lower"
  double index_value = 0.0;
  double bound_value = 0.0;
};

/// Lower bound at k = 1: numeric equality with sqrt(n-1) versus being a star.
struct StarMismatch {
  std::string graph6;
  bool equality_numeric = false;
  bool is_star = false;
};

struct OrderSummary {
  std::size_t k = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t vacuous = 0;  // c_k = 0, so 0 <= 0 trivially
  std::uint64_t equality_numeric = 0;
  std::uint64_t equality_structural = 0;
  std::uint64_t mismatches = 0;
};

struct ScanReport {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t k_max = 0;
  std::uint64_t graphs_scanned = 0;
  std::vector<IdentityFailure> identity_failures;
  std::vector<BoundViolation> bound_violations;
  /// Numeric equality with c_k >= 1.
  std::vector<ScanCase> equality_cases;
  /// Structural and numeric equality flags disagree.
  std::vector<ScanCase> characterization_mismatches;
  std::vector<StarMismatch> star_mismatches;
  std::vector<OrderSummary> summary;

  bool clean() const { return identity_failures.empty() && bound_violations.empty(); }
};

/// Checks every labeled graph with n_min <= n <= n_max at every k in
/// 1..k_max: reciprocal, unit and squared handshakes, the upper bound, and
/// (k = 1, connected) the star lower bound. Work is sharded by edge-mask
/// range and merged in mask order, so the report does not depend on jobs.
/// Throws GuardError when n_max > 7, k_max > n_max, or k_max == 0.
ScanReport scan(const ScanOptions& options);
ScanReport scan(std::size_t n_max, std::size_t k_max, std::size_t jobs = 0);

/// Checks one graph at one order, appending findings to `report` and
/// counting it in the summary for k. graphs_scanned is left alone.
void scan_graph(const Graph& g, std::size_t k, ScanReport& report);

nlohmann::ordered_json to_json(const ScanReport& report);
std::string render_text(const ScanReport& report);

}  // namespace cliqueidx

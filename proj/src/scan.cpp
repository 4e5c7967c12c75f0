#include "cliqueidx/scan.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cliqueidx/graph_io.hpp"
#include "cliqueidx/oracle.hpp"
#include "cliqueidx/parallel.hpp"

namespace cliqueidx {

namespace {

constexpr std::uint64_t kShardMasks = std::uint64_t{1} << 12;

OrderSummary& summary_for(ScanReport& report, std::size_t k) {
  while (report.summary.size() < k) {
    report.summary.push_back(OrderSummary{report.summary.size() + 1});
  }
  return report.summary[k - 1];
}

class LazyGraph6 {
 public:
  explicit LazyGraph6(const Graph& g) : g_(g) {}
  const std::string& get() {
    if (!value_) {
      value_ = to_graph6(g_);
    }
    return *value_;
  }

 private:
  const Graph& g_;
  std::optional<std::string> value_;
};

void check_identity(IdentityReport r, LazyGraph6& name, ScanReport& report) {
  if (!r.holds) {
    report.identity_failures.push_back({name.get(), std::move(r)});
  }
}

void scan_at(const Graph& g, const Components& components, std::size_t k, LazyGraph6& name,
             ScanReport& report) {
  const CliqueLayer layer(g, k);
  check_identity(reciprocal_identity(layer), name, report);
  check_identity(unit_handshake_identity(layer), name, report);
  check_identity(squared_handshake_identity(layer), name, report);

  const BoundReport bound = bound_report(g, layer, components);
  if (bound.slack < -kTolerance) {
    report.bound_violations.push_back({name.get(), k, "upper", bound.index_value, bound.bound_value});
  }
  if (bound.lower) {
    if (bound.lower->slack < -kTolerance) {
      report.bound_violations.push_back({name.get(), k, "lower", bound.index_value, bound.lower->bound});
    }
    if (bound.lower->equality_numeric != bound.lower->is_star) {
      report.star_mismatches.push_back({name.get(), bound.lower->equality_numeric, bound.lower->is_star});
    }
  }

  auto& summary = summary_for(report, k);
  ++summary.evaluated;
  if (bound.clique_count == 0) {
    ++summary.vacuous;
    return;
  }
  summary.equality_numeric += bound.equality_numeric ? 1 : 0;
  summary.equality_structural += bound.equality_structural ? 1 : 0;
  const bool mismatch = bound.equality_numeric != bound.equality_structural;
  if (!bound.equality_numeric && !mismatch) {
    return;
  }
  ScanCase c;
  c.graph6 = name.get();
  c.n = g.order();
  c.k = k;
  c.index_value = bound.index_value;
  c.bound_value = bound.bound_value;
  c.clique_count = bound.clique_count;
  c.isolated_count = bound.isolated_count;
  c.per_component_regular = bound.per_component_regular;
  c.equality_structural = bound.equality_structural;
  c.equality_numeric = bound.equality_numeric;
  if (mismatch) {
    ++summary.mismatches;
    report.characterization_mismatches.push_back(c);
  }
  if (bound.equality_numeric) {
    report.equality_cases.push_back(std::move(c));
  }
}

template <typename T>
void append(std::vector<T>& into, std::vector<T>& from) {
  std::move(from.begin(), from.end(), std::back_inserter(into));
}

void merge(ScanReport& into, ScanReport& shard) {
  into.graphs_scanned += shard.graphs_scanned;
  append(into.identity_failures, shard.identity_failures);
  append(into.bound_violations, shard.bound_violations);
  append(into.equality_cases, shard.equality_cases);
  append(into.characterization_mismatches, shard.characterization_mismatches);
  append(into.star_mismatches, shard.star_mismatches);
  for (const auto& s : shard.summary) {
    auto& t = summary_for(into, s.k);
    t.evaluated += s.evaluated;
    t.vacuous += s.vacuous;
    t.equality_numeric += s.equality_numeric;
    t.equality_structural += s.equality_structural;
    t.mismatches += s.mismatches;
  }
}

}  // namespace

void scan_graph(const Graph& g, std::size_t k, ScanReport& report) {
  LazyGraph6 name(g);
  scan_at(g, connected_components(g), k, name, report);
}

ScanReport scan(const ScanOptions& options) {
  const std::size_t n_min = options.n_min == 0 ? options.n_max : options.n_min;
  if (options.n_max > kAllGraphsMaxOrder) {
    throw GuardError("scan supports n_max <= " + std::to_string(kAllGraphsMaxOrder) + " (got " +
                     std::to_string(options.n_max) + ")");
  }
  if (options.k_max == 0 || options.k_max > options.n_max) {
    throw GuardError("scan needs 1 <= k_max <= n_max (got k_max = " + std::to_string(options.k_max) + ")");
  }
  if (n_min > options.n_max) {
    throw GuardError("scan needs n_min <= n_max");
  }

  ScanReport report;
  report.n_min = n_min;
  report.n_max = options.n_max;
  report.k_max = options.k_max;
  for (std::size_t k = 1; k <= options.k_max; ++k) {
    summary_for(report, k);
  }

  for (std::size_t n = n_min; n <= options.n_max; ++n) {
    const auto graphs = all_graphs(n);
    const std::uint64_t shards = (graphs.count() + kShardMasks - 1) / kShardMasks;
    std::vector<ScanReport> partial(static_cast<std::size_t>(shards));
    parallel_for(partial.size(), options.jobs, [&](std::size_t s) {
      const std::uint64_t begin = s * kShardMasks;
      const std::uint64_t end = std::min(graphs.count(), begin + kShardMasks);
      auto& out = partial[s];
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const Graph g = graphs.at(mask);
        const Components components = connected_components(g);
        LazyGraph6 name(g);
        for (std::size_t k = 1; k <= options.k_max; ++k) {
          scan_at(g, components, k, name, out);
        }
        ++out.graphs_scanned;
      }
    });
    for (auto& p : partial) {
      merge(report, p);
    }
  }
  return report;
}

ScanReport scan(std::size_t n_max, std::size_t k_max, std::size_t jobs) {
  return scan(ScanOptions{n_max, n_max, k_max, jobs});
}

namespace {

nlohmann::ordered_json case_json(const ScanCase& c) {
  nlohmann::ordered_json j;
  j["graph6"] = c.graph6;
  j["n"] = c.n;
  j["k"] = c.k;
  j["index"] = c.index_value;
  j["bound"] = c.bound_value;
  j["c_k"] = c.clique_count;
  j["c_k0"] = c.isolated_count;
  j["components_regular"] = c.per_component_regular;
  j["equality_structural"] = c.equality_structural;
  j["equality_numeric"] = c.equality_numeric;
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const ScanReport& report) {
  nlohmann::ordered_json j;
  j["n_range"] = {report.n_min, report.n_max};
  j["k_range"] = {1, report.k_max};
  j["graphs_scanned"] = report.graphs_scanned;
  j["clean"] = report.clean();

  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.identity_failures) {
    failures.push_back({{"graph6", f.graph6},
                        {"k", f.report.k},
                        {"identity", to_string(f.report.kind)},
                        {"lhs", to_string(f.report.lhs)},
                        {"rhs", to_string(f.report.rhs)}});
  }
  j["identity_failures"] = std::move(failures);

  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : report.bound_violations) {
    violations.push_back({{"graph6", v.graph6},
                          {"k", v.k},
                          {"kind", v.kind},
                          {"index", v.index_value},
                          {"bound", v.bound_value}});
  }
  j["bound_violations"] = std::move(violations);

  auto summary = nlohmann::ordered_json::array();
  for (const auto& s : report.summary) {
    summary.push_back({{"k", s.k},
                       {"evaluated", s.evaluated},
                       {"vacuous", s.vacuous},
                       {"equality_numeric", s.equality_numeric},
                       {"equality_structural", s.equality_structural},
                       {"mismatches", s.mismatches}});
  }
  j["summary"] = std::move(summary);

  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : report.equality_cases) {
    cases.push_back(case_json(c));
  }
  j["equality_cases"] = std::move(cases);

  auto mismatches = nlohmann::ordered_json::array();
  for (const auto& c : report.characterization_mismatches) {
    mismatches.push_back(case_json(c));
  }
  j["characterization_mismatches"] = std::move(mismatches);

  auto stars = nlohmann::ordered_json::array();
  for (const auto& s : report.star_mismatches) {
    stars.push_back({{"graph6", s.graph6}, {"equality_numeric", s.equality_numeric}, {"is_star", s.is_star}});
  }
  j["star_mismatches"] = std::move(stars);
  return j;
}

std::string render_text(const ScanReport& report) {
  constexpr std::size_t kListLimit = 50;
  std::ostringstream out;
  out << "orders scanned      " << report.n_min << ".." << report.n_max << "\n"
      << "clique orders       1.." << report.k_max << "\n"
      << "graphs scanned      " << report.graphs_scanned << "\n"
      << "identity failures   " << report.identity_failures.size() << "\n"
      << "bound violations    " << report.bound_violations.size() << "\n"
      << "star mismatches     " << report.star_mismatches.size() << "\n\n";

  out << std::setw(4) << "k" << std::setw(12) << "evaluated" << std::setw(10) << "vacuous" << std::setw(10)
      << "eq_num" << std::setw(10) << "eq_struct" << std::setw(12) << "mismatches" << "\n";
  for (const auto& s : report.summary) {
    out << std::setw(4) << s.k << std::setw(12) << s.evaluated << std::setw(10) << s.vacuous << std::setw(10)
        << s.equality_numeric << std::setw(10) << s.equality_structural << std::setw(12) << s.mismatches
        << "\n";
  }

  for (const auto& f : report.identity_failures) {
    out << "FAIL identity " << to_string(f.report.kind) << " k=" << f.report.k << " " << f.graph6
        << " lhs=" << to_string(f.report.lhs) << " rhs=" << to_string(f.report.rhs) << "\n";
  }
  for (const auto& v : report.bound_violations) {
    out << "FAIL bound " << v.kind << " k=" << v.k << " " << v.graph6 << " index=" << std::setprecision(17)
        << v.index_value << " bound=" << v.bound_value << "\n";
  }

  auto list = [&](const char* title, const std::vector<ScanCase>& cases) {
    out << "\n" << title << " (" << cases.size() << ")\n";
    for (std::size_t i = 0; i < cases.size() && i < kListLimit; ++i) {
      const auto& c = cases[i];
      out << "  " << std::left << std::setw(12) << c.graph6 << std::right << " k=" << c.k
          << " index=" << std::setprecision(12) << c.index_value << " bound=" << c.bound_value
          << " structural=" << (c.equality_structural ? "yes" : "no")
          << " numeric=" << (c.equality_numeric ? "yes" : "no") << "\n";
    }
    if (cases.size() > kListLimit) {
      out << "  ... " << cases.size() - kListLimit << " more (use --json for the full list)\n";
    }
  };
  list("equality cases", report.equality_cases);
  list("characterization mismatches", report.characterization_mismatches);
  return out.str();
}

}  // namespace cliqueidx

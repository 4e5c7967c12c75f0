#include "cliqueidx/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliqueidx/graph_io.hpp"
#include "cliqueidx/oracle.hpp"
#include "cliqueidx/randic.hpp"
#include "cliqueidx/scan.hpp"

namespace cliqueidx::cli {

namespace {

using Json = nlohmann::ordered_json;

// Shortest decimal that round-trips to the same double.
std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, ptr);
  if (s.find_first_of(".e") == std::string::npos && s.find_first_of("ni") == std::string::npos) {
    s += ".0";
  }
  return s;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;  // empty or "-" means stdin
  std::string format_name;
};

Graph load_graph(const GraphSource& src, std::istream& in, std::ostream& err) {
  std::string text;
  GraphFormat format = GraphFormat::EdgeList;
  if (src.path.empty() || src.path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(src.path, std::ios::binary);
    if (!file) {
      throw InputError("cannot open " + src.path);
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
    format = format_from_path(src.path);
  }
  if (!src.format_name.empty()) {
    format = *format_from_name(src.format_name);
  }
  std::vector<std::string> warnings;
  try {
    Graph g = parse(format, text, &warnings);
    for (const auto& w : warnings) {
      err << "warning: " << w << "\n";
    }
    return g;
  } catch (const ParseError& e) {
    throw InputError(std::string(src.path.empty() ? "<stdin>" : src.path) + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(std::string(src.path.empty() ? "<stdin>" : src.path) + ": " + e.what());
  }
}

// Writes to --out when given, else to `out`.
void emit(const std::string& document, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << document;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw InputError("cannot write " + out_path);
  }
  file << document;
}

std::string render_pairs(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) {
    width = std::max(width, key.size());
  }
  std::ostringstream s;
  for (const auto& [key, value] : rows) {
    s << std::left << std::setw(static_cast<int>(width + 2)) << key << value << "\n";
  }
  return s.str();
}

std::string verdicts(const std::vector<bool>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i == 0 ? "" : ",");
    s += v[i] ? "true" : "false";
  }
  return s + "]";
}

struct CommonFlags {
  GraphSource source;
  std::size_t k = 1;
  bool json = false;
  std::string out_path;
};

void add_input_flags(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("input", flags.source.path, "Graph file (default: stdin)");
  cmd.add_option("--format", flags.source.format_name, "Input format")
      ->check(CLI::IsMember({"edgelist", "dimacs", "graph6"}));
  cmd.add_option("--k", flags.k, "Clique order k")->check(CLI::PositiveNumber);
  cmd.add_flag("--json", flags.json, "Machine-readable JSON output");
  cmd.add_option("--out", flags.out_path, "Write output to this path");
}

int compute_command(const CommonFlags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(flags.source, in, err);
  const BoundReport r = bound_report(g, flags.k);
  if (flags.json) {
    Json j;
    j["command"] = "compute";
    j["n"] = g.order();
    j["m"] = g.size();
    j["k"] = r.k;
    j["index"] = r.index_value;
    j["c_k"] = r.clique_count;
    j["c_k0"] = r.isolated_count;
    j["c_k1"] = r.superclique_count;
    j["bound"] = r.bound_value;
    j["slack"] = r.slack;
    j["equality_numeric"] = r.equality_numeric;
    j["equality_structural"] = r.equality_structural;
    j["components_regular"] = r.per_component_regular;
    if (r.lower) {
      j["lower_bound"] = {{"bound", r.lower->bound},
                          {"slack", r.lower->slack},
                          {"equality_numeric", r.lower->equality_numeric},
                          {"is_star", r.lower->is_star}};
    }
    emit(j.dump(2) + "\n", flags.out_path, out);
    return kSuccess;
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"n", std::to_string(g.order())},
      {"m", std::to_string(g.size())},
      {"k", std::to_string(r.k)},
      {"index", shortest(r.index_value)},
      {"c_k", std::to_string(r.clique_count)},
      {"c_k0", std::to_string(r.isolated_count)},
      {"c_k+1", std::to_string(r.superclique_count)},
      {"bound", shortest(r.bound_value)},
      {"slack", shortest(r.slack)},
      {"equality_numeric", r.equality_numeric ? "true" : "false"},
      {"equality_structural", r.equality_structural ? "true" : "false"},
      {"components_regular", verdicts(r.per_component_regular)},
  };
  if (r.lower) {
    rows.emplace_back("lower_bound", shortest(r.lower->bound));
    rows.emplace_back("lower_slack", shortest(r.lower->slack));
    rows.emplace_back("is_star", r.lower->is_star ? "true" : "false");
  }
  emit(render_pairs(rows), flags.out_path, out);
  return kSuccess;
}

struct NamedIdentity {
  std::string name;
  IdentityReport report;
};

int verify_command(const CommonFlags& flags, std::size_t trials, std::uint64_t seed, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(flags.source, in, err);
  const CliqueLayer layer(g, flags.k);
  const IncidenceMatrix matrix(g, flags.k);

  std::vector<NamedIdentity> results;
  results.push_back({"handshake[unit]", unit_handshake_identity(layer)});
  results.push_back({"handshake[squared]", squared_handshake_identity(layer)});
  const std::vector<Rational> ones(layer.cliques().size(), Rational(1));
  results.push_back({"matrix[unit]", incidence_matrix_check(matrix, ones)});
  std::mt19937_64 rng(seed);
  for (std::size_t t = 1; t <= trials; ++t) {
    const auto h = random_weight_function(layer.cliques(), rng);
    results.push_back({"handshake[random " + std::to_string(t) + "]", clique_handshake_identity(layer, h)});
    results.push_back({"matrix[random " + std::to_string(t) + "]",
                       incidence_matrix_check(matrix, weights_for(h, matrix.rows()))});
  }
  results.push_back({"reciprocal", reciprocal_identity(layer)});

  const auto failed = std::find_if(results.begin(), results.end(),
                                   [](const NamedIdentity& r) { return !r.report.holds; });
  if (flags.json) {
    Json j;
    j["command"] = "verify";
    j["n"] = g.order();
    j["m"] = g.size();
    j["k"] = flags.k;
    j["trials"] = trials;
    j["seed"] = seed;
    j["all_hold"] = failed == results.end();
    auto list = Json::array();
    for (const auto& r : results) {
      list.push_back({{"name", r.name},
                      {"identity", to_string(r.report.kind)},
                      {"lhs", to_string(r.report.lhs)},
                      {"rhs", to_string(r.report.rhs)},
                      {"holds", r.report.holds}});
    }
    j["identities"] = std::move(list);
    emit(j.dump(2) + "\n", flags.out_path, out);
  } else {
    std::size_t width = 0;
    for (const auto& r : results) {
      width = std::max(width, r.name.size());
    }
    std::ostringstream s;
    s << "n " << g.order() << "  m " << g.size() << "  k " << flags.k << "\n";
    for (const auto& r : results) {
      s << std::left << std::setw(static_cast<int>(width + 2)) << r.name << (r.report.holds ? "holds " : "FAILS ")
        << "lhs " << to_string(r.report.lhs) << "  rhs " << to_string(r.report.rhs) << "\n";
    }
    emit(s.str(), flags.out_path, out);
  }
  if (failed != results.end()) {
    err << "identity failed: " << failed->name << " (k=" << flags.k << "): lhs " << to_string(failed->report.lhs)
        << " != rhs " << to_string(failed->report.rhs) << "\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

int scan_command(const ScanOptions& options, bool json, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  ScanReport report;
  try {
    report = scan(options);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  emit(json ? to_json(report).dump(2) + "\n" : render_text(report), out_path, out);
  if (!report.clean()) {
    for (const auto& f : report.identity_failures) {
      err << "identity failure: " << to_string(f.report.kind) << " k=" << f.report.k << " graph6=" << f.graph6
          << "\n";
    }
    for (const auto& v : report.bound_violations) {
      err << "bound violation: " << v.kind << " k=" << v.k << " graph6=" << v.graph6 << "\n";
    }
    return kVerificationFailed;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique values, Randic-type clique indices and handshake identities", "cliqueidx"};
  app.require_subcommand(1);

  CommonFlags compute_flags;
  auto* compute = app.add_subcommand("compute", "Index, clique counts and upper bound for one graph");
  add_input_flags(*compute, compute_flags);

  CommonFlags verify_flags;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Check the handshake, reciprocal and incidence identities exactly");
  add_input_flags(*verify, verify_flags);
  verify->add_option("--trials", trials, "Random weight functions to test");
  verify->add_option("--seed", seed, "Seed for the random weights");

  ScanOptions scan_options;
  scan_options.k_max = 1;
  bool scan_json = false;
  std::string scan_out;
  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive check over all labeled graphs");
  scan_cmd->add_option("--n-max", scan_options.n_max, "Largest graph order (<= 7)")->required();
  scan_cmd->add_option("--n-min", scan_options.n_min, "Smallest graph order (default: n-max)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--k-max", scan_options.k_max, "Largest clique order")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--jobs", scan_options.jobs, "Worker threads (default: all cores)");
  scan_cmd->add_flag("--json", scan_json, "Machine-readable JSON output");
  scan_cmd->add_option("--out", scan_out, "Write output to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (*compute) {
      return compute_command(compute_flags, in, out, err);
    }
    if (*verify) {
      return verify_command(verify_flags, trials, seed, in, out, err);
    }
    return scan_command(scan_options, scan_json, scan_out, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cliqueidx::cli

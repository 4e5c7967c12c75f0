#include "cliqueidx/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace cliqueidx {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kGraph6ShortLimit = 62;
constexpr std::size_t kGraph6MediumLimit = 258047;
constexpr std::uint64_t kGraph6LongLimit = 68719476735ULL;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) {
      break;
    }
    auto end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) {
      end = line.size();
    }
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

// Calls fn(line_number, line) for each line; handles a missing final newline.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    fn(++number, text.substr(pos, end - pos));
    pos = end + 1;
  }
}

std::uint64_t number(std::size_t line, std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected a non-negative integer for " + std::string(what) + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

// Bounds are checked here so the error carries a line number; Graph
// construction re-checks.
Edge checked_edge(std::size_t line, std::uint64_t u, std::uint64_t v, std::uint64_t n, bool one_based) {
  const std::uint64_t lo = one_based ? 1 : 0;
  const std::uint64_t hi = one_based ? n : n - 1;
  if (u < lo || v < lo || (n == 0) || u > hi || v > hi) {
    throw ParseError(line, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") references a vertex outside the declared range");
  }
  if (u == v) {
    throw ParseError(line, "self-loop on vertex " + std::to_string(u));
  }
  const std::uint64_t shift = one_based ? 1 : 0;
  return {static_cast<Vertex>(u - shift), static_cast<Vertex>(v - shift)};
}

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> declared;
  bool seen_content = false;
  std::vector<std::pair<std::size_t, std::pair<std::uint64_t, std::uint64_t>>> raw;
  std::uint64_t max_id = 0;
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    if (const auto hash = content.find('#'); hash != std::string_view::npos) {
      content = content.substr(0, hash);
    }
    const auto parts = tokens(content);
    if (parts.empty()) {
      return;
    }
    const bool first = !seen_content;
    seen_content = true;
    if (parts[0] == "n") {
      if (!first) {
        throw ParseError(line, "vertex-count line 'n <count>' must come first");
      }
      if (parts.size() != 2) {
        throw ParseError(line, "expected 'n <count>'");
      }
      declared = number(line, parts[1], "vertex count");
      if (*declared > kMaxVertices) {
        throw ParseError(line, "vertex count too large");
      }
      return;
    }
    if (parts.size() != 2) {
      throw ParseError(line, "expected two vertex ids, got " + std::to_string(parts.size()) + " tokens");
    }
    const auto u = number(line, parts[0], "vertex id");
    const auto v = number(line, parts[1], "vertex id");
    if (u >= kMaxVertices || v >= kMaxVertices) {
      throw ParseError(line, "vertex id too large");
    }
    max_id = std::max({max_id, u, v});
    raw.push_back({line, {u, v}});
  });
  const std::uint64_t n = declared ? *declared : (raw.empty() ? 0 : max_id + 1);
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [line, e] : raw) {
    edges.push_back(checked_edge(line, e.first, e.second, n, false));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<std::uint64_t> n;
  std::uint64_t declared_m = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    const auto parts = tokens(content);
    if (parts.empty() || parts[0] == "c") {
      return;
    }
    if (parts[0] == "p") {
      if (n) {
        throw ParseError(line, "duplicate 'p' header");
      }
      if (parts.size() != 4 || parts[1] != "edge") {
        throw ParseError(line, "malformed header, expected 'p edge <n> <m>'");
      }
      n = number(line, parts[2], "vertex count");
      if (*n > kMaxVertices) {
        throw ParseError(line, "vertex count too large");
      }
      declared_m = number(line, parts[3], "edge count");
      header_line = line;
      return;
    }
    if (parts[0] == "e") {
      if (!n) {
        throw ParseError(line, "edge line before the 'p edge' header");
      }
      if (parts.size() != 3) {
        throw ParseError(line, "expected 'e <u> <v>'");
      }
      edges.push_back(checked_edge(line, number(line, parts[1], "vertex id"),
                                   number(line, parts[2], "vertex id"), *n, true));
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(parts[0]) + "'");
  });
  if (!n) {
    throw ParseError(1, "missing 'p edge <n> <m>' header");
  }
  Graph g(static_cast<std::size_t>(*n), edges);
  if (warnings != nullptr && (declared_m != edges.size() || g.size() != edges.size())) {
    warnings->push_back("line " + std::to_string(header_line) + ": header declares " +
                        std::to_string(declared_m) + " edges, found " + std::to_string(edges.size()) +
                        " edge lines (" + std::to_string(g.size()) + " distinct)");
  }
  return g;
}

// Graph6 size prefix N(n).
void append_size(std::string& out, std::uint64_t n) {
  if (n <= kGraph6ShortLimit) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  int groups = 3;
  if (n <= kGraph6MediumLimit) {
    out.push_back(static_cast<char>(126));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    groups = 6;
  }
  for (int g = groups - 1; g >= 0; --g) {
    out.push_back(static_cast<char>(((n >> (6 * g)) & 0x3F) + 63));
  }
}

std::uint64_t read_size(std::size_t line, std::string_view s, std::size_t& pos) {
  auto byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size()) {
      throw ParseError(line, "graph6 string truncated in size prefix");
    }
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) {
      throw ParseError(line, "graph6 byte out of range 63..126 at offset " + std::to_string(i));
    }
    return c - 63U;
  };
  if (byte(0) != 63) {
    pos = 1;
    return byte(0);
  }
  std::size_t start = 1;
  int groups = 3;
  if (byte(1) == 63) {
    start = 2;
    groups = 6;
  }
  std::uint64_t n = 0;
  for (int g = 0; g < groups; ++g) {
    n = (n << 6) | byte(start + static_cast<std::size_t>(g));
  }
  pos = start + static_cast<std::size_t>(groups);
  const bool canonical = groups == 3 ? n > kGraph6ShortLimit : n > kGraph6MediumLimit;
  if (!canonical) {
    throw ParseError(line, "graph6 size prefix is not in its shortest form");
  }
  return n;
}

Graph decode_graph6(std::size_t line, std::string_view s) {
  std::size_t pos = 0;
  const auto n = read_size(line, s, pos);
  if (n > kMaxVertices) {
    throw ParseError(line, "graph6 order too large");
  }
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes) {
    throw ParseError(line, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                               std::to_string(bytes) + " for " + std::to_string(n) + " vertices");
  }
  for (std::uint64_t i = 0; i < bytes; ++i) {
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if (c < 63 || c > 126) {
      throw ParseError(line, "graph6 byte out of range 63..126 at offset " + std::to_string(pos + i));
    }
  }
  if (const auto used = bits % 6; used != 0) {
    const unsigned last = static_cast<unsigned char>(s.back()) - 63U;
    if ((last & ((1U << (6 - used)) - 1)) != 0) {
      throw ParseError(line, "graph6 padding bits must be zero");
    }
  }
  // Bits run over the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const unsigned c = static_cast<unsigned char>(s[pos + bit / 6]) - 63U;
      if (((c >> (5 - bit % 6)) & 1U) != 0) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  append_size(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  }
  return out;
}

Graph from_graph6(std::string_view encoded) {
  return decode_graph6(1, encoded);
}

Graph parse(GraphFormat format, std::string_view text, std::vector<std::string>* warnings) {
  switch (format) {
    case GraphFormat::EdgeList:
      return parse_edge_list(text);
    case GraphFormat::Dimacs:
      return parse_dimacs(text, warnings);
    case GraphFormat::Graph6: {
      std::optional<Graph> g;
      for_each_line(text, [&](std::size_t line, std::string_view content) {
        content = trim(content);
        if (line == 1 && content.starts_with(kGraph6Header)) {
          content = trim(content.substr(kGraph6Header.size()));
        }
        if (content.empty()) {
          return;
        }
        if (g) {
          throw ParseError(line, "expected a single graph6 graph, found another");
        }
        g = decode_graph6(line, content);
      });
      if (!g) {
        throw ParseError(1, "no graph6 string found");
      }
      return *std::move(g);
    }
  }
  throw std::invalid_argument("unknown graph format");
}

std::string serialize(GraphFormat format, const Graph& g) {
  std::string out;
  const auto edges = g.edges();
  switch (format) {
    case GraphFormat::EdgeList: {
      std::size_t implied = 0;
      for (const auto& [u, v] : edges) {
        implied = std::max<std::size_t>(implied, v + 1);
      }
      // Trailing isolated vertices need the explicit order line.
      if (g.order() != implied) {
        out += "n " + std::to_string(g.order()) + "\n";
      }
      for (const auto& [u, v] : edges) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
      }
      return out;
    }
    case GraphFormat::Dimacs:
      out += "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
      for (const auto& [u, v] : edges) {
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
      }
      return out;
    case GraphFormat::Graph6:
      if (g.order() > kGraph6LongLimit) {
        throw std::invalid_argument("graph too large for graph6");
      }
      return to_graph6(g) + "\n";
  }
  throw std::invalid_argument("unknown graph format");
}

std::string_view to_string(GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList:
      return "edgelist";
    case GraphFormat::Dimacs:
      return "dimacs";
    case GraphFormat::Graph6:
      return "graph6";
  }
  return "unknown";
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "edgelist") {
    return GraphFormat::EdgeList;
  }
  if (name == "dimacs") {
    return GraphFormat::Dimacs;
  }
  if (name == "graph6" || name == "g6") {
    return GraphFormat::Graph6;
  }
  return std::nullopt;
}

GraphFormat format_from_path(std::string_view path) {
  if (path.ends_with(".g6")) {
    return GraphFormat::Graph6;
  }
  if (path.ends_with(".col") || path.ends_with(".dimacs")) {
    return GraphFormat::Dimacs;
  }
  return GraphFormat::EdgeList;
}

}  // namespace cliqueidx

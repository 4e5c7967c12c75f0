#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliqueidx/graph.hpp"

namespace cliqueidx {

enum class GraphFormat { EdgeList, Dimacs, Graph6 };

/// Malformed input. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads one graph.
///
/// EdgeList: "u v" per line with 0-based ids, '#' starts a comment, blank
/// lines are skipped, and an optional first line "n <count>" fixes the
/// order (otherwise max id + 1).
/// Dimacs: "c" comments, one "p edge <n> <m>" header, then "e u v" lines
/// with 1-based ids. A wrong m is tolerated and reported in `warnings`.
/// Graph6: a single graph6 string, optionally behind ">>graph6<<".
///
/// Duplicate edges collapse; self-loops and out-of-range ids are errors.
Graph parse(GraphFormat format, std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Canonical text: edges sorted lexicographically, DIMACS ids 1-based,
/// graph6 per the standard packing. Always ends in a newline except for an
/// edge list of the empty graph on zero vertices.
std::string serialize(GraphFormat format, const Graph& g);

/// Bare graph6 string (no header, no newline).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view encoded);

std::string_view to_string(GraphFormat format);
/// "edgelist", "dimacs", "graph6" (also "g6").
std::optional<GraphFormat> format_from_name(std::string_view name);
/// .g6 -> Graph6, .col/.dimacs -> Dimacs, anything else -> EdgeList.
GraphFormat format_from_path(std::string_view path);

}  // namespace cliqueidx

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pvc4/graph.hpp"

namespace pvc4::io {

/// Text form of a graph or disjoint instance:
///
///   c <free text>        comment, kept verbatim
///   p pvc4 <n> <m>       header, exactly once, before any e/v1 line
///   e <u> <v>            edge, 1-based ids
///   v1 <u>               vertex in the forbidden set V1
///
/// Ids are 0-based in memory and 1-based on disk.
struct GraphFile {
  Graph graph;
  VertexSet v1;
  std::vector<std::string> comments;

  bool has_v1() const { return !v1.empty(); }
  friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Throws ParseError naming the offending line.
GraphFile parse(std::string_view text);

/// Canonical text: comments, header, edges sorted by (min, max), then V1
/// lines ascending. Throws std::invalid_argument if the graph has removed
/// vertices, since those ids cannot be written densely.
std::string render(const GraphFile& file);

/// Value of the first "c key=value" comment, if any.
std::optional<std::string> metadata_value(const GraphFile& file, std::string_view key);

GraphFile read_file(const std::string& path);
void write_file(const std::string& path, const GraphFile& file);

}  // namespace pvc4::io

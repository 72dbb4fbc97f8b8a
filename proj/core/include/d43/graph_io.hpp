#pragma once

// Crystal graphs of B_l as plain adjacency data, with DOT and JSON I/O.

#include "d43/tensorcat.hpp"

#include <compare>
#include <string>
#include <vector>

namespace d43 {

inline constexpr int kSchemaVersion = 1;

struct GraphNode {
  std::string id;
  CrystalElement coords;
  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  std::string from;
  std::string to;
  int colour = 0;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct CrystalGraph {
  long level = 0;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;
  std::size_t count_edges(int colour) const;
};

/// Nodes in enumeration order, identified by tableau labels; edges b -> f_i b.
CrystalGraph crystal_graph(long l, ArrowSet arrows = kAllArrows);

std::string to_dot(const CrystalGraph& g);
std::string to_json(const CrystalGraph& g);

/// Reads the subset of DOT written by to_dot (node statements with a
/// `coords` attribute and labelled edges). Throws std::runtime_error.
CrystalGraph parse_dot(const std::string& text);
/// Throws std::runtime_error on malformed input or a schema mismatch.
CrystalGraph graph_from_json(const std::string& text);

}  // namespace d43

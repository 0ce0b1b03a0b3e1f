#pragma once

#include <optional>
#include <string>

#include "hypershell/lafont.hpp"

namespace hyper {

/// Tree representation: one node per component, solid tree edges, and a
/// dashed undirected edge per induced linked pair.
std::string render_tree_dot(const Shell& s);
std::string render_tree_dot(const Labeling& l);

/// Link representation: components of dimension below `threshold` are
/// concealed; a glued pair of (threshold-1)-components becomes an edge
/// between their parents. Throws std::invalid_argument unless
/// 1 <= threshold < dimension.
std::string render_link_dot(const Shell& s, int threshold);
std::string render_link_dot(const Labeling& l, int threshold);

/// Agents as boxes, wires as edges labeled with port numbers, free ports as
/// points.
std::string render_net_dot(const lafont::Net& n);

struct DotCounts {
  int nodes = 0;
  int edges = 0;
};
/// Parses the DOT subset produced here (one digraph, node, edge and
/// attribute statements). Returns nullopt with a reason on a syntax error.
std::optional<DotCounts> parse_dot(const std::string& text, std::string* why = nullptr);

}  // namespace hyper

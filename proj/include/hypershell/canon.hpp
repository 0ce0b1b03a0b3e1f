#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace hyper::canon {

/// A rooted tree with colored nodes plus extra undirected tagged edges.
/// Every structure in the library (trees, shells, labelings) is flattened
/// into this form before canonicalization.
struct ColoredTree {
  std::vector<int> parent;          // -1 for the root, exactly one root
  std::vector<std::string> color;   // initial node color keys
  std::vector<std::tuple<int, int, int>> edges;  // (u, v, tag), undirected
};

struct Canonical {
  std::string code;
  std::vector<int> position;  // node -> canonical position
};

/// Default node budget; larger structures are refused.
inline constexpr std::size_t kDefaultBudget = 64;

/// Canonical code and labeling. Two inputs get equal codes iff there is a
/// bijection preserving root, parent, colors and tagged edges.
/// Throws std::length_error when the node count exceeds `budget`.
Canonical canonicalize(const ColoredTree& g, std::size_t budget = kDefaultBudget);

}  // namespace hyper::canon

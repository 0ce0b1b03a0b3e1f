#pragma once

#include <map>
#include <vector>

#include "hypershell/shell.hpp"

namespace hyper {

/// One pair of the chain involution on external depth-3 components, with
/// the composed witness from `x` to `y` (x < y).
struct ChainPair {
  Path x;
  Path y;
  ShellIso iso;
};

struct ClosureResult {
  Shell closed;
  /// Child index of the new component, or -1 for the 1-dimensional case.
  int cap = -1;
  /// Old external component -> its starred copy.
  std::map<Path, Path> star;
  std::vector<ChainPair> mu;
};

/// Closure of an open shell. Throws std::invalid_argument if `s` is invalid
/// or already closed. A 1-shell counts as open only with `open_points`.
ClosureResult close(const Shell& s);

/// The shell of the new component (a closed (n-1)-shell). Throws for n = 1.
const Shell& composite_shell(const ClosureResult& r);

/// The graph walked by `close`: vertices are depth-3 components; solid edges
/// come from each child's own link, dotted ones from the top-link witnesses.
struct ChainGraph {
  std::vector<Path> nodes;
  std::vector<std::pair<Path, Path>> solid;
  std::vector<std::pair<Path, Path>> dotted;
};
ChainGraph build_chain_graph(const Shell& s);

}  // namespace hyper

#pragma once

#include <random>

#include "hypershell/combinat.hpp"
#include "hypershell/hypergraph.hpp"
#include "hypershell/labeling.hpp"
#include "hypershell/shell.hpp"

namespace hyper {

using Rng = std::mt19937_64;

Tree random_tree(Rng& rng, int nodes);

/// Random isomorphism out of `s`; transport(s, f) is the renamed shell.
ShellIso random_iso(Rng& rng, const Shell& s);

struct ShellShape {
  int max_children = 3;
  int max_points = 3;
};

/// Random valid n-shell. Closed shells are built by doubling a random
/// partially glued family, open ones keep their unmatched positions.
Shell random_shell(Rng& rng, int dim, bool closed, ShellShape shape = {});

/// Labels every component of a valid shell so that linked components carry
/// conjugate labels; fresh names are added to `sigma`. The root is labeled
/// only when `label_root`.
Labeling random_labeling(Rng& rng, const Shell& s, LabelSet& sigma, bool label_root);

struct HypergraphShape {
  int object_pairs = 1;
  int arrow_pairs = 3;
  int max_arity = 3;  // points per arrow boundary (dimension 1)
  int cell_pairs = 3;
  int max_sides = 3;  // arrows per 2-cell boundary (dimension 2)
  bool signed_labels = true;
};

/// Random hypergraph of dimension 0, 1 or 2. In dimension 2 the objects are
/// X, X*, every arrow has boundary (X, X*) and every 2-cell is a polygon.
Hypergraph random_hypergraph(Rng& rng, int dim, HypergraphShape shape = {});

enum class PdMode { any, acircuit, acyclic };

struct PdShape {
  int max_cells = 6;
  int extra_links = 2;  // attempts at extra gluings (ignored for acircuit)
  PdMode mode = PdMode::any;
  std::vector<std::string> tops;  // top labels to draw from; empty means all
};

/// Isomorphism from the face at `p` to `cell` that conjugates every label,
/// i.e. a legal gluing witness.
std::optional<ShellIso> conj_iso(const Labeling& a, const Labeling& b, const LabelSet& sigma, std::size_t budget);

/// Random coherent pasting diagram over h, grown by grafting label cells
/// onto external positions; top labels are drawn from the top grade of h.
/// Connected by construction.
PastingDiagram random_pd(Rng& rng, const Hypergraph& h, PdShape shape = {});

/// Random partition of the top components; groups are connected when
/// `connected` is set (the diagram must then be connected).
std::vector<std::vector<int>> random_groups(Rng& rng, const PastingDiagram& pd, bool connected);

}  // namespace hyper

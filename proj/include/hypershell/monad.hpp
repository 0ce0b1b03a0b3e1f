#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypershell/closure.hpp"
#include "hypershell/hypergraph.hpp"

namespace hyper {

struct FormalComposite {
  PastingDiagram pd;
  ClosureResult closure;
  /// Labels of the closure: old labels plus conj(label t) on every t*.
  Labeling labeling;
  /// The induced frame on the composite shell (empty point in dimension 0).
  Frame frame;
};

/// Throws std::invalid_argument unless `pd` is a coherent pasting diagram.
FormalComposite formal_composite(const Hypergraph& h, const PastingDiagram& pd);

/// True iff `cand` is a cell on the closure shell of `pd` agreeing with `pd`
/// on old components. Throws std::invalid_argument on a shell mismatch.
bool composer_check(const Hypergraph& h, const PastingDiagram& pd, const Cell& cand);
/// The cell at the new component of a composer.
Cell composite_by(const Hypergraph& h, const PastingDiagram& pd, const Cell& cand);

/// The hypergraph whose top grade consists of pasting diagrams over `base`,
/// materialized on demand: each interned diagram gets a name, and its
/// boundary is the conjugate of its formal composite frame, so that
/// eta(c) has boundary exactly boundary(c).
///
/// `base` is held by reference and must outlive this object.
class Lifted {
 public:
  explicit Lifted(const Hypergraph& base);

  const Hypergraph& base() const { return base_; }
  const Hypergraph& hypergraph() const { return lifted_; }
  int dim() const { return base_.dim(); }

  /// Name of the diagram up to isomorphism; adds it and its conjugate.
  std::string intern(const PastingDiagram& pd);
  bool contains(const std::string& name) const { return registry_.count(name) != 0; }
  const PastingDiagram& pd(const std::string& name) const;
  const std::map<std::string, PastingDiagram>& registry() const { return registry_; }

  /// Name of the singleton diagram of the top-grade label `c`.
  std::string eta(const std::string& c);

 private:
  const Hypergraph& base_;
  Hypergraph lifted_;
  std::map<std::string, PastingDiagram> registry_;
  std::map<std::string, std::string> by_code_;
};

/// The cell of a top-grade label: its boundary frame with the label at the root.
Cell label_cell(const Hypergraph& h, const std::string& c);
/// Singleton diagram of label_cell.
PastingDiagram eta(const Hypergraph& h, const std::string& c);

/// Substitutes every top component of `outer` (a diagram over
/// L.hypergraph()) by its diagram over L.base(). A slot equal to the
/// boundary of its label is identified with it directly, otherwise through
/// a canonical isomorphism. Throws std::invalid_argument if a slot does not
/// fit its diagram.
PastingDiagram flatten(const Lifted& L, const PastingDiagram& outer);

struct Flattened {
  PastingDiagram pd;
  /// External position of `outer` -> the result's position it became, with
  /// the isomorphism between their shells.
  std::map<Position, std::pair<Position, ShellIso>> externals;
};
Flattened flatten_tracked(const Lifted& L, const PastingDiagram& outer);

/// Replaces top component t of `pd` by a slot of shape `frame` labeled
/// `name`. tau[j] sends old slot child j to (new child index, isomorphism);
/// the link witnesses are adjusted accordingly.
PastingDiagram reslot(const PastingDiagram& pd, int t, const std::string& name, const Frame& frame,
                      const std::vector<std::pair<int, ShellIso>>& tau);

/// Replaces each top label c of a diagram over L.base() by eta(c).
PastingDiagram map_eta(Lifted& L, const PastingDiagram& pd);
/// Replaces each top label (a diagram over M.base(), itself a lifted level
/// of L) by the name of its flattening under L.
PastingDiagram map_flatten(Lifted& L, const Lifted& M, const PastingDiagram& pd);

/// Splits a diagram into sub-diagrams, one per group of top components,
/// and returns the diagram over L.hypergraph() that flattens back to it.
/// Every group must be non-empty and open.
PastingDiagram unflatten(Lifted& L, const PastingDiagram& pd, const std::vector<std::vector<int>>& groups);

struct ConnectivityGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  /// (from, to) per edge, when every glued position is signed.
  std::vector<std::pair<int, int>> arcs;
  bool oriented = false;
};
ConnectivityGraph connectivity(const PastingDiagram& pd, const LabelSet& sigma);
bool is_acircuit(const PastingDiagram& pd, const LabelSet& sigma);
bool is_connected(const PastingDiagram& pd, const LabelSet& sigma);
/// Throws std::invalid_argument if a glued label is unsigned.
bool is_acyclic(const PastingDiagram& pd, const LabelSet& sigma);

enum class LawVariant { full, acircuit, acyclic };

struct LawOutcome {
  int cases = 0;
  int passed = 0;
  Report report;
};

/// Unit and associativity laws of the pasting-diagram monad on seeded
/// random diagrams of dimension `dim` (0..2). Case i uses seed + i. For the
/// restricted variants every diagram involved must stay in the submonad
/// (connected, plus acircuit or acyclic).
LawOutcome check_monad_laws(std::uint64_t seed, int dim, int cases, LawVariant variant);

}  // namespace hyper

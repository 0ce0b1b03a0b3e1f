#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypershell/canon.hpp"
#include "hypershell/combinat.hpp"
#include "hypershell/report.hpp"

namespace hyper {

/// Address of a component: child indices from the root. The root is {}.
using Path = std::vector<int>;

Path concat(const Path& a, const Path& b);
std::string path_str(const Path& p);

/// Shell isomorphism: a bijection of children plus one isomorphism per child
/// (child i of the source goes to child perm[i] of the target). The map on
/// deeper components, and the link correspondence, are derived.
struct ShellIso {
  std::vector<int> perm;
  std::vector<ShellIso> sub;

  bool operator==(const ShellIso&) const = default;
};

/// A depth-2 component: grandchild `sub` of top child `child`.
struct Position {
  int child = 0;
  int sub = 0;

  auto operator<=>(const Position&) const = default;
};

/// One matched pair of the top link; `iso` maps the component shell at `a`
/// onto the one at `b`.
struct LinkPair {
  Position a;
  Position b;
  ShellIso iso;

  bool operator==(const LinkPair&) const = default;
};

/// An n-shell stored recursively: the top children are closed (n-1)-shells and
/// `link` glues depth-2 components. Deeper involutions are never stored; they
/// are propagated through the witnesses on demand.
///
/// `open_points` is only meaningful for dim 1 and marks every point as
/// external (the shape of a 0-pasting diagram); plain 1-shells are closed.
struct Shell {
  int dim = 0;
  std::vector<Shell> children;
  std::vector<LinkPair> link;
  bool open_points = false;

  bool operator==(const Shell&) const = default;
};

Shell point();
Shell points(int count, bool open = false);

bool is_closed(const Shell& s);
int height(const Shell& s);
std::size_t node_count(const Shell& s);

/// Closed shell S^x attached at component x. Throws std::out_of_range on a
/// bad path.
const Shell& component_shell(const Shell& s, const Path& x);
bool has_component(const Shell& s, const Path& x);

/// All component paths in preorder, root first.
std::vector<Path> node_paths(const Shell& s);
Tree underlying_tree(const Shell& s, std::vector<Path>* paths = nullptr);

std::vector<Position> depth2_positions(const Shell& s);
std::vector<Position> external_positions(const Shell& s);

struct Partner {
  Position at;
  ShellIso iso;  // from the queried position's shell to the partner's
};
/// Top-link partner of a depth-2 position, with the witness oriented away from it.
std::optional<Partner> partner(const Shell& s, Position p);
std::map<Position, Partner> partner_map(const Shell& s);

ShellIso identity_iso(const Shell& s);
/// g after f.
ShellIso compose(const ShellIso& g, const ShellIso& f);
ShellIso inverse(const ShellIso& f);
/// Image of a relative component path.
Path apply(const ShellIso& f, const Path& x);

/// The shell obtained by renaming `s` along `f`, so that f : s -> result is an
/// isomorphism. `f` needs only the right arities.
Shell transport(const Shell& s, const ShellIso& f);

/// Checks (Iso-1..3) for f : a -> b. On failure `why` receives a reason.
bool is_valid_iso(const ShellIso& f, const Shell& a, const Shell& b, std::string* why = nullptr);

/// Empty iff the shell satisfies (Shell-1..3); issues carry the clause name.
Report validate_shell(const Shell& s);

/// A pair of components exchanged by some induced involution. `owner` is the
/// depth of the component whose top link generated it.
struct LinkedPair {
  Path x;
  Path y;
  int owner = 0;
};
/// Every induced linked pair, each reported once.
std::vector<LinkedPair> linked_pairs(const Shell& s);

/// True iff some induced involution maps x to y. Both paths must exist and
/// have equal depth >= 2; throws std::invalid_argument otherwise.
bool linked(const Shell& s, const Path& x, const Path& y);

/// Exhaustive search over (Iso-1..3). Calls `visit` for each isomorphism
/// a -> b until it returns true; returns whether any visit returned true.
bool for_each_iso(const Shell& a, const Shell& b, const std::function<bool(const ShellIso&)>& visit);
std::optional<ShellIso> shell_iso_check(const Shell& a, const Shell& b);

/// Flattens a shell into a colored tree with tagged link edges. `extra`
/// supplies an additional color per component (labels); may be empty.
canon::ColoredTree flatten_shell(const Shell& s, const std::vector<Path>& paths,
                                 const std::function<std::string(const Path&)>& extra);

/// Equal iff shell_iso_check succeeds. Throws std::length_error above `budget` nodes.
std::string shell_canonical_code(const Shell& s, std::size_t budget = canon::kDefaultBudget);

/// Rebuilds a ShellIso a -> b from a correspondence of component paths.
ShellIso iso_from_path_map(const Shell& a, const std::map<Path, Path>& map);

/// Isomorphism found through canonical labelings (no search); `extra_a`
/// and `extra_b` color the components and must correspond.
std::optional<ShellIso> canonical_iso(const Shell& a, const std::function<std::string(const Path&)>& extra_a,
                                      const Shell& b, const std::function<std::string(const Path&)>& extra_b,
                                      std::size_t budget = canon::kDefaultBudget);

}  // namespace hyper

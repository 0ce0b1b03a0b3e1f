#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypershell/report.hpp"
#include "hypershell/shell.hpp"

namespace hyper {

struct LabelInfo {
  int grade = 0;
  std::string conj;
  std::optional<int> sign;  // +1 or -1
};

/// Graded label alphabet with conjugation and optional signs.
class LabelSet {
 public:
  /// Adds `name` and `conj` as a conjugate pair (conj == name is allowed
  /// when unsigned). Throws std::invalid_argument on clashes.
  void add(const std::string& name, int grade, const std::string& conj, std::optional<int> sign = std::nullopt);
  /// Adds `name` and `name*`; the sign, if given, belongs to `name`.
  void add_pair(const std::string& name, int grade, std::optional<int> sign = std::nullopt);

  bool contains(const std::string& name) const { return info_.count(name) != 0; }
  const LabelInfo& info(const std::string& name) const;
  int grade(const std::string& name) const { return info(name).grade; }
  const std::string& conj(const std::string& name) const { return info(name).conj; }
  std::optional<int> sign(const std::string& name) const { return info(name).sign; }
  std::vector<std::string> of_grade(int g) const;
  int top_grade() const;
  const std::map<std::string, LabelInfo>& all() const { return info_; }

  /// Grade, involution and parity invariants.
  Report validate() const;

 private:
  std::map<std::string, LabelInfo> info_;
};

/// Conventional conjugate name: "A" <-> "A*".
std::string star_name(const std::string& name);

/// Partial labeling of a shell's components.
struct Labeling {
  Shell shell;
  std::map<Path, std::string> labels;

  bool operator==(const Labeling&) const = default;
};
using Cell = Labeling;
using Frame = Labeling;
using PastingDiagram = Labeling;

/// Dimension of component x: shell dim minus depth.
int component_dim(const Shell& s, const Path& x);

/// Clauses: "shell", "unknown-label", "graded", "descendant-closed",
/// "link-compatible".
Report validate_labeling(const Labeling& l, const LabelSet& sigma);

enum class Kind { cell, frame, pasting_diagram, partial, invalid };
std::string kind_name(Kind k);
Kind classify(const Labeling& l, const LabelSet& sigma);

/// Canonical code of a labeled shell; equal iff isomorphic preserving labels.
std::string labeling_code(const Labeling& l, std::size_t budget = canon::kDefaultBudget);
/// Isomorphism a -> b preserving labels, if any.
std::optional<ShellIso> labeled_iso(const Labeling& a, const Labeling& b, std::size_t budget = canon::kDefaultBudget);

Frame boundary_frame(const Cell& c);
Cell with_root(const Frame& f, const std::string& label);

/// The partial cell at x. Throws std::invalid_argument if x or any of its
/// descendants is unlabeled, or x is not a component.
Cell face(const Labeling& l, const Path& x);
/// Face at x without its root label (the frame of x).
Frame face_frame(const Labeling& l, const Path& x);

/// Labels under x, re-rooted at x; no totality requirement.
Labeling restrict_to(const Labeling& l, const Path& x);

/// The pasting diagram whose only top component is c.
PastingDiagram singleton_pd(const Cell& c);

Labeling conjugate_labeling(const Labeling& l, const LabelSet& sigma);

/// Relabels along a shell isomorphism f : l.shell -> transport(l.shell, f).
Labeling transport(const Labeling& l, const ShellIso& f);

}  // namespace hyper

#pragma once

#include <set>
#include <string>
#include <vector>

#include "hypershell/monad.hpp"
#include "hypershell/strictcat.hpp"

namespace hyper {

/// A finite truncated hypergraph with signs and a marking of universal
/// labels. Every label of grade above `dimension` must be universal, and
/// pure diagrams of dimension above `weakness` must have unique composites.
struct WeakModel {
  Hypergraph h;
  std::set<std::string> universal;
  int dimension = 1;
  int weakness = 0;
};

/// Connected, acyclic for the sign orientation, and with all top labels of
/// one sign. Throws std::invalid_argument when a needed sign is missing.
bool is_pure(const Labeling& l, const LabelSet& sigma);

/// A composer of a diagram: a label of the next grade whose boundary is the
/// closure, with `composite` on the new component (empty in dimension 0).
struct Composer {
  std::string label;
  std::string composite;
};
std::vector<Composer> composers(const WeakModel& m, const PastingDiagram& pd);

struct AxiomReport {
  Report report;
  int examined = 0;
  bool exhausted = false;  // the enumeration budget was hit
};

/// Pure diagrams are enumerated as single objects and as chains of at most
/// `max_chain` one-sign arrows, which presumes type Sigma (see is_of_type_sigma).
AxiomReport check_H1(const WeakModel& m, int max_chain = 3, int budget = 100000);
AxiomReport check_H2(const WeakModel& m);
AxiomReport check_H3(const WeakModel& m, int max_chain = 3, int budget = 100000);
/// Grades above the dimension are universal; chains are uniquely composed.
AxiomReport check_weakness(const WeakModel& m, int max_chain = 3, int budget = 100000);

/// Typing over the prototype a, a*, b, b* with boundary(b) = (a*, a).
bool is_of_type_sigma(const WeakModel& m, Report* why = nullptr);

/// The frame of two cells C* and C' glued along their common boundary.
Frame comparison_frame(const Hypergraph& h, const std::string& c, const std::string& c2);
/// Checks for a cell M on comparison_frame(C, C'), universal when both are,
/// built from a transpose of a universal composer of `pd` composing C.
/// Throws std::invalid_argument if C is not universally composed.
Report comparison_cell(const WeakModel& m, const PastingDiagram& pd, const std::string& c, const std::string& c2);

struct DerivedCategory {
  CategoryData category;
  Report report;
};
/// Reads the category of a 0-weak 1-hypercategory of type Sigma: the
/// composition of a 2-chain is the conjugate of its composite, identities
/// are the quasi-identities.
DerivedCategory derive_category(const WeakModel& m);

namespace fixtures {
/// The 0-weak 1-hypercategory of a category: universal composers and
/// transposes for every chain of at most `max_chain` arrows.
WeakModel weak_model(const CategoryData& c, int max_chain = 3);
}  // namespace fixtures

}  // namespace hyper

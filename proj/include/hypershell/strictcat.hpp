#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hypershell/monad.hpp"

namespace hyper {

/// An algebra over the pasting-diagram monad on the top grade.
class Algebra {
 public:
  virtual ~Algebra() = default;
  /// May grow as act() introduces new composite labels.
  virtual const Hypergraph& hypergraph() const = 0;
  /// Composite label of an admissible pasting diagram.
  virtual std::string act(const PastingDiagram& pd) = 0;
  /// Top labels used to generate samples.
  virtual std::vector<std::string> generators() const = 0;
  /// Equality of composite labels used by the law checks.
  virtual bool same(const std::string& a, const std::string& b) const { return a == b; }
};

/// Unit, boundary and associativity laws on seeded samples (connected
/// samples for the restricted variants, acyclic ones for `acyclic`).
LawOutcome check_algebra(Algebra& a, LawVariant variant, int samples, std::uint64_t seed);

/// The free algebra on a hypergraph: act is flattening.
class FreeAlgebra : public Algebra {
 public:
  /// Seeds a pool of `pool` random diagrams over `base` as generators.
  FreeAlgebra(Hypergraph base, std::uint64_t seed, int pool = 6);
  FreeAlgebra(const FreeAlgebra&) = delete;
  FreeAlgebra& operator=(const FreeAlgebra&) = delete;
  const Hypergraph& hypergraph() const override { return lifted_->hypergraph(); }
  std::string act(const PastingDiagram& pd) override;
  std::vector<std::string> generators() const override { return pool_; }

 private:
  Hypergraph base_;
  std::unique_ptr<Lifted> lifted_;
  std::vector<std::string> pool_;
};

/// Sequents over a truth assignment; a sequent holds when one of its
/// literals is true. Sequents are multisets of literals named "|-p,q*";
/// their conjugates are formal duals.
class LogicAlgebra : public Algebra {
 public:
  LogicAlgebra(const std::map<std::string, bool>& assignment, int max_width = 3);
  const Hypergraph& hypergraph() const override { return h_; }
  std::string act(const PastingDiagram& pd) override;
  std::vector<std::string> generators() const override { return generators_; }

  bool holds(const std::string& sequent) const;
  /// Name of the sequent with these literals, adding it if needed.
  std::string sequent(std::vector<std::string> literals);
  std::vector<std::string> literals_of(const std::string& sequent) const;

 private:
  std::map<std::string, bool> assignment_;
  Hypergraph h_;
  std::vector<std::string> generators_;
};

/// A finite category presentation. compose[(g, f)] is g after f.
struct CategoryData {
  std::vector<std::string> objects;
  std::map<std::string, std::pair<std::string, std::string>> arrows;  // name -> (dom, cod)
  std::map<std::pair<std::string, std::string>, std::string> compose;
  std::map<std::string, std::string> identity;

  bool operator==(const CategoryData&) const = default;
};

/// Composability, closure, associativity and unit laws of a presentation.
Report validate_category(const CategoryData& c);

/// Arrows f : A -> B become labels with boundary (A, B*); act composes the
/// linear chain.
class CategoryAlgebra : public Algebra {
 public:
  explicit CategoryAlgebra(CategoryData c);
  const Hypergraph& hypergraph() const override { return h_; }
  std::string act(const PastingDiagram& pd) override;
  std::vector<std::string> generators() const override;
  const CategoryData& data() const { return c_; }

 private:
  CategoryData c_;
  Hypergraph h_;
};

/// Chain of arrows, each glued from its codomain to the next domain.
PastingDiagram chain_pd(const Hypergraph& h, const std::vector<std::string>& arrows);

/// Reads a category back from an algebra whose top labels have boundaries
/// (A, B*); identities are found by unit search. Throws
/// std::invalid_argument on wider boundaries.
CategoryData category_decode(Algebra& a);

/// A multicategory generator Gamma : A1..An -> B.
struct Operation {
  std::string name;
  std::vector<std::string> inputs;
  std::string output;
};

/// Free multicategory on generators. Labels are terms with numbered leaves,
/// e.g. "m(m(_1,_2),_3)"; the boundary lists the inputs in leaf order and
/// then the conjugated output. Inputs of a cell in a diagram are its
/// positive points in shell order, the output is its negative point.
class FreeMulticategory : public Algebra {
 public:
  FreeMulticategory(const std::vector<std::string>& objects, const std::vector<Operation>& generators);
  const Hypergraph& hypergraph() const override { return h_; }
  std::string act(const PastingDiagram& pd) override;
  std::vector<std::string> generators() const override { return generators_; }
  /// Terms agree up to reordering of arguments.
  bool same(const std::string& a, const std::string& b) const override;

  /// Adds the term label (typed leaves from the generators).
  std::string intern_term(const std::string& term);

 private:
  Hypergraph h_;
  std::map<std::string, Operation> ops_;
  std::vector<std::string> generators_;
};

/// Term with numbered leaves rewritten with unnumbered, sorted arguments.
std::string unordered_term(const std::string& term);

namespace fixtures {
/// 0 <= 1 <= ... <= k-1 with arrows "i<=j".
CategoryData chain_poset(int k);
/// Z/k as a one-object category with arrows e, r, r2, ...
CategoryData cyclic_monoid(int k);
}  // namespace fixtures

}  // namespace hyper

#include <stdexcept>

#include "hypershell/generators.hpp"
#include "hypershell/monad.hpp"

namespace hyper {
namespace {

bool in_variant(const PastingDiagram& pd, const LabelSet& sigma, LawVariant v) {
  switch (v) {
    case LawVariant::full: return true;
    case LawVariant::acircuit: return is_connected(pd, sigma) && is_acircuit(pd, sigma);
    case LawVariant::acyclic: return is_connected(pd, sigma) && is_acyclic(pd, sigma);
  }
  return false;
}

// Groups for a nesting step, resampled until the outer diagram stays in the
// variant; a single group always does.
std::vector<std::vector<int>> groups_for(Rng& rng, Lifted& L, const PastingDiagram& pd, LawVariant v) {
  const bool connected = v != LawVariant::full;
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto groups = random_groups(rng, pd, connected);
    PastingDiagram outer = unflatten(L, pd, groups);
    if (in_variant(outer, L.hypergraph().labels(), v)) return groups;
  }
  std::vector<int> all(pd.shell.children.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return {all};
}

void one_case(std::uint64_t seed, int dim, LawVariant variant, Report& r) {
  Rng rng(seed);
  HypergraphShape hs;
  Hypergraph h = random_hypergraph(rng, dim, hs);
  PdShape ps;
  ps.mode = variant == LawVariant::full ? PdMode::any
            : variant == LawVariant::acircuit ? PdMode::acircuit : PdMode::acyclic;
  PastingDiagram pd = random_pd(rng, h, ps);
  const std::size_t budget = h.budget;
  const std::string code = labeling_code(pd, budget);
  auto same = [&](const PastingDiagram& x) { return labeling_code(x, budget) == code; };
  const std::string tag = "seed " + std::to_string(seed);

  if (!in_variant(pd, h.labels(), variant)) r.add("generator", tag + ": sample outside the variant");

  Lifted L(h);
  const std::string name = L.intern(pd);
  PastingDiagram left = singleton_pd(with_root(dim == 0 ? Frame{point(), {}} : L.hypergraph().boundary(name), name));
  if (!same(flatten(L, left))) r.add("left-unit", tag);
  PastingDiagram lifted_eta = map_eta(L, pd);
  if (!in_variant(lifted_eta, L.hypergraph().labels(), variant)) r.add("right-unit", tag + ": eta leaves the variant");
  if (!same(flatten(L, lifted_eta))) r.add("right-unit", tag);

  auto g1 = groups_for(rng, L, pd, variant);
  PastingDiagram o1 = unflatten(L, pd, g1);
  if (!same(flatten(L, o1))) r.add("split", tag + ": regrouping does not flatten back");
  Lifted M(L.hypergraph());
  auto g2 = groups_for(rng, M, o1, variant);
  PastingDiagram o2 = unflatten(M, o1, g2);
  PastingDiagram route_a = flatten(L, flatten(M, o2));
  PastingDiagram route_b = flatten(L, map_flatten(L, M, o2));
  if (!same(route_a) || !same(route_b)) r.add("associativity", tag);
  if (!in_variant(route_a, h.labels(), variant) || !in_variant(route_b, h.labels(), variant))
    r.add("closure", tag + ": flattening leaves the variant");
}

}  // namespace

LawOutcome check_monad_laws(std::uint64_t seed, int dim, int cases, LawVariant variant) {
  if (dim < 0 || dim > 2) throw std::invalid_argument("monad laws: dimension must be 0, 1 or 2");
  LawOutcome out;
  for (int i = 0; i < cases; ++i) {
    Report r;
    try {
      one_case(seed + static_cast<std::uint64_t>(i), dim, variant, r);
    } catch (const std::exception& e) {
      r.add("error", "seed " + std::to_string(seed + i) + ": " + e.what());
    }
    ++out.cases;
    if (r.ok()) ++out.passed;
    out.report.merge(r);
  }
  return out;
}

}  // namespace hyper

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "hypershell/fixtures.hpp"
#include "hypershell/generators.hpp"
#include "hypershell/monad.hpp"

using namespace hyper;

namespace {

std::multiset<std::string> frame_labels(const Frame& f) {
  std::multiset<std::string> out;
  for (const auto& [p, l] : f.labels) out.insert(l);
  return out;
}

// Counts labelings of the closure that agree with pd on old components, leave
// both roots unlabeled and validate, by trying every label of the right grade
// on every new component.
int count_extensions(const Hypergraph& h, const PastingDiagram& pd) {
  ClosureResult r = close(pd.shell);
  std::vector<Path> fresh;
  for (const auto& [from, to] : r.star) fresh.push_back(to);
  Labeling l{r.closed, pd.labels};
  int found = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == fresh.size()) {
      if (validate_labeling(l, h.labels()).ok()) ++found;
      return;
    }
    for (const auto& name : h.labels().of_grade(component_dim(r.closed, fresh[i]))) {
      l.labels[fresh[i]] = name;
      go(i + 1);
    }
    l.labels.erase(fresh[i]);
  };
  go(0);
  return found;
}

Hypergraph two_arrows() {
  LabelSet ls;
  for (const char* x : {"A", "B", "C"}) ls.add_pair(x, 0);
  ls.add_pair("f", 1);
  ls.add_pair("g", 1);
  Hypergraph h(1, ls);
  h.set_boundary("f", fixtures::point_frame({"A", "B*"}));
  h.set_boundary("g", fixtures::point_frame({"B", "C*"}));
  return h;
}

PastingDiagram chain_fg() {
  PastingDiagram pd;
  pd.shell = fixtures::arrow_chain(2);
  pd.labels = {{{0}, "f"}, {{0, 0}, "A"}, {{0, 1}, "B*"}, {{1}, "g"}, {{1, 0}, "B"}, {{1, 1}, "C*"}};
  return pd;
}

}  // namespace

TEST_CASE("formal composites of small diagrams") {
  Hypergraph h = two_arrows();
  REQUIRE(validate_hypergraph(h).ok());
  auto single = formal_composite(h, eta(h, "f"));
  CHECK(frame_labels(single.frame) == std::multiset<std::string>{"A*", "B"});
  CHECK(count_extensions(h, eta(h, "f")) == 1);

  PastingDiagram fg = chain_fg();
  REQUIRE(coherent(h, fg));
  auto comp = formal_composite(h, fg);
  CHECK(frame_labels(comp.frame) == std::multiset<std::string>{"A*", "C"});
  CHECK(validate_labeling(comp.labeling, h.labels()).ok());
  CHECK(frame_member(h, comp.frame));
  CHECK(count_extensions(h, fg) == 1);

  Hypergraph h3 = fixtures::three_arrow_hypergraph();
  auto c3 = formal_composite(h3, fixtures::three_arrow_pd());
  CHECK(frame_labels(c3.frame) == std::multiset<std::string>{"A", "F"});
  CHECK(count_extensions(h3, fixtures::three_arrow_pd()) == 1);

  PastingDiagram bad = fg;
  bad.labels[{1}] = "f";
  CHECK_THROWS_AS(formal_composite(h, bad), std::invalid_argument);
}

TEST_CASE("composers") {
  Hypergraph h = two_arrows();
  h.labels().add_pair("gf", 1);
  h.set_boundary("gf", fixtures::point_frame({"A*", "C"}));
  h.labels().add_pair("u", 2);
  PastingDiagram fg = chain_fg();
  auto fc = formal_composite(h, fg);
  Cell cand = fc.labeling;
  cand.labels[{fc.closure.cap}] = "gf";
  cand.labels[{}] = "u";
  CHECK(composer_check(h, fg, cand));
  Cell comp = composite_by(h, fg, cand);
  CHECK(comp.labels.at({}) == "gf");
  CHECK(boundary_frame(comp) == fc.frame);
  Cell mutated = cand;
  mutated.labels[{0}] = "g";
  CHECK_FALSE(composer_check(h, fg, mutated));
  Cell wrong_shell = cand;
  wrong_shell.shell = fixtures::polygon(3);
  CHECK_THROWS(composer_check(h, fg, wrong_shell));
}

TEST_CASE("random formal composites are unique coherent frames") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int dim = 1 + trial % 2;
    HypergraphShape hs;
    hs.arrow_pairs = 2;
    hs.cell_pairs = 2;
    Hypergraph h = random_hypergraph(rng, dim, hs);
    REQUIRE(validate_hypergraph(h).ok());
    PdShape ps;
    ps.max_cells = 3;
    PastingDiagram pd = random_pd(rng, h, ps);
    INFO("trial " << trial);
    REQUIRE(classify(pd, h.labels()) == Kind::pasting_diagram);
    REQUIRE(coherent(h, pd));
    auto fc = formal_composite(h, pd);
    CHECK(validate_labeling(fc.labeling, h.labels()).ok());
    CHECK(frame_member(h, fc.frame));
    if (close(pd.shell).star.size() <= 6) CHECK(count_extensions(h, pd) == 1);
  }
}

TEST_CASE("eta and the lifted hypergraph") {
  Hypergraph h = fixtures::three_arrow_hypergraph();
  Lifted L(h);
  for (const char* c : {"f", "g*", "h"}) {
    std::string name = L.eta(c);
    CHECK(labeling_code(L.hypergraph().boundary(name)) == labeling_code(h.boundary(c)));
    CHECK(L.hypergraph().labels().conj(name) == L.eta(h.labels().conj(c)));
  }
  CHECK(L.hypergraph().labels().grade("A") == 0);
  CHECK_FALSE(L.hypergraph().labels().contains("f"));
  std::string p = L.intern(fixtures::three_arrow_pd());
  CHECK(L.intern(transport(fixtures::three_arrow_pd(), ShellIso{{2, 0, 1}, {identity_iso(points(2)), identity_iso(points(2)), identity_iso(points(2))}})) == p);
  CHECK(validate_hypergraph(L.hypergraph()).ok());
}

TEST_CASE("associativity on the three-arrow chain") {
  Hypergraph h = fixtures::three_arrow_hypergraph();
  Lifted L(h);
  PastingDiagram pd = fixtures::three_arrow_pd();
  std::string code = labeling_code(pd);
  PastingDiagram left = unflatten(L, pd, {{0, 1}, {2}});
  PastingDiagram right = unflatten(L, pd, {{0}, {1, 2}});
  CHECK(labeling_code(flatten(L, left)) == code);
  CHECK(labeling_code(flatten(L, right)) == code);
  CHECK(is_acircuit(left, L.hypergraph().labels()));
  CHECK_THROWS(unflatten(L, pd, {{0, 1}}));
  CHECK_THROWS(unflatten(L, pd, {{0, 1}, {1, 2}}));
}

TEST_CASE("connectivity graphs") {
  Hypergraph h = fixtures::three_arrow_hypergraph();
  PastingDiagram pd = fixtures::three_arrow_pd();
  CHECK(is_acircuit(pd, h.labels()));
  CHECK(is_connected(pd, h.labels()));
  CHECK_THROWS_AS(is_acyclic(pd, h.labels()), std::invalid_argument);

  PastingDiagram fan{fixtures::open_triangle_fan(), {}};
  auto g = connectivity(fan, h.labels());
  CHECK(g.vertices == 3);
  CHECK(g.edges.size() == 3);
  CHECK(is_connected(fan, h.labels()));
  CHECK_FALSE(is_acircuit(fan, h.labels()));

  LabelSet signs;
  signs.add_pair("X", 0, 1);
  signs.add_pair("a", 1);
  PastingDiagram loop;
  loop.shell = fixtures::arrow_chain(2);
  loop.shell.children.push_back(points(2));
  loop.labels = {{{0}, "a"}, {{1}, "a"}, {{2}, "a"}};
  for (int i = 0; i < 3; ++i) {
    loop.labels[{i, 0}] = "X";
    loop.labels[{i, 1}] = "X*";
  }
  CHECK(is_acyclic(loop, signs));
  loop.shell.link.push_back({{1, 1}, {2, 0}, {}});
  CHECK(is_acyclic(loop, signs));
  loop.shell.link.push_back({{2, 1}, {0, 0}, {}});
  loop.shell.children.push_back(points(1));
  loop.labels[{3}] = "a";
  loop.labels[{3, 0}] = "X";
  CHECK_FALSE(is_acyclic(loop, signs));
  CHECK_FALSE(is_acircuit(loop, signs));
}

TEST_CASE("monad laws on small samples") {
  for (int dim = 0; dim <= 2; ++dim) {
    for (auto v : {LawVariant::full, LawVariant::acircuit, LawVariant::acyclic}) {
      auto out = check_monad_laws(1000 + 17 * dim, dim, 15, v);
      INFO("dim " << dim << " variant " << static_cast<int>(v) << "\n" << out.report.str());
      CHECK(out.passed == out.cases);
    }
  }
}

TEST_CASE("flattening only adds gluings") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = random_hypergraph(rng, 1 + trial % 2);
    PastingDiagram pd = random_pd(rng, h);
    Lifted L(h);
    auto groups = random_groups(rng, pd, true);
    PastingDiagram outer = unflatten(L, pd, groups);
    std::size_t inner_edges = 0;
    for (int t = 0; t < static_cast<int>(outer.shell.children.size()); ++t)
      inner_edges += connectivity(L.pd(outer.labels.at({t})), h.labels()).edges.size();
    CHECK(connectivity(flatten(L, outer), h.labels()).edges.size() >= inner_edges);
  }
}

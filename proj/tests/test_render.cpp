#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypershell/fixtures.hpp"
#include "hypershell/generators.hpp"
#include "hypershell/render.hpp"

using namespace hyper;

namespace {

DotCounts counts(const std::string& dot) {
  std::string why;
  auto c = parse_dot(dot, &why);
  INFO(why);
  REQUIRE(c.has_value());
  return *c;
}

int occurrences(const std::string& s, const std::string& what) {
  int n = 0;
  for (auto at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("tree of a point") {
  auto c = counts(render_tree_dot(point()));
  CHECK(c.nodes == 1);
  CHECK(c.edges == 0);
}

TEST_CASE("tree of the tetrahedron") {
  Shell t = fixtures::tetrahedron();
  std::string dot = render_tree_dot(t);
  auto c = counts(dot);
  CHECK(c.nodes == 1 + 4 + 12 + 24);
  const int dashed = occurrences(dot, "style=dashed");
  CHECK(dashed == static_cast<int>(linked_pairs(t).size()));
  CHECK(c.edges == 40 + dashed);
}

TEST_CASE("labels appear in the tree") {
  std::string dot = render_tree_dot(fixtures::three_arrow_pd());
  for (std::string l : {"f", "g", "h", "A", "B", "C", "D", "E", "F"}) CHECK(dot.find("\\n" + l + "\"") != std::string::npos);
  counts(dot);
}

TEST_CASE("link view of a chain is a path") {
  for (int k = 1; k <= 5; ++k) {
    auto c = counts(render_link_dot(fixtures::arrow_chain(k), 1));
    CHECK(c.nodes == k);
    CHECK(c.edges == k - 1);
  }
  CHECK_THROWS_AS(render_link_dot(fixtures::arrow_chain(2), 2), std::invalid_argument);
  CHECK_THROWS_AS(render_link_dot(fixtures::arrow_chain(2), 0), std::invalid_argument);
}

TEST_CASE("link views of the tetrahedron") {
  Shell t = fixtures::tetrahedron();
  auto two = counts(render_link_dot(t, 2));
  CHECK(two.nodes == 4);
  CHECK(two.edges == 6);  // one per glued edge pair
  auto one = counts(render_link_dot(t, 1));
  CHECK(one.nodes == 16);
  CHECK(one.edges >= 12 + 6);
}

TEST_CASE("nets") {
  auto c = counts(render_net_dot(lafont::mul_net(2, 2)));
  CHECK(c.nodes > 0);
  auto r = lafont::reduce(lafont::mul_net(2, 2), lafont::Strategy::leftmost, 1000, 1, false);
  auto d = counts(render_net_dot(r.net));
  CHECK(d.nodes == 5 + 1);  // four s, one 0, one free port
}

TEST_CASE("random shells render to valid DOT") {
  Rng rng(7);
  for (int dim = 1; dim <= 2; ++dim) {
    Hypergraph h = random_hypergraph(rng, dim);
    for (int i = 0; i < 50; ++i) {
      PastingDiagram pd = random_pd(rng, h);
      counts(render_tree_dot(pd));
      if (pd.shell.dim >= 2) counts(render_link_dot(pd, 1));
    }
  }
}

TEST_CASE("reader rejects malformed input") {
  std::string why;
  CHECK_FALSE(parse_dot("graph x {}", &why));
  CHECK_FALSE(parse_dot("digraph x { a -> ; }", &why));
  CHECK_FALSE(parse_dot("digraph x { a [label=\"x] ; }", &why));
  CHECK_FALSE(parse_dot("digraph x { a; } extra", &why));
  CHECK(parse_dot("digraph { a; b; a -> b -> c; }")->edges == 2);
}

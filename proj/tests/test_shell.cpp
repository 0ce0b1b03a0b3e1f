#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypershell/generators.hpp"
#include "hypershell/shell.hpp"

using namespace hyper;

namespace {

// Boundary of a 2-cell with one input and one output: two closed 1-shells
// of two points glued point to point.
Shell globe() {
  Shell s;
  s.dim = 2;
  s.children = {points(2), points(2)};
  s.link = {{{0, 0}, {1, 0}, {}}, {{0, 1}, {1, 1}, {}}};
  return s;
}

Shell open_bigon() {
  Shell s = globe();
  s.link.pop_back();
  return s;
}

}  // namespace

TEST_CASE("basic shells validate") {
  CHECK(validate_shell(point()).ok());
  CHECK(validate_shell(points(3)).ok());
  CHECK(validate_shell(globe()).ok());
  CHECK(is_closed(globe()));
  CHECK_FALSE(is_closed(open_bigon()));
  CHECK(external_positions(open_bigon()) == std::vector<Position>{{0, 1}, {1, 1}});
  CHECK(node_count(globe()) == 7);
  CHECK(height(globe()) == 2);
}

TEST_CASE("violations carry their clause") {
  Shell s = globe();
  s.children[0] = point();
  CHECK(validate_shell(s).has_clause("Shell-1"));

  Shell bad_child;
  bad_child.dim = 3;
  bad_child.children = {open_bigon()};
  CHECK(validate_shell(bad_child).has_clause("Shell-2"));

  Shell twice = globe();
  twice.link[1].a = {0, 0};
  CHECK(validate_shell(twice).has_clause("Shell-3"));

  Shell self = globe();
  self.link[1].b = self.link[1].a;
  CHECK(validate_shell(self).has_clause("Shell-3"));

  Shell empty;
  empty.dim = 2;
  CHECK(validate_shell(empty).has_clause("Shell-1"));

  Shell wrong_witness;
  wrong_witness.dim = 3;
  wrong_witness.children = {globe(), globe()};
  for (int i = 0; i < 2; ++i) wrong_witness.link.push_back({{0, i}, {1, i}, ShellIso{{0}, {{}}}});
  CHECK(validate_shell(wrong_witness).has_clause("Shell-3"));
  for (auto& lp : wrong_witness.link) lp.iso = identity_iso(points(2));
  CHECK(validate_shell(wrong_witness).ok());
}

TEST_CASE("random shells are valid and closed as requested") {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    int dim = 1 + trial % 4;
    bool closed = trial % 3 != 0;
    Shell s = random_shell(rng, dim, closed, {2, 2});
    INFO("trial " << trial);
    CHECK(validate_shell(s).ok());
    CHECK(is_closed(s) == closed);
    CHECK(height(s) == dim);
  }
}

TEST_CASE("iso algebra") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    Shell s = random_shell(rng, 3, true, {2, 2});
    ShellIso f = random_iso(rng, s);
    Shell t = transport(s, f);
    CHECK(validate_shell(t).ok());
    CHECK(is_valid_iso(f, s, t));
    CHECK(is_valid_iso(inverse(f), t, s));
    CHECK(compose(inverse(f), f) == identity_iso(s));
    ShellIso g = random_iso(rng, t);
    Shell u = transport(t, g);
    CHECK(is_valid_iso(compose(g, f), s, u));
    for (const auto& x : node_paths(s)) CHECK(hyper::apply(compose(g, f), x) == hyper::apply(g, hyper::apply(f, x)));
  }
}

TEST_CASE("canonical code agrees with exhaustive isomorphism search") {
  Rng rng(21);
  int equal = 0, different = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int dim = 2 + trial % 2;
    bool closed = trial % 4 != 0;
    Shell a = random_shell(rng, dim, closed, {2, 2});
    Shell b = trial % 2 ? transport(a, random_iso(rng, a)) : random_shell(rng, dim, closed, {2, 2});
    auto found = shell_iso_check(a, b);
    bool same_code = shell_canonical_code(a, 4096) == shell_canonical_code(b, 4096);
    INFO("trial " << trial);
    CHECK(same_code == found.has_value());
    if (found) {
      CHECK(is_valid_iso(*found, a, b));
      auto c = canonical_iso(a, {}, b, {}, 4096);
      REQUIRE(c.has_value());
      std::string why;
      CHECK_MESSAGE(is_valid_iso(*c, a, b, &why), why);
    }
    (same_code ? equal : different)++;
  }
  CHECK(equal > 100);
  CHECK(different > 20);
}

TEST_CASE("a rewired gluing is detected") {
  Shell s;
  s.dim = 3;
  s.children = {globe(), globe()};
  s.link = {{{0, 0}, {1, 0}, identity_iso(points(2))}, {{0, 1}, {1, 1}, identity_iso(points(2))}};
  Shell twisted = s;
  ShellIso swap{{1, 0}, {{}, {}}};
  twisted.link[0].iso = swap;
  twisted.link[1].iso = swap;
  CHECK(validate_shell(twisted).ok());
  Shell half = s;
  half.link[0].iso = swap;
  CHECK(validate_shell(half).ok());
  CHECK((shell_canonical_code(s) == shell_canonical_code(half)) == shell_iso_check(s, half).has_value());
  CHECK((shell_canonical_code(s) == shell_canonical_code(twisted)) == shell_iso_check(s, twisted).has_value());
}

TEST_CASE("linked pairs") {
  Shell s;
  s.dim = 3;
  s.children = {globe(), globe()};
  s.link = {{{0, 0}, {1, 0}, identity_iso(points(2))}, {{0, 1}, {1, 1}, identity_iso(points(2))}};
  CHECK(linked(s, {0, 0}, {1, 0}));
  CHECK(linked(s, {1, 0, 1}, {0, 0, 1}));
  CHECK(linked(s, {0, 0, 1}, {0, 1, 1}));
  CHECK_FALSE(linked(s, {0, 0, 0}, {0, 0, 1}));
  CHECK_THROWS_AS(linked(s, {0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(linked(s, {0, 0}, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(linked(s, {5, 0}, {0, 0}), std::invalid_argument);
  // Each depth-3 point is reached by one top-link pair and one inner pair.
  std::map<Path, int> degree;
  for (const auto& lp : linked_pairs(s)) {
    CHECK(lp.x.size() == lp.y.size());
    if (lp.x.size() == 3) {
      degree[lp.x]++;
      degree[lp.y]++;
    }
  }
  CHECK(degree.size() == 8);
  for (auto& [p, d] : degree) CHECK(d == 2);
}

TEST_CASE("point code is special") {
  CHECK(shell_canonical_code(point()).size() == 1);
  CHECK(shell_canonical_code(points(2)) != shell_canonical_code(points(2, true)));
  Shell big = random_shell(*std::make_unique<Rng>(1).get(), 4, true, {3, 3});
  if (node_count(big) > canon::kDefaultBudget) CHECK_THROWS_AS(shell_canonical_code(big), std::length_error);
}

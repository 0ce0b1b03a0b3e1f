#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypershell/lafont.hpp"
#include "hypershell/monad.hpp"

using namespace hyper;
using namespace hyper::lafont;

TEST_CASE("signature") {
  const Hypergraph& h = signature();
  CHECK_MESSAGE(validate_hypergraph(h).ok(), validate_hypergraph(h).str());
  const std::map<std::string, int> expect{{"0", 1}, {"eps", 1}, {"s", 2}, {"+", 3}, {"x", 3}, {"delta", 3}};
  for (const auto& [k, n] : expect) {
    CHECK(arity(k) == n);
    CHECK(h.boundary(k).shell.children.size() == static_cast<std::size_t>(n));
    for (const auto& [p, l] : h.boundary(k).labels) CHECK(l == "a");
  }
  CHECK(h.labels().conj("a") == "a");
  for (const auto& r : rule_names()) {
    const Frame& f = rule_frame(r);
    CHECK(is_closed(f.shell));
    CHECK(validate_shell(f.shell).ok());
    CHECK(f.shell.children.size() == static_cast<std::size_t>(2 + rule_output_size(r)));
  }
  CHECK(h.labels().contains("s+"));
}

TEST_CASE("numerals") {
  for (int k = 0; k <= 6; ++k) {
    Net n = encode_number(k);
    CHECK(n.agents.size() == static_cast<std::size_t>(k + 1));
    CHECK(n.free_ports().size() == 1);
    CHECK(decode_number(n) == k);
    CHECK(find_redexes(n).empty());
    PastingDiagram pd = to_pd(n);
    CHECK(classify(pd, signature().labels()) == Kind::pasting_diagram);
    CHECK(coherent(signature(), pd));
  }
  CHECK_FALSE(decode_number(add_net(1, 1)).has_value());
}

TEST_CASE("redexes") {
  Net a = add_net(2, 3);
  auto rs = find_redexes(a);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].rule == "s+");
  CHECK(find_redexes(mul_net(2, 2)).size() == 1);
  CHECK(find_redexes(add_net(0, 3))[0].rule == "0+");
}

TEST_CASE("single rules match unary arithmetic") {
  // 0 + y -> y
  auto [n0, s0] = apply_rule(add_net(0, 2), find_redexes(add_net(0, 2))[0]);
  CHECK(decode_number(n0) == 2);
  CHECK(s0.produced.empty());

  // s(x) + y -> s(x + y)
  Net a = add_net(1, 2);
  auto [n1, s1] = apply_rule(a, find_redexes(a)[0]);
  CHECK(s1.rule == "s+");
  auto r1 = find_redexes(n1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].rule == "0+");
  auto [n2, s2] = apply_rule(n1, r1[0]);
  CHECK(decode_number(n2) == 3);

  // eps against s spawns eps on the predecessor.
  Net e = encode_number(2);
  int eps = e.add("eps");
  e.wire({eps, 0}, e.free_ports()[0]);
  auto re = find_redexes(e);
  REQUIRE(re.size() == 1);
  auto [e1, se] = apply_rule(e, re[0]);
  CHECK(se.rule == "seps");
  CHECK(e1.agents.size() == 3);
  CHECK(find_redexes(e1).at(0).rule == "seps");
  Reduction gone = reduce(e, Strategy::leftmost, 10);
  CHECK(gone.normal);
  CHECK(gone.net.agents.empty());

  CHECK_THROWS_AS(apply_rule(n2, r1[0]), std::invalid_argument);
}

TEST_CASE("two times two") {
  Net start = mul_net(2, 2);
  Reduction red = reduce(start, Strategy::leftmost, 200, 0, true);
  CHECK(red.normal);
  CHECK(decode_number(red.net) == 4);
  Report r = check_trace(red.trace, start, red.net);
  CHECK_MESSAGE(r.ok(), r.str());
  CHECK(red.trace.pd.shell.children.size() == red.trace.steps.size());
}

TEST_CASE("arithmetic for small operands") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      Reduction a = reduce(add_net(m, n), Strategy::leftmost, 500);
      CHECK(decode_number(a.net) == m + n);
      Reduction p = reduce(mul_net(m, n), Strategy::leftmost, 2000);
      REQUIRE(p.normal);
      CHECK(decode_number(p.net) == m * n);
      const std::string code = net_code(p.net);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Reduction q = reduce(mul_net(m, n), Strategy::random, 2000, seed);
        CHECK(q.normal);
        CHECK(net_code(q.net) == code);
        CHECK(q.trace.steps.size() == p.trace.steps.size());
      }
    }
}

TEST_CASE("conservation per rule") {
  Net n = mul_net(3, 2);
  const std::size_t free = n.free_ports().size();
  for (int i = 0; i < 400; ++i) {
    auto rs = find_redexes(n);
    if (rs.empty()) break;
    auto [next, step] = apply_rule(n, rs.back());
    CHECK(static_cast<int>(next.agents.size()) - static_cast<int>(n.agents.size()) == rule_output_size(step.rule) - 2);
    CHECK(next.free_ports().size() == free);
    n = std::move(next);
  }
  CHECK(decode_number(n) == 6);
}

TEST_CASE("traces under random orders") {
  Net start = mul_net(3, 2);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Reduction red = reduce(start, Strategy::random, 500, seed);
    Report r = check_trace(red.trace, start, red.net);
    CHECK_MESSAGE(r.ok(), r.str());
  }
  Reduction partial = reduce(start, Strategy::leftmost, 3);
  CHECK_FALSE(partial.normal);
  CHECK(partial.trace.steps.size() == 3);
  CHECK(check_trace(partial.trace, start, partial.net).ok());
}

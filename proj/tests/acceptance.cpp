// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Time limits are wall-clock seconds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "hypershell/fixtures.hpp"
#include "hypershell/generators.hpp"
#include "hypershell/persist.hpp"
#include "hypershell/strictcat.hpp"

using namespace hyper;

namespace {

constexpr std::size_t kBudget = 1u << 14;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

// ---- 1

Outcome tetrahedron() {
  Outcome o;
  Shell t = fixtures::tetrahedron();
  o.require(validate_shell(t).ok(), "tetrahedron invalid");
  o.require(is_closed(t), "tetrahedron not closed");
  // Rebuild it as the closure of three triangles around a vertex.
  Shell rebuilt = close(fixtures::open_triangle_fan()).closed;
  o.require(shell_canonical_code(rebuilt, kBudget) == shell_canonical_code(t, kBudget), "closure of the fan differs");
  Tree tree = underlying_tree(t);
  const auto l1 = tree.layer(1).size(), l2 = tree.layer(2).size(), l3 = tree.layer(3).size();
  o.require(l1 == 4 && l2 == 12 && l3 == 24, "layer sizes");
  std::map<Path, Path> rep;
  std::function<Path(const Path&)> find = [&](const Path& x) -> Path {
    auto it = rep.find(x);
    if (it == rep.end() || it->second == x) return x;
    return it->second = find(it->second);
  };
  for (const auto& lp : linked_pairs(t))
    if (lp.x.size() == 3) rep[find(lp.x)] = find(lp.y);
  std::map<Path, int> classes;
  for (const auto& p : node_paths(t))
    if (p.size() == 3) classes[find(p)]++;
  o.require(classes.size() == 4, "vertex class count");
  for (const auto& [r, n] : classes) o.require(n == 6, "vertex class of size " + std::to_string(n));
  std::ostringstream d;
  d << "layers " << l1 << "/" << l2 << "/" << l3 << ", " << classes.size() << " vertex classes";
  o.detail = d.str();
  return o;
}

// ---- 2

void chain_property(const Shell& s, const ClosureResult& r, Outcome& o) {
  ChainGraph g = build_chain_graph(s);
  std::map<Path, std::vector<Path>> adj;
  for (const auto& x : g.nodes) adj[x];
  for (const auto* es : {&g.solid, &g.dotted})
    for (const auto& [a, b] : *es) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  std::set<Path> external;
  for (auto e : external_positions(s))
    for (int k = 0; k < static_cast<int>(s.children[e.child].children[e.sub].children.size()); ++k)
      external.insert({e.child, e.sub, k});
  std::map<Path, int> matched;
  for (const auto& p : r.mu) {
    matched[p.x]++;
    matched[p.y]++;
  }
  for (const auto& x : external) o.require(matched[x] == 1, "external node " + path_str(x) + " matched " + std::to_string(matched[x]) + " times");
  o.require(matched.size() == external.size(), "chain pairs touch internal nodes");
  std::set<Path> seen;
  for (const auto& x : g.nodes) {
    if (seen.count(x)) continue;
    std::vector<Path> comp{x};
    seen.insert(x);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& y : adj[comp[i]])
        if (seen.insert(y).second) comp.push_back(y);
    std::size_t degree_sum = 0, ends = 0;
    for (const auto& y : comp) {
      const auto d = adj[y].size();
      o.require(d == 1 || d == 2, "chain degree " + std::to_string(d));
      degree_sum += d;
      ends += d == 1;
    }
    const auto edges = degree_sum / 2;
    // A path has two ends and one edge fewer than nodes; a cycle none.
    o.require((ends == 2 && edges + 1 == comp.size()) || (ends == 0 && edges == comp.size()), "chain component is not a path or cycle");
  }
}

Outcome closure_suite() {
  Outcome o;
  Rng rng(2);
  int shells = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const int dim = 2 + trial % 2;
    Shell s = random_shell(rng, dim, false, {dim == 2 ? 8 : 5, 3});
    if (s.children.size() > 8 || is_closed(s)) continue;
    ++shells;
    const std::string tag = "trial " + std::to_string(trial);
    ClosureResult r = close(s);
    o.require(validate_shell(r.closed).ok(), tag + ": closure invalid");
    o.require(is_closed(r.closed), tag + ": closure open");
    if (dim >= 3) chain_property(s, r, o);
    Shell renamed = transport(s, random_iso(rng, s));
    o.require(shell_canonical_code(close(renamed).closed, kBudget) == shell_canonical_code(r.closed, kBudget),
              tag + ": code depends on naming");
  }
  o.require(shells >= 200, "only " + std::to_string(shells) + " open shells");
  o.detail = std::to_string(shells) + " open shells";
  return o;
}

// ---- 3

// Every labeling of the new components of the closure that makes the whole
// labeling valid, found by backtracking with a conjugation check on links.
std::vector<std::map<Path, std::string>> extensions(const Hypergraph& h, const PastingDiagram& pd, const ClosureResult& r) {
  const LabelSet& sigma = h.labels();
  std::vector<Path> fresh;
  for (const auto& [from, to] : r.star) fresh.push_back(to);
  std::map<Path, std::vector<Path>> partners;
  for (const auto& lp : linked_pairs(r.closed)) {
    partners[lp.x].push_back(lp.y);
    partners[lp.y].push_back(lp.x);
  }
  Labeling l{r.closed, pd.labels};
  std::vector<std::map<Path, std::string>> found;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == fresh.size()) {
      if (validate_labeling(l, sigma).ok()) {
        std::map<Path, std::string> ext;
        for (const auto& p : fresh) ext[p] = l.labels.at(p);
        found.push_back(ext);
      }
      return;
    }
    const Path& x = fresh[i];
    for (const auto& name : sigma.of_grade(component_dim(r.closed, x))) {
      bool fits = true;
      for (const auto& y : partners[x])
        if (auto it = l.labels.find(y); it != l.labels.end() && it->second != sigma.conj(name)) fits = false;
      if (!fits) continue;
      l.labels[x] = name;
      go(i + 1);
      l.labels.erase(x);
    }
  };
  go(0);
  return found;
}

Outcome composite_uniqueness() {
  Outcome o;
  Rng rng(3);
  int cases = 0;
  for (int trial = 0; trial < 240; ++trial) {
    // A 0-diagram's closure has no gluings to pin the new points, so only
    // dimensions 1 and 2 are meaningful here.
    const int dim = 1 + trial % 2;
    HypergraphShape hs;
    hs.object_pairs = 1;
    hs.arrow_pairs = dim == 1 ? 3 : 2;
    hs.cell_pairs = 1;
    Hypergraph h = random_hypergraph(rng, dim, hs);
    o.require(h.labels().all().size() <= 8, "label set too large");
    PdShape ps;
    ps.max_cells = 4;
    PastingDiagram pd = random_pd(rng, h, ps);
    if (pd.shell.children.size() > 4 || !coherent(h, pd)) continue;
    ++cases;
    const std::string tag = "trial " + std::to_string(trial);
    FormalComposite fc = formal_composite(h, pd);
    auto found = extensions(h, pd, fc.closure);
    o.require(found.size() == 1, tag + ": " + std::to_string(found.size()) + " extensions");
    if (found.size() == 1)
      for (const auto& [p, label] : found[0])
        o.require(fc.labeling.labels.count(p) && fc.labeling.labels.at(p) == label, tag + ": differs at " + path_str(p));
  }
  o.require(cases >= 150, "only " + std::to_string(cases) + " diagrams");
  o.detail = std::to_string(cases) + " diagrams, dims 1-2";
  return o;
}

// ---- 4, 5

Outcome laws(const std::vector<std::pair<int, LawVariant>>& runs, int cases) {
  Outcome o;
  int total = 0, passed = 0;
  for (const auto& [dim, variant] : runs) {
    LawOutcome out = check_monad_laws(1000 * (dim + 1) + static_cast<int>(variant), dim, cases, variant);
    total += out.cases;
    passed += out.passed;
    for (const auto& i : out.report.issues) o.require(false, "[" + i.clause + "] " + i.message);
  }
  o.detail = std::to_string(passed) + "/" + std::to_string(total) + " cases";
  return o;
}

// ---- 6

bool sequent_true(const LogicAlgebra& L, const std::map<std::string, bool>& v, const std::string& s) {
  for (const auto& lit : L.literals_of(s)) {
    const bool neg = lit.size() > 1 && lit.back() == '*';
    if (v.at(neg ? lit.substr(0, lit.size() - 1) : lit) != neg) return true;
  }
  return false;
}

Outcome logic_model() {
  Outcome o;
  int cases = 0;
  for (int vars = 1; vars <= 4; ++vars)
    for (int bits = 0; bits < (1 << vars); ++bits) {
      std::map<std::string, bool> v;
      for (int i = 0; i < vars; ++i) v[std::string(1, static_cast<char>('p' + i))] = (bits >> i) & 1;
      LogicAlgebra L(v, 2);
      for (const auto& g : L.generators()) o.require(sequent_true(L, v, g), "generator " + g + " is false");
      Rng rng(vars * 100 + bits);
      PdShape ps;
      ps.mode = PdMode::acircuit;
      ps.tops = L.generators();
      for (int trial = 0; trial < 12; ++trial, ++cases) {
        PastingDiagram pd = random_pd(rng, L.hypergraph(), ps);
        const std::string s = L.act(pd);
        o.require(sequent_true(L, v, s), "cut yields false sequent " + s);
      }
      LawOutcome laws = check_algebra(L, LawVariant::acircuit, 4, 7 * bits + vars);
      o.require(laws.report.ok(), laws.report.str());
    }
  o.detail = std::to_string(cases) + " cut diagrams over 30 assignments";
  return o;
}

// ---- 7

Outcome category_correspondence() {
  Outcome o;
  int triples = 0;
  for (const auto& c : {fixtures::cyclic_monoid(3), fixtures::chain_poset(4)}) {
    CategoryAlgebra a(c);
    CategoryData d = category_decode(a);
    o.require(d == c, "decode(encode(C)) differs");
    Report r = validate_category(d);
    o.require(r.ok(), r.str());
    const Hypergraph& h = a.hypergraph();
    for (const auto& [f, fe] : d.arrows) {
      o.require(a.act(chain_pd(h, {d.identity.at(fe.first), f})) == f, "left unit at " + f);
      o.require(a.act(chain_pd(h, {f, d.identity.at(fe.second)})) == f, "right unit at " + f);
      for (const auto& [g, ge] : d.arrows) {
        if (fe.second != ge.first) continue;
        for (const auto& [k, ke] : d.arrows) {
          if (ge.second != ke.first) continue;
          ++triples;
          const std::string left = a.act(chain_pd(h, {a.act(chain_pd(h, {f, g})), k}));
          const std::string right = a.act(chain_pd(h, {f, a.act(chain_pd(h, {g, k}))}));
          o.require(left == right && left == d.compose.at({k, d.compose.at({g, f})}), "associativity at " + f + "," + g + "," + k);
        }
      }
    }
  }
  o.detail = std::to_string(triples) + " composable triples";
  return o;
}

// ---- 8

Outcome lafont_engine() {
  Outcome o;
  auto two = lafont::reduce(lafont::mul_net(2, 2), lafont::Strategy::leftmost, 1000, 0, true);
  o.require(two.normal && lafont::decode_number(two.net) == 4, "2 x 2 does not give 4");
  o.require(lafont::check_trace(two.trace, lafont::mul_net(2, 2), two.net).ok(), "2 x 2 trace");
  int runs = 0;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (bool mul : {false, true}) {
        const auto start = mul ? lafont::mul_net(m, n) : lafont::add_net(m, n);
        const int want = mul ? m * n : m + n;
        const std::string tag = std::to_string(m) + (mul ? "x" : "+") + std::to_string(n);
        auto base = lafont::reduce(start, lafont::Strategy::leftmost, 5000);
        o.require(base.normal && lafont::decode_number(base.net) == want, tag);
        const std::string code = lafont::net_code(base.net);
        for (std::uint64_t seed = 0; seed < 20; ++seed, ++runs) {
          auto r = lafont::reduce(start, lafont::Strategy::random, 5000, seed);
          o.require(r.normal && lafont::net_code(r.net) == code, tag + " seed " + std::to_string(seed));
        }
      }
  o.detail = "2x2 = 4 in " + std::to_string(two.trace.steps.size()) + " steps, " + std::to_string(runs) + " random orders";
  return o;
}

// ---- 9

Outcome weak_checker() {
  Outcome o;
  CategoryData poset = fixtures::chain_poset(4);
  WeakModel m = fixtures::weak_model(poset);
  o.require(is_of_type_sigma(m), "model not of type Sigma");
  for (const auto& [name, rep] : {std::pair{"H1", check_H1(m)}, {"H2", check_H2(m)}, {"H3", check_H3(m)}}) {
    o.require(rep.report.ok(), std::string(name) + ": " + rep.report.str());
    o.require(!rep.exhausted, std::string(name) + " exhausted its budget");
  }
  DerivedCategory d = derive_category(m);
  o.require(d.report.ok(), d.report.str());
  o.require(d.category == poset, "derived category differs");
  o.require(d.category.identity.size() == poset.objects.size(), "quasi-identity count");

  // Remove the transpose of a two-arrow composite.
  std::string victim;
  for (const auto& u : m.universal)
    if (u.rfind("t[", 0) == 0 && std::count(u.begin(), u.end(), ',') == 1 && u.back() == ']') {
      victim = u;
      break;
    }
  o.require(!victim.empty(), "no two-arrow transpose in the model");
  WeakModel broken = m;
  broken.universal.erase(victim);
  broken.universal.erase(star_name(victim));
  AxiomReport h2 = check_H2(broken);
  const std::string cell = "c" + victim.substr(1);
  o.require(h2.report.has_clause("H2"), "H2 passes without " + victim);
  o.require(h2.report.str().find(cell) != std::string::npos, "H2 does not name " + cell);
  o.detail = "poset-chain-4 clean; without " + victim + " H2 names " + cell;
  return o;
}

// ---- 10

template <typename T>
void round_trip(const std::string& text, Outcome& o, const std::string& kind) {
  Document d = parse_doc(text);
  std::string again;
  if constexpr (std::is_same_v<T, Labeling>) again = render_doc(std::get<T>(d.value), d.kind);
  else again = render_doc(std::get<T>(d.value));
  o.require(d.kind == kind && again == text, kind + " does not round-trip");
}

Outcome persistence() {
  Outcome o;
  round_trip<Shell>(render_doc(fixtures::tetrahedron()), o, "shell");
  round_trip<Shell>(render_doc(fixtures::open_triangle_fan()), o, "shell");
  round_trip<Labeling>(render_doc(fixtures::three_arrow_pd(), "pd"), o, "pd");
  round_trip<Hypergraph>(render_doc(fixtures::three_arrow_hypergraph()), o, "hypergraph");
  round_trip<Hypergraph>(render_doc(lafont::signature()), o, "hypergraph");
  round_trip<WeakModel>(render_doc(fixtures::weak_model(fixtures::chain_poset(4))), o, "weakmodel");
  round_trip<WeakModel>(render_doc(fixtures::weak_model(fixtures::cyclic_monoid(3))), o, "weakmodel");
  o.require(render_doc(fixtures::tetrahedron()) == render_doc(fixtures::tetrahedron()), "rendering not deterministic");

  Rng rng(10);
  int docs = 0;
  for (int i = 0; i < 500; ++i) {
    Shell s = random_shell(rng, i % 4, i % 2 == 0);
    round_trip<Shell>(render_doc(s), o, "shell");
    Document sd = parse_doc(render_doc(s));
    o.require(shell_canonical_code(std::get<Shell>(sd.value), kBudget) == shell_canonical_code(s, kBudget), "shell code changes");
    LabelSet sigma;
    round_trip<Labeling>(render_doc(random_labeling(rng, s, sigma, false)), o, "labeling");
    Hypergraph h = random_hypergraph(rng, i % 3);
    round_trip<Hypergraph>(render_doc(h), o, "hypergraph");
    PastingDiagram pd = random_pd(rng, h);
    round_trip<Labeling>(render_doc(pd, "pd"), o, "pd");
    auto red = lafont::reduce(lafont::mul_net(i % 4, (i / 4) % 4), lafont::Strategy::random, i % 30, i);
    round_trip<lafont::Net>(render_doc(red.net.agents.empty() ? lafont::encode_number(0) : red.net), o, "net");
    round_trip<lafont::Trace>(render_doc(red.trace), o, "trace");
    round_trip<WeakModel>(render_doc(fixtures::weak_model(fixtures::cyclic_monoid(1 + i % 3), 1 + i % 2)), o, "weakmodel");
    Lifted L(h);
    Outer outer{unflatten(L, pd, random_groups(rng, pd, false)), {}};
    for (const auto& [p, label] : outer.outer.labels)
      if (p.size() == 1) outer.slots[label] = L.pd(label);
    round_trip<Outer>(render_doc(outer), o, "outer");
    docs += 8;
  }
  o.detail = std::to_string(docs) + " random documents, 8 kinds";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "tetrahedron fixture", 1.0, tetrahedron},
      {2, "closure suite", 30.0, closure_suite},
      {3, "formal composite uniqueness", 60.0, composite_uniqueness},
      {4, "monad laws", 60.0, [] { return laws({{1, LawVariant::full}, {2, LawVariant::full}}, 100); }},
      {5, "submonad closure", 0,
       [] {
         return laws({{1, LawVariant::acircuit}, {2, LawVariant::acircuit}, {1, LawVariant::acyclic}, {2, LawVariant::acyclic}}, 100);
       }},
      {6, "logic model", 0, logic_model},
      {7, "category correspondence", 0, category_correspondence},
      {8, "lafont engine", 30.0, lafont_engine},
      {9, "weak model checker", 0, weak_checker},
      {10, "persistence", 0, persistence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) o.require(false, "took longer than the limit");
    failed += !o.ok;
    std::printf("%s %2d %-28s %s (%.2f s%s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.limit > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit)) + " s").c_str() : "");
    for (const auto& f : o.failures) std::printf("     %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}

#include "hypershell/strictcat.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

#include "hypershell/fixtures.hpp"
#include "hypershell/generators.hpp"

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

PdMode mode_of(LawVariant v) {
  return v == LawVariant::full ? PdMode::any : v == LawVariant::acircuit ? PdMode::acircuit : PdMode::acyclic;
}

void one_sample(Algebra& a, LawVariant variant, std::uint64_t seed, int index, Report& r) {
  Rng rng(seed);
  const Hypergraph& h = a.hypergraph();
  const std::string tag = "seed " + std::to_string(seed);
  auto gens = a.generators();
  if (gens.empty()) throw std::invalid_argument("check_algebra: no generators");

  const std::string& c = gens[static_cast<std::size_t>(index) % gens.size()];
  if (!a.same(a.act(eta(h, c)), c)) r.add("unit", tag + ": act(eta " + c + ") != " + c);

  PdShape ps;
  ps.mode = mode_of(variant);
  ps.tops = gens;
  PastingDiagram pd = random_pd(rng, h, ps);
  if (!in_variant(pd, h.labels(), variant)) r.add("generator", tag + ": sample outside the variant");
  const std::string whole = a.act(pd);

  if (h.dim() >= 1) {
    Frame expect = conjugate_labeling(formal_composite(h, pd).frame, h.labels());
    if (labeling_code(expect, h.budget) != h.boundary_code(whole))
      r.add("boundary", tag + ": boundary of " + whole + " is not the composite boundary");
  }

  Lifted L(h);
  std::vector<std::vector<int>> groups;
  PastingDiagram outer;
  for (int attempt = 0; attempt < 8; ++attempt) {
    groups = random_groups(rng, pd, variant != LawVariant::full);
    outer = unflatten(L, pd, groups);
    if (in_variant(outer, L.hypergraph().labels(), variant)) break;
    groups.clear();
  }
  if (groups.empty()) {
    std::vector<int> all(pd.shell.children.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    groups = {all};
    outer = unflatten(L, pd, groups);
  }

  const std::string route_mu = a.act(flatten(L, outer));
  PastingDiagram acted = outer;
  for (std::size_t t = 0; t < outer.shell.children.size(); ++t) {
    const int ti = static_cast<int>(t);
    acted.labels[{ti}] = a.act(L.pd(outer.labels.at({ti})));
  }
  std::string why;
  if (!coherent(h, acted, &why)) {
    r.add("boundary", tag + ": acted outer diagram is incoherent: " + why);
    return;
  }
  const std::string route_act = a.act(acted);
  if (!a.same(route_mu, whole) || !a.same(route_act, whole))
    r.add("associativity", tag + ": " + whole + " / " + route_mu + " / " + route_act);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

// Sub-indices of the positively and negatively signed points of cell t.
void signed_points(const Hypergraph& h, const PastingDiagram& pd, int t, std::vector<int>& pos, std::vector<int>& neg) {
  const int k = static_cast<int>(pd.shell.children.at(t).children.size());
  for (int j = 0; j < k; ++j) {
    auto s = h.labels().sign(pd.labels.at({t, j}));
    if (!s) throw std::invalid_argument("act: unsigned object " + pd.labels.at({t, j}));
    (*s > 0 ? pos : neg).push_back(j);
  }
}

}  // namespace

LawOutcome check_algebra(Algebra& a, LawVariant variant, int samples, std::uint64_t seed) {
  LawOutcome out;
  for (int i = 0; i < samples; ++i) {
    Report r;
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    try {
      one_sample(a, variant, s, i, r);
    } catch (const std::exception& e) {
      r.add("error", "seed " + std::to_string(s) + ": " + e.what());
    }
    ++out.cases;
    if (r.ok()) ++out.passed;
    out.report.merge(r);
  }
  return out;
}

// ---- free algebra

FreeAlgebra::FreeAlgebra(Hypergraph base, std::uint64_t seed, int pool) : base_(std::move(base)) {
  lifted_ = std::make_unique<Lifted>(base_);
  Rng rng(seed);
  std::set<std::string> seen;
  for (int i = 0; i < pool; ++i) {
    std::string name = lifted_->intern(random_pd(rng, base_));
    if (seen.insert(name).second) pool_.push_back(name);
  }
}

std::string FreeAlgebra::act(const PastingDiagram& pd) { return lifted_->intern(flatten(*lifted_, pd)); }

// ---- classical logic

LogicAlgebra::LogicAlgebra(const std::map<std::string, bool>& assignment, int max_width)
    : assignment_(assignment), h_(1, LabelSet{}) {
  std::vector<std::string> literals;
  for (const auto& [v, value] : assignment_) {
    h_.labels().add_pair(v, 0, +1);
    literals.push_back(v);
    literals.push_back(star_name(v));
  }
  // Every set of distinct literals up to max_width that holds.
  const int m = static_cast<int>(literals.size());
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<std::string> pick;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) pick.push_back(literals[i]);
    if (static_cast<int>(pick.size()) > max_width) continue;
    std::string name = sequent(pick);
    if (holds(name)) generators_.push_back(name);
  }
}

std::string LogicAlgebra::sequent(std::vector<std::string> literals) {
  std::sort(literals.begin(), literals.end());
  std::string name = "|-";
  for (std::size_t i = 0; i < literals.size(); ++i) name += (i ? "," : "") + literals[i];
  if (!h_.labels().contains(name)) {
    h_.labels().add(name, 1, "dual(" + name + ")");
    h_.set_boundary(name, fixtures::point_frame(literals));
  }
  return name;
}

std::vector<std::string> LogicAlgebra::literals_of(const std::string& sequent) const {
  if (sequent.rfind("|-", 0) != 0) throw std::invalid_argument("logic: not a sequent: " + sequent);
  if (sequent.size() == 2) return {};
  return split(sequent.substr(2), ',');
}

bool LogicAlgebra::holds(const std::string& sequent) const {
  for (const auto& lit : literals_of(sequent)) {
    const bool negated = !lit.empty() && lit.back() == '*';
    const bool value = assignment_.at(negated ? lit.substr(0, lit.size() - 1) : lit);
    if (value != negated) return true;
  }
  return false;
}

std::string LogicAlgebra::act(const PastingDiagram& pd) {
  if (pd.shell.dim != 2) throw std::invalid_argument("logic: diagram must have dimension 1");
  for (std::size_t t = 0; t < pd.shell.children.size(); ++t) {
    const std::string& l = pd.labels.at({static_cast<int>(t)});
    if (l.rfind("|-", 0) != 0) throw std::invalid_argument("logic: dual sequent " + l + " is not admissible");
  }
  std::vector<std::string> literals;
  for (const auto& p : external_positions(pd.shell)) literals.push_back(pd.labels.at({p.child, p.sub}));
  return sequent(literals);
}

// ---- categories

Report validate_category(const CategoryData& c) {
  Report r;
  std::set<std::string> objects(c.objects.begin(), c.objects.end());
  for (const auto& [f, ends] : c.arrows)
    if (!objects.count(ends.first) || !objects.count(ends.second)) r.add("typing", f + " has an unknown end");
  if (!r.ok()) return r;
  for (const auto& [f, ff] : c.arrows)
    for (const auto& [g, gg] : c.arrows) {
      auto it = c.compose.find({g, f});
      const bool composable = ff.second == gg.first;
      if (composable != (it != c.compose.end())) {
        r.add("closure", g + " after " + f + (composable ? " is missing" : " should not exist"));
        continue;
      }
      if (!composable) continue;
      auto h = c.arrows.find(it->second);
      if (h == c.arrows.end() || h->second != std::make_pair(ff.first, gg.second))
        r.add("typing", g + " after " + f + " has the wrong type");
    }
  for (const auto& o : c.objects) {
    auto it = c.identity.find(o);
    if (it == c.identity.end() || !c.arrows.count(it->second) ||
        c.arrows.at(it->second) != std::make_pair(o, o)) {
      r.add("unit", "no identity on " + o);
      continue;
    }
    for (const auto& [f, ends] : c.arrows) {
      if (ends.first == o && c.compose.at({f, it->second}) != f) r.add("unit", f + " after id " + o);
      if (ends.second == o && c.compose.at({it->second, f}) != f) r.add("unit", "id " + o + " after " + f);
    }
  }
  if (!r.ok()) return r;
  for (const auto& [f, ff] : c.arrows)
    for (const auto& [g, gg] : c.arrows) {
      if (ff.second != gg.first) continue;
      for (const auto& [h, hh] : c.arrows) {
        if (gg.second != hh.first) continue;
        if (c.compose.at({h, c.compose.at({g, f})}) != c.compose.at({c.compose.at({h, g}), f}))
          r.add("associativity", h + ", " + g + ", " + f);
      }
    }
  return r;
}

CategoryAlgebra::CategoryAlgebra(CategoryData c) : c_(std::move(c)), h_(1, LabelSet{}) {
  Report r = validate_category(c_);
  if (!r.ok()) throw std::invalid_argument("category: " + r.str());
  for (const auto& o : c_.objects) h_.labels().add_pair(o, 0, +1);
  for (const auto& [f, ends] : c_.arrows) {
    h_.labels().add_pair(f, 1);
    h_.set_boundary(f, fixtures::point_frame({ends.first, star_name(ends.second)}));
  }
}

std::vector<std::string> CategoryAlgebra::generators() const {
  std::vector<std::string> out;
  for (const auto& [f, ends] : c_.arrows) out.push_back(f);
  return out;
}

std::string CategoryAlgebra::act(const PastingDiagram& pd) {
  if (pd.shell.dim != 2) throw std::invalid_argument("category: diagram must have dimension 1");
  const int k = static_cast<int>(pd.shell.children.size());
  std::vector<int> dom(k), cod(k);
  int start = -1;
  auto partners = partner_map(pd.shell);
  for (int t = 0; t < k; ++t) {
    if (!c_.arrows.count(pd.labels.at({t}))) throw std::invalid_argument("category: " + pd.labels.at({t}) + " is not an arrow");
    std::vector<int> pos, neg;
    signed_points(h_, pd, t, pos, neg);
    dom[t] = pos.at(0);
    cod[t] = neg.at(0);
    if (!partners.count({t, dom[t]})) {
      if (start >= 0) throw std::invalid_argument("category: diagram is not a chain");
      start = t;
    }
  }
  if (start < 0) throw std::invalid_argument("category: diagram has a circuit");
  std::string acc = pd.labels.at({start});
  int cur = start, seen = 1;
  while (true) {
    auto it = partners.find({cur, cod[cur]});
    if (it == partners.end()) break;
    const int next = it->second.at.child;
    if (it->second.at.sub != dom[next] || ++seen > k) throw std::invalid_argument("category: diagram is not a chain");
    acc = c_.compose.at({pd.labels.at({next}), acc});
    cur = next;
  }
  if (seen != k) throw std::invalid_argument("category: diagram is not a chain");
  return acc;
}

PastingDiagram chain_pd(const Hypergraph& h, const std::vector<std::string>& arrows) {
  if (arrows.empty()) throw std::invalid_argument("chain_pd: no arrows");
  PastingDiagram pd;
  pd.shell.dim = 2;
  std::vector<int> pos, neg;
  int prev_cod = -1;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const int t = static_cast<int>(i);
    Cell cell = label_cell(h, arrows[i]);
    pd.shell.children.push_back(cell.shell);
    for (const auto& [p, l] : cell.labels) pd.labels[concat({t}, p)] = l;
    pos.clear();
    neg.clear();
    signed_points(h, pd, t, pos, neg);
    if (pos.size() != 1 || neg.size() != 1) throw std::invalid_argument("chain_pd: boundary of " + arrows[i] + " is not (A, B*)");
    if (t > 0) {
      if (h.labels().conj(pd.labels.at({t - 1, prev_cod})) != pd.labels.at({t, pos[0]}))
        throw std::invalid_argument("chain_pd: " + arrows[i - 1] + " and " + arrows[i] + " do not compose");
      pd.shell.link.push_back({{t - 1, prev_cod}, {t, pos[0]}, identity_iso(point())});
    }
    prev_cod = neg[0];
  }
  return pd;
}

CategoryData category_decode(Algebra& a) {
  const Hypergraph& h = a.hypergraph();
  if (h.dim() != 1) throw std::invalid_argument("decode: hypergraph must have dimension 1");
  CategoryData c;
  for (const auto& o : h.labels().of_grade(0)) {
    auto s = h.labels().sign(o);
    if (!s) throw std::invalid_argument("decode: unsigned object " + o);
    if (*s > 0) c.objects.push_back(o);
  }
  for (const auto& f : a.generators()) {
    const Frame& b = h.boundary(f);
    std::string dom, cod;
    for (const auto& [p, l] : b.labels) {
      auto s = h.labels().sign(l);
      if (s && *s > 0 && dom.empty()) dom = l;
      else if (s && *s < 0 && cod.empty()) cod = h.labels().conj(l);
      else dom = cod = "";
    }
    if (b.shell.children.size() != 2 || dom.empty() || cod.empty())
      throw std::invalid_argument("decode: boundary of " + f + " is not (A, B*)");
    c.arrows[f] = {dom, cod};
  }
  for (const auto& [f, ff] : c.arrows)
    for (const auto& [g, gg] : c.arrows)
      if (ff.second == gg.first) {
        std::string gf = a.act(chain_pd(h, {f, g}));
        if (!c.arrows.count(gf)) throw std::invalid_argument("decode: composite " + gf + " is not a generator");
        c.compose[{g, f}] = gf;
      }
  for (const auto& o : c.objects) {
    for (const auto& [e, ee] : c.arrows) {
      if (ee != std::make_pair(o, o)) continue;
      bool unit = true;
      for (const auto& [f, ff] : c.arrows) {
        if (ff.first == o && c.compose.at({f, e}) != f) unit = false;
        if (ff.second == o && c.compose.at({e, f}) != f) unit = false;
      }
      if (unit) {
        c.identity[o] = e;
        break;
      }
    }
    if (!c.identity.count(o)) throw std::invalid_argument("decode: no identity on " + o);
  }
  return c;
}

// ---- multicategories

namespace {

struct Term {
  std::string op;  // empty for a leaf
  std::vector<Term> args;
  int leaf = 0;
  Position at;  // external position while composing
};

class TermParser {
 public:
  explicit TermParser(const std::string& s) : s_(s) {}
  Term parse() {
    Term t = term();
    if (i_ != s_.size()) fail();
    return t;
  }

 private:
  Term term() {
    Term t;
    if (i_ < s_.size() && s_[i_] == '_') {
      ++i_;
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail();
      t.leaf = std::stoi(s_.substr(start, i_ - start));
      return t;
    }
    std::size_t start = i_;
    while (i_ < s_.size() && s_[i_] != '(' && s_[i_] != ')' && s_[i_] != ',') ++i_;
    t.op = s_.substr(start, i_ - start);
    if (t.op.empty() || i_ >= s_.size() || s_[i_] != '(') fail();
    ++i_;
    if (i_ < s_.size() && s_[i_] == ')') {
      ++i_;
      return t;
    }
    while (true) {
      t.args.push_back(term());
      if (i_ >= s_.size()) fail();
      if (s_[i_] == ')') break;
      if (s_[i_] != ',') fail();
      ++i_;
    }
    ++i_;
    return t;
  }
  [[noreturn]] void fail() const { throw std::invalid_argument("term: cannot parse " + s_); }

  const std::string& s_;
  std::size_t i_ = 0;
};

std::string render(const Term& t, bool numbered) {
  if (t.op.empty()) return numbered ? "_" + std::to_string(t.leaf) : "_";
  std::vector<std::string> args;
  for (const auto& a : t.args) args.push_back(render(a, numbered));
  if (!numbered) std::sort(args.begin(), args.end());
  std::string out = t.op + "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i];
  return out + ")";
}

void collect_leaves(Term& t, std::vector<Term*>& out) {
  if (t.op.empty()) out.push_back(&t);
  for (auto& a : t.args) collect_leaves(a, out);
}

}  // namespace

std::string unordered_term(const std::string& term) { return render(TermParser(term).parse(), false); }

FreeMulticategory::FreeMulticategory(const std::vector<std::string>& objects, const std::vector<Operation>& generators)
    : h_(1, LabelSet{}) {
  for (const auto& o : objects) h_.labels().add_pair(o, 0, +1);
  for (const auto& g : generators) {
    if (g.name.empty() || g.name[0] == '_' || g.name.find_first_of("(),") != std::string::npos)
      throw std::invalid_argument("multicategory: bad operation name " + g.name);
    if (!ops_.emplace(g.name, g).second) throw std::invalid_argument("multicategory: duplicate operation " + g.name);
  }
  for (const auto& g : generators) {
    std::string t = g.name + "(";
    for (std::size_t i = 0; i < g.inputs.size(); ++i) t += (i ? ",_" : "_") + std::to_string(i + 1);
    generators_.push_back(intern_term(t + ")"));
  }
}

std::string FreeMulticategory::intern_term(const std::string& text) {
  Term t = TermParser(text).parse();
  const std::string name = render(t, true);
  if (h_.labels().contains(name)) return name;
  std::map<int, std::string> leaf_type;
  std::function<std::string(const Term&)> type_of = [&](const Term& u) -> std::string {
    auto it = ops_.find(u.op);
    if (it == ops_.end()) throw std::invalid_argument("multicategory: unknown operation " + u.op);
    const Operation& op = it->second;
    if (op.inputs.size() != u.args.size()) throw std::invalid_argument("multicategory: wrong arity for " + u.op);
    for (std::size_t i = 0; i < u.args.size(); ++i) {
      const Term& a = u.args[i];
      if (a.op.empty()) {
        if (!leaf_type.emplace(a.leaf, op.inputs[i]).second) throw std::invalid_argument("multicategory: repeated leaf");
      } else if (type_of(a) != op.inputs[i]) {
        throw std::invalid_argument("multicategory: ill-typed term " + name);
      }
    }
    return op.output;
  };
  if (t.op.empty()) throw std::invalid_argument("multicategory: a bare leaf is not an operation");
  const std::string out = type_of(t);
  std::vector<std::string> frame;
  int expect = 1;
  for (const auto& [k, type] : leaf_type) {
    if (k != expect++) throw std::invalid_argument("multicategory: leaves must be numbered 1..m in " + name);
    frame.push_back(type);
  }
  frame.push_back(star_name(out));
  h_.labels().add_pair(name, 1);
  h_.set_boundary(name, fixtures::point_frame(frame));
  return name;
}

bool FreeMulticategory::same(const std::string& a, const std::string& b) const {
  return unordered_term(a) == unordered_term(b);
}

std::string FreeMulticategory::act(const PastingDiagram& pd) {
  if (pd.shell.dim != 2) throw std::invalid_argument("multicategory: diagram must have dimension 1");
  const int k = static_cast<int>(pd.shell.children.size());
  auto partners = partner_map(pd.shell);
  std::vector<std::vector<int>> inputs(k);
  std::vector<int> output(k);
  int root = -1;
  for (int t = 0; t < k; ++t) {
    const std::string& l = pd.labels.at({t});
    if (!h_.labels().contains(l) || l.back() == '*') throw std::invalid_argument("multicategory: " + l + " is not an operation");
    std::vector<int> neg;
    signed_points(h_, pd, t, inputs[t], neg);
    if (neg.size() != 1) throw std::invalid_argument("multicategory: " + l + " needs exactly one output");
    output[t] = neg[0];
    if (!partners.count({t, output[t]})) {
      if (root >= 0) throw std::invalid_argument("multicategory: diagram is not a tree");
      root = t;
    }
  }
  if (root < 0) throw std::invalid_argument("multicategory: diagram has a circuit");

  std::vector<bool> used(k, false);
  std::function<Term(int)> build = [&](int t) -> Term {
    if (used[t]) throw std::invalid_argument("multicategory: diagram has a circuit");
    used[t] = true;
    const std::string& label = pd.labels.at({t});
    const Frame& b = h_.boundary(label);
    Term term = TermParser(label).parse();
    // Leaf k of type X is the j-th point of type X in the cell, where j
    // is the rank of k among the leaves of type X.
    std::map<std::string, std::vector<int>> by_type;
    for (int j : inputs[t]) by_type[pd.labels.at({t, j})].push_back(j);
    std::map<std::string, int> taken;
    std::map<int, int> point_of;
    for (int leaf = 1; leaf < static_cast<int>(b.shell.children.size()); ++leaf) {
      const std::string& type = b.labels.at({leaf - 1});
      auto& pts = by_type[type];
      int& n = taken[type];
      if (n >= static_cast<int>(pts.size())) throw std::invalid_argument("multicategory: cell " + label + " is mistyped");
      point_of[leaf] = pts[n++];
    }
    std::vector<Term*> leaves;
    collect_leaves(term, leaves);
    for (Term* lf : leaves) {
      const int j = point_of.at(lf->leaf);
      auto it = partners.find({t, j});
      if (it == partners.end()) {
        lf->at = {t, j};
        lf->leaf = -1;
        continue;
      }
      const int u = it->second.at.child;
      if (it->second.at.sub != output[u]) throw std::invalid_argument("multicategory: input glued to an input");
      *lf = build(u);
    }
    return term;
  };
  Term whole = build(root);
  if (std::find(used.begin(), used.end(), false) != used.end()) throw std::invalid_argument("multicategory: diagram is not connected");
  std::vector<Term*> leaves;
  collect_leaves(whole, leaves);
  std::sort(leaves.begin(), leaves.end(), [](const Term* x, const Term* y) { return x->at < y->at; });
  for (std::size_t i = 0; i < leaves.size(); ++i) leaves[i]->leaf = static_cast<int>(i) + 1;
  return intern_term(render(whole, true));
}

namespace fixtures {

CategoryData chain_poset(int k) {
  if (k < 1) throw std::invalid_argument("chain_poset: need at least one object");
  CategoryData c;
  auto arrow = [](int i, int j) { return std::to_string(i) + "<=" + std::to_string(j); };
  for (int i = 0; i < k; ++i) {
    c.objects.push_back(std::to_string(i));
    c.identity[std::to_string(i)] = arrow(i, i);
    for (int j = i; j < k; ++j) c.arrows[arrow(i, j)] = {std::to_string(i), std::to_string(j)};
  }
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      for (int l = j; l < k; ++l) c.compose[{arrow(j, l), arrow(i, j)}] = arrow(i, l);
  std::sort(c.objects.begin(), c.objects.end());
  return c;
}

CategoryData cyclic_monoid(int k) {
  if (k < 1) throw std::invalid_argument("cyclic_monoid: order must be positive");
  CategoryData c;
  auto name = [](int i) { return i == 0 ? std::string("e") : i == 1 ? std::string("r") : "r" + std::to_string(i); };
  c.objects = {"M"};
  c.identity["M"] = "e";
  for (int i = 0; i < k; ++i) c.arrows[name(i)] = {"M", "M"};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c.compose[{name(i), name(j)}] = name((i + j) % k);
  return c;
}

}  // namespace fixtures

}  // namespace hyper

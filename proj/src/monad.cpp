#include "hypershell/monad.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hyper {

namespace {

void require_pd(const Hypergraph& h, const PastingDiagram& pd, const char* who) {
  if (classify(pd, h.labels()) != Kind::pasting_diagram)
    throw std::invalid_argument(std::string(who) + ": not a pasting diagram: " + validate_labeling(pd, h.labels()).str());
  std::string why;
  if (!coherent(h, pd, &why)) throw std::invalid_argument(std::string(who) + ": incoherent diagram: " + why);
}

std::string hex_hash(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

FormalComposite formal_composite(const Hypergraph& h, const PastingDiagram& pd) {
  require_pd(h, pd, "formal_composite");
  FormalComposite fc;
  fc.pd = pd;
  fc.closure = close(pd.shell);
  fc.labeling.shell = fc.closure.closed;
  fc.labeling.labels = pd.labels;
  for (const auto& [from, to] : fc.closure.star) fc.labeling.labels[to] = h.labels().conj(pd.labels.at(from));
  if (fc.closure.cap < 0) {
    fc.frame = Frame{point(), {}};
  } else {
    fc.frame = restrict_to(fc.labeling, {fc.closure.cap});
  }
  return fc;
}

bool composer_check(const Hypergraph& h, const PastingDiagram& pd, const Cell& cand) {
  ClosureResult r = close(pd.shell);
  if (!(cand.shell == r.closed)) throw std::invalid_argument("composer_check: candidate is not on the closure shell");
  if (classify(cand, h.labels()) != Kind::cell) return false;
  for (const auto& p : node_paths(pd.shell)) {
    if (p.empty()) continue;
    auto it = cand.labels.find(p);
    if (it == cand.labels.end() || it->second != pd.labels.at(p)) return false;
  }
  return true;
}

Cell composite_by(const Hypergraph& h, const PastingDiagram& pd, const Cell& cand) {
  if (!composer_check(h, pd, cand)) throw std::invalid_argument("composite_by: not a composer");
  ClosureResult r = close(pd.shell);
  if (r.cap < 0) throw std::invalid_argument("composite_by: no composite in dimension 0");
  return restrict_to(cand, {r.cap});
}

Lifted::Lifted(const Hypergraph& base) : base_(base) {
  const int n = base.dim();
  lifted_ = base.truncate(n - 1);
  lifted_ = Hypergraph(n, lifted_.labels());
  lifted_.budget = base.budget;
  for (const auto& [name, f] : base.boundaries())
    if (base.labels().grade(name) < n) lifted_.set_boundary_raw(name, f);
}

std::string Lifted::intern(const PastingDiagram& pd) {
  require_pd(base_, pd, "intern");
  const std::string code = labeling_code(pd, base_.budget);
  if (auto it = by_code_.find(code); it != by_code_.end()) return it->second;
  auto fresh_name = [&](const std::string& c) {
    std::string name = "pd:" + hex_hash(c);
    for (int k = 1; registry_.count(name); ++k) name = "pd:" + hex_hash(c) + "~" + std::to_string(k);
    return name;
  };
  const int n = dim();
  std::string name = fresh_name(code);
  PastingDiagram conj = conjugate_labeling(pd, base_.labels());
  std::string conj_code = labeling_code(conj, base_.budget);
  std::string conj_name = conj_code == code ? name : "";
  registry_[name] = pd;
  by_code_[code] = name;
  if (conj_name.empty()) {
    conj_name = fresh_name(conj_code);
    registry_[conj_name] = conj;
    by_code_[conj_code] = conj_name;
  }
  lifted_.labels().add(name, n, conj_name);
  if (n > 0) {
    lifted_.set_boundary_raw(name, conjugate_labeling(formal_composite(base_, pd).frame, base_.labels()));
    if (conj_name != name)
      lifted_.set_boundary_raw(conj_name, conjugate_labeling(formal_composite(base_, conj).frame, base_.labels()));
  }
  return name;
}

const PastingDiagram& Lifted::pd(const std::string& name) const {
  auto it = registry_.find(name);
  if (it == registry_.end()) throw std::out_of_range("lifted: unknown diagram " + name);
  return it->second;
}

Cell label_cell(const Hypergraph& h, const std::string& c) {
  if (h.labels().grade(c) == 0) return Cell{point(), {{{}, c}}};
  return with_root(h.boundary(c), c);
}

PastingDiagram eta(const Hypergraph& h, const std::string& c) { return singleton_pd(label_cell(h, c)); }

std::string Lifted::eta(const std::string& c) { return intern(hyper::eta(base_, c)); }

Flattened flatten_tracked(const Lifted& L, const PastingDiagram& outer) {
  const Hypergraph& lh = L.hypergraph();
  if (classify(outer, lh.labels()) != Kind::pasting_diagram)
    throw std::invalid_argument("flatten: outer is not a pasting diagram: " + validate_labeling(outer, lh.labels()).str());
  Flattened out;
  PastingDiagram& v = out.pd;
  const Shell& s = outer.shell;
  if (s.dim == 1) {
    v.shell = points(0, true);
    for (int t = 0; t < static_cast<int>(s.children.size()); ++t) {
      const PastingDiagram& u = L.pd(outer.labels.at({t}));
      for (int i = 0; i < static_cast<int>(u.shell.children.size()); ++i) {
        v.labels[{static_cast<int>(v.shell.children.size())}] = u.labels.at({i});
        v.shell.children.push_back(point());
      }
    }
    return out;
  }
  v.shell.dim = s.dim;
  const int k = static_cast<int>(s.children.size());
  std::vector<int> offset(k);
  std::vector<ShellIso> psi(k);
  std::vector<std::vector<Position>> ext(k);
  for (int t = 0; t < k; ++t) {
    const std::string& name = outer.labels.at({t});
    const PastingDiagram& u = L.pd(name);
    Frame slot = face_frame(outer, {t});
    const Frame& bd = lh.boundary(name);
    if (slot == bd) {
      psi[t] = identity_iso(slot.shell);
    } else {
      auto iso = labeled_iso(slot, bd, lh.budget);
      if (!iso) throw std::invalid_argument("flatten: slot " + std::to_string(t) + " does not fit " + name);
      psi[t] = *iso;
    }
    ext[t] = external_positions(u.shell);
    offset[t] = static_cast<int>(v.shell.children.size());
    for (const auto& c : u.shell.children) v.shell.children.push_back(c);
    for (auto lp : u.shell.link) {
      lp.a.child += offset[t];
      lp.b.child += offset[t];
      v.shell.link.push_back(lp);
    }
    for (const auto& [p, label] : u.labels) {
      if (p.empty()) continue;
      Path q = p;
      q[0] += offset[t];
      v.labels[q] = label;
    }
  }
  auto image = [&](Position p) {
    Position e = ext[p.child].at(psi[p.child].perm.at(p.sub));
    return Position{e.child + offset[p.child], e.sub};
  };
  for (const auto& lp : s.link) {
    const ShellIso& pa = psi[lp.a.child].sub.at(lp.a.sub);
    const ShellIso& pb = psi[lp.b.child].sub.at(lp.b.sub);
    v.shell.link.push_back({image(lp.a), image(lp.b), compose(pb, compose(lp.iso, inverse(pa)))});
  }
  for (auto p : external_positions(s)) out.externals[p] = {image(p), psi[p.child].sub.at(p.sub)};
  return out;
}

PastingDiagram flatten(const Lifted& L, const PastingDiagram& outer) { return flatten_tracked(L, outer).pd; }

PastingDiagram reslot(const PastingDiagram& pd, int t, const std::string& name, const Frame& frame,
                      const std::vector<std::pair<int, ShellIso>>& tau) {
  PastingDiagram out;
  out.shell = pd.shell;
  out.shell.children.at(t) = frame.shell;
  for (const auto& [p, label] : pd.labels)
    if (p.empty() || p[0] != t) out.labels[p] = label;
  out.labels[{t}] = name;
  for (const auto& [p, label] : frame.labels) out.labels[concat({t}, p)] = label;
  for (auto& lp : out.shell.link) {
    if (lp.a.child == t) {
      const auto& [idx, iso] = tau.at(lp.a.sub);
      lp.iso = compose(lp.iso, inverse(iso));
      lp.a.sub = idx;
    }
    if (lp.b.child == t) {
      const auto& [idx, iso] = tau.at(lp.b.sub);
      lp.iso = compose(iso, lp.iso);
      lp.b.sub = idx;
    }
  }
  return out;
}

namespace {

// Slot map for replacing a slot whose children follow `from_ext` (externals
// of diagram `from`) by the registered diagram `name`, via an isomorphism
// from -> registered.
std::vector<std::pair<int, ShellIso>> slot_map(const Lifted& L, const std::string& name, const PastingDiagram& from,
                                               const std::vector<std::pair<Position, ShellIso>>& from_ext) {
  const PastingDiagram& reg = L.pd(name);
  ShellIso phi;
  if (from == reg) {
    phi = identity_iso(from.shell);
  } else {
    auto iso = labeled_iso(from, reg, L.base().budget);
    if (!iso) throw std::logic_error("lifted: registered diagram is not isomorphic");
    phi = *iso;
  }
  auto reg_ext = external_positions(reg.shell);
  std::vector<std::pair<int, ShellIso>> tau;
  for (const auto& [p, sigma] : from_ext) {
    Position q{phi.perm.at(p.child), phi.sub.at(p.child).perm.at(p.sub)};
    int idx = static_cast<int>(std::find(reg_ext.begin(), reg_ext.end(), q) - reg_ext.begin());
    tau.push_back({idx, compose(phi.sub[p.child].sub.at(p.sub), sigma)});
  }
  return tau;
}

}  // namespace

PastingDiagram map_eta(Lifted& L, const PastingDiagram& pd) {
  PastingDiagram out = pd;
  if (pd.shell.dim == 1) {
    for (int t = 0; t < static_cast<int>(pd.shell.children.size()); ++t) out.labels[{t}] = L.eta(pd.labels.at({t}));
    return out;
  }
  for (int t = 0; t < static_cast<int>(pd.shell.children.size()); ++t) {
    PastingDiagram single = singleton_pd(face(pd, {t}));
    std::string name = L.intern(single);
    std::vector<std::pair<Position, ShellIso>> from_ext;
    for (int j = 0; j < static_cast<int>(pd.shell.children[t].children.size()); ++j)
      from_ext.push_back({{0, j}, identity_iso(pd.shell.children[t].children[j])});
    out = reslot(out, t, name, L.hypergraph().boundary(name), slot_map(L, name, single, from_ext));
  }
  return out;
}

PastingDiagram map_flatten(Lifted& L, const Lifted& M, const PastingDiagram& pd) {
  PastingDiagram out = pd;
  const Hypergraph& mh = M.hypergraph();
  for (int t = 0; t < static_cast<int>(pd.shell.children.size()); ++t) {
    const std::string& middle = pd.labels.at({t});
    const PastingDiagram& reg = M.pd(middle);
    Flattened x = flatten_tracked(L, reg);
    std::string name = L.intern(x.pd);
    if (pd.shell.dim == 1) {
      out.labels[{t}] = name;
      continue;
    }
    Frame slot = face_frame(pd, {t});
    ShellIso psi;
    if (slot == mh.boundary(middle)) {
      psi = identity_iso(slot.shell);
    } else {
      auto iso = labeled_iso(slot, mh.boundary(middle), mh.budget);
      if (!iso) throw std::invalid_argument("map_flatten: slot does not fit " + middle);
      psi = *iso;
    }
    auto mid_ext = external_positions(reg.shell);
    std::vector<std::pair<Position, ShellIso>> from_ext;
    for (int j = 0; j < static_cast<int>(slot.shell.children.size()); ++j) {
      const auto& [pos, iso] = x.externals.at(mid_ext.at(psi.perm[j]));
      from_ext.push_back({pos, compose(iso, psi.sub[j])});
    }
    out = reslot(out, t, name, L.hypergraph().boundary(name), slot_map(L, name, x.pd, from_ext));
  }
  return out;
}

PastingDiagram unflatten(Lifted& L, const PastingDiagram& pd, const std::vector<std::vector<int>>& groups) {
  const Shell& s = pd.shell;
  const int k = static_cast<int>(s.children.size());
  std::vector<int> group_of(k, -1), local(k, -1);
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    if (groups[g].empty()) throw std::invalid_argument("unflatten: empty group");
    for (int i = 0; i < static_cast<int>(groups[g].size()); ++i) {
      int t = groups[g][i];
      if (t < 0 || t >= k || group_of[t] >= 0) throw std::invalid_argument("unflatten: groups must partition the children");
      group_of[t] = g;
      local[t] = i;
    }
  }
  for (int t = 0; t < k; ++t)
    if (group_of[t] < 0) throw std::invalid_argument("unflatten: groups must partition the children");

  PastingDiagram outer;
  if (s.dim == 1) {
    outer.shell = points(static_cast<int>(groups.size()), true);
    for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
      PastingDiagram u{points(static_cast<int>(groups[g].size()), true), {}};
      for (int i = 0; i < static_cast<int>(groups[g].size()); ++i) u.labels[{i}] = pd.labels.at({groups[g][i]});
      outer.labels[{g}] = L.intern(u);
    }
    return outer;
  }

  std::vector<PastingDiagram> inner(groups.size());
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    inner[g].shell.dim = s.dim;
    for (int t : groups[g]) inner[g].shell.children.push_back(s.children[t]);
    for (const auto& [p, label] : pd.labels) {
      if (p.empty() || group_of[p[0]] != g) continue;
      Path q = p;
      q[0] = local[p[0]];
      inner[g].labels[q] = label;
    }
  }
  std::vector<LinkPair> crossing;
  for (const auto& lp : s.link) {
    int g = group_of[lp.a.child];
    if (g == group_of[lp.b.child]) {
      inner[g].shell.link.push_back({{local[lp.a.child], lp.a.sub}, {local[lp.b.child], lp.b.sub}, lp.iso});
    } else {
      crossing.push_back(lp);
    }
  }
  // First with slots shaped by each group's own composite, children in the
  // order of the group's externals, then moved onto the registered diagrams.
  outer.shell.dim = s.dim;
  std::vector<std::vector<Position>> ext(groups.size());
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    if (is_closed(inner[g].shell)) throw std::invalid_argument("unflatten: group " + std::to_string(g) + " is closed");
    ext[g] = external_positions(inner[g].shell);
    outer.shell.children.push_back(composite_shell(close(inner[g].shell)));
  }
  for (const auto& lp : crossing) {
    int g = group_of[lp.a.child], g2 = group_of[lp.b.child];
    auto slot = [&](int grp, Position p) {
      Position q{local[p.child], p.sub};
      return static_cast<int>(std::find(ext[grp].begin(), ext[grp].end(), q) - ext[grp].begin());
    };
    outer.shell.link.push_back({{g, slot(g, lp.a)}, {g2, slot(g2, lp.b)}, lp.iso});
  }
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    std::string name = L.intern(inner[g]);
    std::vector<std::pair<Position, ShellIso>> from_ext;
    for (auto e : ext[g]) from_ext.push_back({e, identity_iso(inner[g].shell.children[e.child].children[e.sub])});
    outer = reslot(outer, g, name, L.hypergraph().boundary(name), slot_map(L, name, inner[g], from_ext));
  }
  return outer;
}

ConnectivityGraph connectivity(const PastingDiagram& pd, const LabelSet& sigma) {
  ConnectivityGraph g;
  g.vertices = static_cast<int>(pd.shell.children.size());
  g.oriented = true;
  for (const auto& lp : pd.shell.link) {
    g.edges.emplace_back(lp.a.child, lp.b.child);
    auto it = pd.labels.find({lp.a.child, lp.a.sub});
    std::optional<int> sign;
    if (it != pd.labels.end() && sigma.contains(it->second)) sign = sigma.sign(it->second);
    if (!sign) {
      g.oriented = false;
      continue;
    }
    if (*sign > 0) g.arcs.emplace_back(lp.a.child, lp.b.child);
    else g.arcs.emplace_back(lp.b.child, lp.a.child);
  }
  if (!g.oriented) g.arcs.clear();
  return g;
}

namespace {
int component_count(const ConnectivityGraph& g) {
  std::vector<int> up(g.vertices);
  std::iota(up.begin(), up.end(), 0);
  std::function<int(int)> find = [&](int x) { return up[x] == x ? x : up[x] = find(up[x]); };
  int comps = g.vertices;
  for (auto [a, b] : g.edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      up[ra] = rb;
      --comps;
    }
  }
  return comps;
}
}  // namespace

bool is_acircuit(const PastingDiagram& pd, const LabelSet& sigma) {
  auto g = connectivity(pd, sigma);
  return static_cast<int>(g.edges.size()) == g.vertices - component_count(g);
}

bool is_connected(const PastingDiagram& pd, const LabelSet& sigma) {
  auto g = connectivity(pd, sigma);
  return component_count(g) <= 1;
}

bool is_acyclic(const PastingDiagram& pd, const LabelSet& sigma) {
  auto g = connectivity(pd, sigma);
  if (!g.oriented) throw std::invalid_argument("is_acyclic: glued labels must be signed");
  std::vector<std::vector<int>> out(g.vertices);
  std::vector<int> indeg(g.vertices, 0);
  for (auto [a, b] : g.arcs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> ready;
  for (int v = 0; v < g.vertices; ++v)
    if (!indeg[v]) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == g.vertices;
}

}  // namespace hyper

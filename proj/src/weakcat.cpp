#include "hypershell/weakcat.hpp"

#include <functional>
#include <stdexcept>

#include "hypershell/fixtures.hpp"

namespace hyper {
namespace {

std::string join(const std::vector<std::string>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + w[i];
  return out;
}

// Positive and negative point labels of a grade-1 label with boundary
// (A, B*), if it has that shape.
std::optional<std::pair<std::string, std::string>> ends(const Hypergraph& h, const std::string& f) {
  const Frame& b = h.boundary(f);
  if (b.shell.children.size() != 2) return std::nullopt;
  std::string pos, neg;
  for (const auto& [p, l] : b.labels) {
    auto s = h.labels().sign(l);
    if (!s) return std::nullopt;
    (*s > 0 ? pos : neg) = l;
  }
  if (pos.empty() || neg.empty()) return std::nullopt;
  return std::make_pair(pos, neg);
}

// Pure diagrams: single objects, then one-sign chains of 1-cells.
// Returns false when the budget stopped the enumeration.
bool for_each_pure(const WeakModel& m, int max_chain, int budget,
                   const std::function<void(const PastingDiagram&, const std::string&)>& visit, int& examined) {
  const Hypergraph& h = m.h;
  const LabelSet& sigma = h.labels();
  for (const auto& x : sigma.of_grade(0)) {
    if (examined >= budget) return false;
    ++examined;
    visit(PastingDiagram{points(1, true), {{{0}, x}}}, x);
  }
  if (h.dim() < 2) return true;
  std::vector<std::string> arrows;
  for (const auto& f : sigma.of_grade(1))
    if (ends(h, f) && sigma.sign(f)) arrows.push_back(f);
  bool complete = true;
  std::vector<std::string> w;
  std::function<void()> grow = [&] {
    if (!complete) return;
    if (!w.empty()) {
      if (examined >= budget) {
        complete = false;
        return;
      }
      ++examined;
      PastingDiagram pd = chain_pd(h, w);
      if (is_pure(pd, sigma)) visit(pd, "[" + join(w) + "]");
    }
    if (static_cast<int>(w.size()) >= max_chain) return;
    for (const auto& g : arrows) {
      if (!w.empty()) {
        if (sigma.sign(g) != sigma.sign(w.front())) continue;
        if (sigma.conj(ends(h, w.back())->second) != ends(h, g)->first) continue;
      }
      w.push_back(g);
      grow();
      w.pop_back();
    }
  };
  grow();
  return complete;
}

std::string conj_code(const Hypergraph& h, const std::string& u) {
  return labeling_code(conjugate_labeling(h.boundary(u), h.labels()), h.budget);
}

std::optional<std::string> transpose_of(const WeakModel& m, const std::string& u) {
  const std::string code = conj_code(m.h, u);
  for (const auto& v : m.universal) {
    if (!m.h.has_boundary(v) || m.h.labels().sign(v) != m.h.labels().sign(u)) continue;
    if (m.h.boundary_code(v) == code) return v;
  }
  return std::nullopt;
}

}  // namespace

bool is_pure(const Labeling& l, const LabelSet& sigma) {
  std::optional<int> sign;
  for (std::size_t t = 0; t < l.shell.children.size(); ++t) {
    const std::string& x = l.labels.at({static_cast<int>(t)});
    auto s = sigma.sign(x);
    if (!s) throw std::invalid_argument("is_pure: unsigned label " + x);
    if (sign && *sign != *s) return false;
    sign = s;
  }
  return is_connected(l, sigma) && is_acyclic(l, sigma);
}

std::vector<Composer> composers(const WeakModel& m, const PastingDiagram& pd) {
  const Hypergraph& h = m.h;
  const int k = pd.shell.dim - 1;
  if (k + 1 > h.dim()) return {};
  FormalComposite fc = formal_composite(h, pd);
  std::vector<std::pair<std::string, std::string>> frames;  // composite, frame code
  if (fc.closure.cap < 0) {
    frames.push_back({"", labeling_code(fc.labeling, h.budget)});
  } else {
    const std::string cap_code = labeling_code(fc.frame, h.budget);
    for (const auto& c : h.labels().of_grade(k)) {
      if (k == 0 || h.boundary_code(c) != cap_code) continue;
      Frame f = fc.labeling;
      f.labels[{fc.closure.cap}] = c;
      frames.push_back({c, labeling_code(f, h.budget)});
    }
  }
  std::vector<Composer> out;
  for (const auto& u : h.labels().of_grade(k + 1))
    for (const auto& [c, code] : frames)
      if (h.boundary_code(u) == code) out.push_back({u, c});
  return out;
}

AxiomReport check_H1(const WeakModel& m, int max_chain, int budget) {
  AxiomReport out;
  out.exhausted = !for_each_pure(m, max_chain, budget, [&](const PastingDiagram& pd, const std::string& name) {
    if (pd.shell.dim > m.h.dim()) return;
    bool found = false;
    for (const auto& c : composers(m, pd)) found = found || m.universal.count(c.label);
    if (!found) out.report.add("H1", "no universal composer for " + name);
  }, out.examined);
  for (const auto& [name, f] : m.h.boundaries()) {
    if (!is_pure(f, m.h.labels())) continue;
    bool found = false;
    for (const auto& u : m.universal)
      if (m.h.has_boundary(u) && m.h.boundary_code(u) == m.h.boundary_code(name)) found = true;
    if (!found) out.report.add("H1", "no universal filler for the boundary of " + name);
  }
  return out;
}

AxiomReport check_H2(const WeakModel& m) {
  AxiomReport out;
  for (const auto& u : m.universal) {
    if (!m.h.labels().contains(u)) {
      out.report.add("H2", "unknown universal label " + u);
      continue;
    }
    if (m.h.labels().grade(u) == 0) continue;
    ++out.examined;
    if (!transpose_of(m, u)) out.report.add("H2", u + " has no transpose");
  }
  return out;
}

AxiomReport check_H3(const WeakModel& m, int max_chain, int budget) {
  AxiomReport out;
  out.exhausted = !for_each_pure(m, max_chain, budget, [&](const PastingDiagram& pd, const std::string& name) {
    for (std::size_t t = 0; t < pd.shell.children.size(); ++t)
      if (!m.universal.count(pd.labels.at({static_cast<int>(t)}))) return;
    for (const auto& c : composers(m, pd))
      if (m.universal.count(c.label) && !c.composite.empty() && !m.universal.count(c.composite))
        out.report.add("H3", "composite " + c.composite + " of " + name + " by " + c.label + " is not universal");
  }, out.examined);
  return out;
}

AxiomReport check_weakness(const WeakModel& m, int max_chain, int budget) {
  AxiomReport out;
  for (const auto& [name, info] : m.h.labels().all())
    if (info.grade > m.dimension && !m.universal.count(name))
      out.report.add("dimension", name + " has grade above the dimension but is not universal");
  out.exhausted = !for_each_pure(m, max_chain, budget, [&](const PastingDiagram& pd, const std::string& name) {
    if (pd.shell.dim - 1 <= m.weakness || pd.shell.dim > m.h.dim()) return;
    std::set<std::string> found;
    for (const auto& c : composers(m, pd)) found.insert(c.composite);
    if (found.size() != 1)
      out.report.add("weakness", name + " has " + std::to_string(found.size()) + " composites");
  }, out.examined);
  return out;
}

bool is_of_type_sigma(const WeakModel& m, Report* why) {
  static const Hypergraph proto = fixtures::arrow_prototype();
  if (m.h.dim() < 1) {
    if (why) why->add("type", "model has no arrows");
    return false;
  }
  Hypergraph low = m.h.truncate(1);
  HypergraphMap phi{&low, &proto, {}};
  for (const auto& [name, info] : low.labels().all()) {
    if (!info.sign) {
      if (why) why->add("type", name + " is unsigned");
      return false;
    }
    phi.carrier[name] = info.grade == 0 ? (*info.sign > 0 ? "a" : "a*") : (*info.sign > 0 ? "b" : "b*");
  }
  Report r = validate_map(phi);
  if (why) why->merge(r, "type");
  return r.ok();
}

Frame comparison_frame(const Hypergraph& h, const std::string& c, const std::string& c2) {
  const Frame& a = h.boundary(c);
  const Frame& b = h.boundary(c2);
  auto iso = labeled_iso(a, b, h.budget);
  if (!iso) throw std::invalid_argument("comparison: " + c + " and " + c2 + " are not parallel");
  Frame f;
  f.shell.dim = a.shell.dim + 1;
  f.shell.children = {a.shell, b.shell};
  Labeling ca = conjugate_labeling(a, h.labels());
  f.labels[{0}] = h.labels().conj(c);
  f.labels[{1}] = c2;
  for (const auto& [p, l] : ca.labels) f.labels[concat({0}, p)] = l;
  for (const auto& [p, l] : b.labels) f.labels[concat({1}, p)] = l;
  for (std::size_t j = 0; j < a.shell.children.size(); ++j) {
    const int i = static_cast<int>(j);
    f.shell.link.push_back({{0, i}, {1, iso->perm[j]}, iso->sub[j]});
  }
  return f;
}

Report comparison_cell(const WeakModel& m, const PastingDiagram& pd, const std::string& c, const std::string& c2) {
  Report r;
  auto comps = composers(m, pd);
  std::optional<std::string> u;
  bool c2_found = false, transposed = false;
  for (const auto& k : comps) {
    if (k.composite == c && m.universal.count(k.label)) {
      u = k.label;
      transposed = transposed || transpose_of(m, k.label).has_value();
    }
    if (k.composite == c2) c2_found = true;
  }
  if (!u) throw std::invalid_argument("comparison: " + c + " is not universally composed");
  if (!c2_found) throw std::invalid_argument("comparison: " + c2 + " is not a composite");
  if (!transposed) r.add("transpose", "universal composer " + *u + " has no transpose");

  const Frame f = comparison_frame(m.h, c, c2);
  const std::string code = labeling_code(f, m.h.budget);
  const int grade = pd.shell.dim;
  bool any = false, universal = false;
  if (grade <= m.h.dim())
    for (const auto& x : m.h.labels().of_grade(grade))
      if (m.h.boundary_code(x) == code) {
        any = true;
        universal = universal || m.universal.count(x);
      }
  if (!any) r.add("comparison", "no cell between " + c + " and " + c2);
  else if (m.universal.count(c) && m.universal.count(c2) && !universal)
    r.add("comparison", "no universal cell between " + c + " and " + c2);
  return r;
}

DerivedCategory derive_category(const WeakModel& m) {
  DerivedCategory out;
  Report& r = out.report;
  if (!is_of_type_sigma(m, &r)) return out;
  const Hypergraph& h = m.h;
  const LabelSet& sigma = h.labels();
  CategoryData& c = out.category;
  for (const auto& o : sigma.of_grade(0))
    if (*sigma.sign(o) > 0) c.objects.push_back(o);
  for (const auto& f : sigma.of_grade(1))
    if (*sigma.sign(f) > 0) {
      auto e = ends(h, f);
      c.arrows[f] = {e->first, sigma.conj(e->second)};
    }

  auto composite_of = [&](const std::vector<std::string>& w) -> std::optional<std::string> {
    std::set<std::string> found;
    for (const auto& k : composers(m, chain_pd(h, w))) found.insert(k.composite);
    if (found.size() != 1) {
      r.add("weakness", "[" + join(w) + "] has " + std::to_string(found.size()) + " composites");
      return std::nullopt;
    }
    return sigma.conj(*found.begin());
  };
  for (const auto& [f, ff] : c.arrows)
    for (const auto& [g, gg] : c.arrows) {
      if (ff.second != gg.first) continue;
      auto gf = composite_of({f, g});
      if (!gf) continue;
      auto it = c.arrows.find(*gf);
      if (it == c.arrows.end() || it->second != std::make_pair(ff.first, gg.second)) {
        r.add("composition", g + " after " + f + " gives " + *gf);
        continue;
      }
      c.compose[{g, f}] = *gf;
    }

  for (const auto& o : c.objects) {
    std::set<std::string> q;
    for (const auto& k : composers(m, PastingDiagram{points(1, true), {{{0}, o}}}))
      if (m.universal.count(k.label) && c.arrows.count(k.label)) q.insert(k.label);
    if (q.size() != 1) {
      r.add("quasi-identity", o + " has " + std::to_string(q.size()) + " quasi-identities");
      continue;
    }
    c.identity[o] = *q.begin();
  }

  // Parallel arrows joined by a universal 2-cell must coincide.
  for (const auto& [f, ff] : c.arrows)
    for (const auto& [g, gg] : c.arrows) {
      if (f >= g || ff != gg || h.dim() < 2) continue;
      const std::string code = labeling_code(comparison_frame(h, sigma.conj(f), sigma.conj(g)), h.budget);
      for (const auto& u : sigma.of_grade(2))
        if (m.universal.count(u) && h.boundary_code(u) == code)
          r.add("parallel", "universal " + u + " between distinct " + f + " and " + g);
    }

  if (!r.ok()) return out;
  for (const auto& [f, ff] : c.arrows)
    for (const auto& [g, gg] : c.arrows) {
      if (ff.second != gg.first) continue;
      for (const auto& [k, kk] : c.arrows) {
        if (gg.second != kk.first) continue;
        const std::string left = c.compose.at({k, c.compose.at({g, f})});
        const std::string right = c.compose.at({c.compose.at({k, g}), f});
        auto whole = composite_of({f, g, k});
        if (left != right || (whole && *whole != left))
          r.add("associativity", k + ", " + g + ", " + f);
      }
    }
  for (const auto& [o, u] : c.identity)
    for (const auto& [f, ff] : c.arrows) {
      if (ff.first == o && c.compose.at({f, u}) != f) r.add("unit", f + " after " + u);
      if (ff.second == o && c.compose.at({u, f}) != f) r.add("unit", u + " after " + f);
    }
  return out;
}

namespace fixtures {

WeakModel weak_model(const CategoryData& c, int max_chain) {
  Report v = validate_category(c);
  if (!v.ok()) throw std::invalid_argument("weak_model: " + v.str());
  WeakModel m{Hypergraph(2, LabelSet{}), {}, 1, 0};
  Hypergraph& h = m.h;
  for (const auto& o : c.objects) h.labels().add_pair(o, 0, +1);
  for (const auto& [f, e] : c.arrows) {
    h.labels().add_pair(f, 1, +1);
    h.set_boundary(f, point_frame({e.first, star_name(e.second)}));
  }
  // Composites sit on the closure with the conjugate label, so both
  // orientations of an identity are universal.
  for (const auto& [o, id] : c.identity) {
    m.universal.insert(id);
    m.universal.insert(star_name(id));
  }

  std::vector<std::string> w;
  std::function<void()> grow = [&] {
    if (!w.empty()) {
      PastingDiagram pd = chain_pd(h, w);
      FormalComposite fc = formal_composite(h, pd);
      std::string acc = w[0];
      for (std::size_t i = 1; i < w.size(); ++i) acc = c.compose.at({w[i], acc});
      Frame f = fc.labeling;
      f.labels[{fc.closure.cap}] = star_name(acc);
      const std::string name = "[" + join(w) + "]";
      h.labels().add_pair("c" + name, 2, +1);
      h.set_boundary("c" + name, f);
      h.labels().add_pair("t" + name, 2, +1);
      h.set_boundary("t" + name, conjugate_labeling(f, h.labels()));
      for (const auto& x : {"c" + name, "t" + name}) {
        m.universal.insert(x);
        m.universal.insert(star_name(x));
      }
    }
    if (static_cast<int>(w.size()) >= max_chain) return;
    for (const auto& [g, gg] : c.arrows) {
      if (!w.empty() && c.arrows.at(w.back()).second != gg.first) continue;
      w.push_back(g);
      grow();
      w.pop_back();
    }
  };
  grow();
  return m;
}

}  // namespace fixtures

}  // namespace hyper

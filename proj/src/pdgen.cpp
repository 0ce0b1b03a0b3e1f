#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hypershell/fixtures.hpp"
#include "hypershell/generators.hpp"
#include "hypershell/monad.hpp"

namespace hyper {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v.at(std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng));
}

std::optional<int> maybe_sign(bool on, int s) { return on ? std::optional<int>(s) : std::nullopt; }

}  // namespace

Hypergraph random_hypergraph(Rng& rng, int dim, HypergraphShape shape) {
  LabelSet ls;
  std::vector<std::string> objects;
  const int object_pairs = dim == 2 ? 1 : shape.object_pairs;
  for (int i = 0; i < object_pairs; ++i) {
    std::string x = dim == 2 ? "X" : "X" + std::to_string(i);
    ls.add_pair(x, 0, maybe_sign(shape.signed_labels, 1));
    objects.push_back(x);
    objects.push_back(star_name(x));
  }
  Hypergraph h(dim, ls);
  if (dim == 0) return h;
  std::vector<std::string> arrows;
  for (int i = 0; i < shape.arrow_pairs; ++i) {
    std::string a = "a" + std::to_string(i);
    h.labels().add_pair(a, 1, maybe_sign(shape.signed_labels, 1));
    std::vector<std::string> ends;
    if (dim == 2) {
      ends = {"X", "X*"};
    } else {
      int arity = uniform(rng, 1, shape.max_arity);
      for (int j = 0; j < arity; ++j) ends.push_back(pick(rng, objects));
    }
    h.set_boundary(a, fixtures::point_frame(ends));
    arrows.push_back(a);
    arrows.push_back(star_name(a));
  }
  if (dim == 1) return h;
  for (int i = 0; i < shape.cell_pairs; ++i) {
    std::string c = "c" + std::to_string(i);
    h.labels().add_pair(c, 2, maybe_sign(shape.signed_labels, 1));
    int sides = uniform(rng, 1, shape.max_sides);
    Frame f;
    f.shell = fixtures::polygon(sides);
    for (int j = 0; j < sides; ++j) {
      f.labels[{j}] = pick(rng, arrows);
      f.labels[{j, 0}] = "X";
      f.labels[{j, 1}] = "X*";
    }
    h.set_boundary(c, f);
  }
  return h;
}

std::optional<ShellIso> conj_iso(const Labeling& a, const Labeling& b, const LabelSet& sigma, std::size_t budget) {
  return labeled_iso(conjugate_labeling(a, sigma), b, budget);
}

PastingDiagram random_pd(Rng& rng, const Hypergraph& h, PdShape shape) {
  const int n = h.dim();
  const LabelSet& sigma = h.labels();
  auto tops = shape.tops.empty() ? sigma.of_grade(n) : shape.tops;
  if (tops.empty()) throw std::invalid_argument("random_pd: no labels of top grade");
  const int cells = uniform(rng, 1, std::max(1, shape.max_cells));
  if (n == 0) {
    // Without gluings only a single point is connected.
    const int count = shape.mode == PdMode::any ? cells : 1;
    PastingDiagram pd{points(count, true), {}};
    for (int i = 0; i < count; ++i) pd.labels[{i}] = pick(rng, tops);
    return pd;
  }

  // Which top labels carry a given label on some boundary child.
  std::map<std::string, std::vector<std::pair<std::string, int>>> hosts;
  for (const auto& c : tops) {
    const Frame& f = h.boundary(c);
    for (int j = 0; j < static_cast<int>(f.shell.children.size()); ++j) hosts[f.labels.at({j})].push_back({c, j});
  }

  PastingDiagram pd;
  pd.shell.dim = n + 1;
  auto add_cell = [&](const std::string& c) {
    Cell cell = label_cell(h, c);
    int at = static_cast<int>(pd.shell.children.size());
    pd.shell.children.push_back(cell.shell);
    for (const auto& [p, label] : cell.labels) pd.labels[concat({at}, p)] = label;
    return at;
  };
  // A first cell with at least two boundary children keeps room to grow.
  std::vector<std::string> wide;
  for (const auto& c : tops)
    if (h.boundary(c).shell.children.size() >= 2) wide.push_back(c);
  add_cell(pick(rng, wide.empty() ? tops : wide));

  for (int attempt = 0; attempt < 8 * cells && static_cast<int>(pd.shell.children.size()) < cells; ++attempt) {
    auto ext = external_positions(pd.shell);
    Position p = pick(rng, ext);
    const std::string& x = pd.labels.at({p.child, p.sub});
    auto it = hosts.find(sigma.conj(x));
    if (it == hosts.end()) continue;
    auto [c, j] = pick(rng, it->second);
    const Frame& f = h.boundary(c);
    if (ext.size() + f.shell.children.size() < 3) continue;  // would close the diagram
    auto iso = conj_iso(restrict_to(pd, {p.child, p.sub}), restrict_to(f, {j}), sigma, h.budget);
    if (!iso) continue;
    int at = add_cell(c);
    pd.shell.link.push_back({p, {at, j}, *iso});
  }

  if (shape.mode != PdMode::acircuit) {
    for (int attempt = 0; attempt < shape.extra_links; ++attempt) {
      auto ext = external_positions(pd.shell);
      if (ext.size() < 3) break;
      Position p = pick(rng, ext), q = pick(rng, ext);
      if (p == q) continue;
      auto iso = conj_iso(restrict_to(pd, {p.child, p.sub}), restrict_to(pd, {q.child, q.sub}), sigma, h.budget);
      if (!iso) continue;
      pd.shell.link.push_back({p, q, *iso});
      if (shape.mode == PdMode::acyclic && !is_acyclic(pd, sigma)) pd.shell.link.pop_back();
    }
  }
  return transport(pd, random_iso(rng, pd.shell));
}

std::vector<std::vector<int>> random_groups(Rng& rng, const PastingDiagram& pd, bool connected) {
  const int k = static_cast<int>(pd.shell.children.size());
  const int want = uniform(rng, 1, k);
  std::vector<int> group(k, -1);
  if (!connected) {
    std::vector<std::vector<int>> out(want);
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < k; ++i) out[i < want ? i : uniform(rng, 0, want - 1)].push_back(order[i]);
    return out;
  }
  std::vector<std::vector<int>> adj(k);
  for (const auto& lp : pd.shell.link) {
    adj[lp.a.child].push_back(lp.b.child);
    adj[lp.b.child].push_back(lp.a.child);
  }
  std::vector<int> seeds(k);
  std::iota(seeds.begin(), seeds.end(), 0);
  std::shuffle(seeds.begin(), seeds.end(), rng);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < want; ++i) {
    group[seeds[i]] = i;
    out.push_back({seeds[i]});
  }
  // Grow the groups along gluings until every component is taken.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> order(want);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int g : order) {
      std::vector<int> frontier;
      for (int v : out[g])
        for (int w : adj[v])
          if (group[w] < 0) frontier.push_back(w);
      if (frontier.empty()) continue;
      int w = pick(rng, frontier);
      group[w] = g;
      out[g].push_back(w);
      grew = true;
    }
  }
  for (int v = 0; v < k; ++v)
    if (group[v] < 0) throw std::invalid_argument("random_groups: diagram is not connected");
  return out;
}

}  // namespace hyper

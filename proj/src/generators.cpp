#include "hypershell/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hyper {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ShellIso random_iso_of(Rng& rng, const Shell& s) {
  ShellIso f;
  f.perm.resize(s.children.size());
  std::iota(f.perm.begin(), f.perm.end(), 0);
  std::shuffle(f.perm.begin(), f.perm.end(), rng);
  for (const auto& c : s.children) f.sub.push_back(random_iso_of(rng, c));
  return f;
}

// Some isomorphism a -> b chosen among the first few found.
ShellIso pick_iso(Rng& rng, const Shell& a, const Shell& b) {
  std::vector<ShellIso> found;
  for_each_iso(a, b, [&](const ShellIso& f) {
    found.push_back(f);
    return found.size() >= 6;
  });
  return found.at(std::uniform_int_distribution<std::size_t>(0, found.size() - 1)(rng));
}

std::vector<LinkPair> random_pairing(Rng& rng, const Shell& s) {
  std::map<std::string, std::vector<Position>> groups;
  for (auto p : depth2_positions(s)) {
    const Shell& c = s.children[p.child].children[p.sub];
    groups[shell_canonical_code(c, 4096)].push_back(p);
  }
  std::vector<LinkPair> link;
  for (auto& [code, ps] : groups) {
    std::shuffle(ps.begin(), ps.end(), rng);
    for (std::size_t i = 0; i + 1 < ps.size(); i += 2) {
      if (uniform(rng, 0, 4) == 0) continue;
      const Shell& a = s.children[ps[i].child].children[ps[i].sub];
      const Shell& b = s.children[ps[i + 1].child].children[ps[i + 1].sub];
      link.push_back({ps[i], ps[i + 1], pick_iso(rng, a, b)});
    }
  }
  return link;
}

}  // namespace

Tree random_tree(Rng& rng, int nodes) {
  std::vector<int> parent{-1};
  for (int v = 1; v < nodes; ++v) parent.push_back(uniform(rng, 0, v - 1));
  std::vector<int> sigma(nodes);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<int> out(nodes);
  for (int v = 0; v < nodes; ++v) out[sigma[v]] = parent[v] < 0 ? -1 : sigma[parent[v]];
  return Tree(std::move(out));
}

ShellIso random_iso(Rng& rng, const Shell& s) { return random_iso_of(rng, s); }

Shell random_shell(Rng& rng, int dim, bool closed, ShellShape shape) {
  if (dim == 0) return point();
  if (dim == 1) return points(uniform(rng, 1, shape.max_points), !closed);
  Shell s;
  s.dim = dim;
  int k = uniform(rng, 1, shape.max_children);
  for (int i = 0; i < k; ++i) s.children.push_back(random_shell(rng, dim - 1, true, shape));
  s.link = random_pairing(rng, s);
  if (closed) {
    auto leftover = external_positions(s);
    if (!leftover.empty()) {
      // Double the family: a renamed copy with the same gluing, and every
      // leftover position glued to its own copy.
      std::vector<ShellIso> moves;
      for (const auto& c : s.children) moves.push_back(random_iso_of(rng, c));
      const std::size_t n = s.children.size();
      for (std::size_t i = 0; i < n; ++i) s.children.push_back(transport(s.children[i], moves[i]));
      auto original = s.link;
      auto shift = [&](Position p) { return Position{p.child + static_cast<int>(n), moves[p.child].perm[p.sub]}; };
      for (const auto& lp : original) {
        const ShellIso& ma = moves[lp.a.child].sub[lp.a.sub];
        const ShellIso& mb = moves[lp.b.child].sub[lp.b.sub];
        s.link.push_back({shift(lp.a), shift(lp.b), compose(mb, compose(lp.iso, inverse(ma)))});
      }
      for (auto p : leftover) s.link.push_back({p, shift(p), moves[p.child].sub[p.sub]});
    }
  } else if (external_positions(s).empty() && !s.link.empty()) {
    s.link.pop_back();
  }
  return transport(s, random_iso_of(rng, s));
}

Labeling random_labeling(Rng& rng, const Shell& s, LabelSet& sigma, bool label_root) {
  auto paths = node_paths(s);
  std::map<Path, int> index;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) index[paths[i]] = i;
  // Union-find with parity: parity 1 means "conjugate of the class root".
  std::vector<int> up(paths.size()), parity(paths.size(), 0);
  std::vector<bool> self(paths.size(), false);
  std::iota(up.begin(), up.end(), 0);
  std::function<int(int)> find = [&](int x) {
    if (up[x] == x) return x;
    int r = find(up[x]);
    parity[x] ^= parity[up[x]];
    up[x] = r;
    return r;
  };
  for (const auto& lp : linked_pairs(s)) {
    int a = index.at(lp.x), b = index.at(lp.y);
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      if (parity[a] == parity[b]) self[ra] = true;
      continue;
    }
    up[ra] = rb;
    parity[ra] = parity[a] ^ parity[b] ^ 1;
    if (self[ra]) self[rb] = true;
  }
  const int tag = uniform(rng, 0, 1 << 20);
  Labeling l{s, {}};
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    if (paths[i].empty() && !label_root) continue;
    int r = find(i);
    int grade = component_dim(s, paths[i]);
    std::string base = "t" + std::to_string(tag) + "_" + std::to_string(r);
    if (self[r]) {
      sigma.add(base, grade, base);
      l.labels[paths[i]] = base;
    } else {
      sigma.add_pair(base, grade);
      l.labels[paths[i]] = parity[i] ? star_name(base) : base;
    }
  }
  return l;
}

}  // namespace hyper

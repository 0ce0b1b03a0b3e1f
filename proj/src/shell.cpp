#include "hypershell/shell.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hyper {

Path concat(const Path& a, const Path& b) {
  Path out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string path_str(const Path& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

Shell point() { return Shell{}; }

Shell points(int count, bool open) {
  Shell s;
  s.dim = 1;
  s.children.assign(count, point());
  s.open_points = open;
  return s;
}

bool is_closed(const Shell& s) {
  if (s.dim == 0) return true;
  if (s.dim == 1) return !s.open_points;
  return external_positions(s).empty();
}

int height(const Shell& s) {
  int h = 0;
  for (const auto& c : s.children) h = std::max(h, 1 + height(c));
  return h;
}

std::size_t node_count(const Shell& s) {
  std::size_t n = 1;
  for (const auto& c : s.children) n += node_count(c);
  return n;
}

const Shell& component_shell(const Shell& s, const Path& x) {
  const Shell* cur = &s;
  for (int i : x) {
    if (i < 0 || i >= static_cast<int>(cur->children.size()))
      throw std::out_of_range("no component at " + path_str(x));
    cur = &cur->children[i];
  }
  return *cur;
}

bool has_component(const Shell& s, const Path& x) {
  const Shell* cur = &s;
  for (int i : x) {
    if (i < 0 || i >= static_cast<int>(cur->children.size())) return false;
    cur = &cur->children[i];
  }
  return true;
}

namespace {
void collect_paths(const Shell& s, Path& prefix, std::vector<Path>& out) {
  out.push_back(prefix);
  for (int i = 0; i < static_cast<int>(s.children.size()); ++i) {
    prefix.push_back(i);
    collect_paths(s.children[i], prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Path> node_paths(const Shell& s) {
  std::vector<Path> out;
  Path prefix;
  collect_paths(s, prefix, out);
  return out;
}

Tree underlying_tree(const Shell& s, std::vector<Path>* paths) {
  auto ps = node_paths(s);
  std::map<Path, int> index;
  for (int i = 0; i < static_cast<int>(ps.size()); ++i) index[ps[i]] = i;
  std::vector<int> parent(ps.size(), -1);
  for (std::size_t i = 1; i < ps.size(); ++i) {
    Path up(ps[i].begin(), ps[i].end() - 1);
    parent[i] = index.at(up);
  }
  if (paths) *paths = ps;
  return Tree(std::move(parent));
}

std::vector<Position> depth2_positions(const Shell& s) {
  std::vector<Position> out;
  for (int i = 0; i < static_cast<int>(s.children.size()); ++i)
    for (int j = 0; j < static_cast<int>(s.children[i].children.size()); ++j) out.push_back({i, j});
  return out;
}

std::map<Position, Partner> partner_map(const Shell& s) {
  std::map<Position, Partner> out;
  for (const auto& lp : s.link) {
    out[lp.a] = Partner{lp.b, lp.iso};
    out[lp.b] = Partner{lp.a, inverse(lp.iso)};
  }
  return out;
}

std::optional<Partner> partner(const Shell& s, Position p) {
  for (const auto& lp : s.link) {
    if (lp.a == p) return Partner{lp.b, lp.iso};
    if (lp.b == p) return Partner{lp.a, inverse(lp.iso)};
  }
  return std::nullopt;
}

std::vector<Position> external_positions(const Shell& s) {
  std::set<Position> matched;
  for (const auto& lp : s.link) {
    matched.insert(lp.a);
    matched.insert(lp.b);
  }
  std::vector<Position> out;
  for (const auto& p : depth2_positions(s))
    if (!matched.count(p)) out.push_back(p);
  return out;
}

ShellIso identity_iso(const Shell& s) {
  ShellIso f;
  f.perm.resize(s.children.size());
  std::iota(f.perm.begin(), f.perm.end(), 0);
  for (const auto& c : s.children) f.sub.push_back(identity_iso(c));
  return f;
}

ShellIso compose(const ShellIso& g, const ShellIso& f) {
  ShellIso h;
  h.perm.resize(f.perm.size());
  h.sub.resize(f.perm.size());
  for (std::size_t i = 0; i < f.perm.size(); ++i) {
    int mid = f.perm[i];
    h.perm[i] = g.perm.at(mid);
    h.sub[i] = compose(g.sub.at(mid), f.sub[i]);
  }
  return h;
}

ShellIso inverse(const ShellIso& f) {
  ShellIso h;
  h.perm.resize(f.perm.size());
  h.sub.resize(f.perm.size());
  for (std::size_t i = 0; i < f.perm.size(); ++i) {
    h.perm[f.perm[i]] = static_cast<int>(i);
    h.sub[f.perm[i]] = inverse(f.sub[i]);
  }
  return h;
}

Path apply(const ShellIso& f, const Path& x) {
  Path out;
  out.reserve(x.size());
  const ShellIso* cur = &f;
  for (int i : x) {
    out.push_back(cur->perm.at(i));
    cur = &cur->sub.at(i);
  }
  return out;
}

Shell transport(const Shell& s, const ShellIso& f) {
  if (f.perm.size() != s.children.size() || f.sub.size() != s.children.size())
    throw std::invalid_argument("transport: iso arity mismatch");
  Shell t;
  t.dim = s.dim;
  t.open_points = s.open_points;
  t.children.resize(s.children.size());
  for (std::size_t i = 0; i < s.children.size(); ++i) t.children.at(f.perm[i]) = transport(s.children[i], f.sub[i]);
  for (const auto& lp : s.link) {
    const ShellIso& fa = f.sub[lp.a.child].sub.at(lp.a.sub);
    const ShellIso& fb = f.sub[lp.b.child].sub.at(lp.b.sub);
    t.link.push_back({{f.perm[lp.a.child], f.sub[lp.a.child].perm.at(lp.a.sub)},
                      {f.perm[lp.b.child], f.sub[lp.b.child].perm.at(lp.b.sub)},
                      compose(fb, compose(lp.iso, inverse(fa)))});
  }
  return t;
}

bool is_valid_iso(const ShellIso& f, const Shell& a, const Shell& b, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (a.dim != b.dim) return fail("dimension mismatch");
  if (a.open_points != b.open_points) return fail("open/closed mismatch");
  const std::size_t k = a.children.size();
  if (b.children.size() != k) return fail("child count mismatch");
  if (f.perm.size() != k || f.sub.size() != k) return fail("iso arity mismatch");
  std::vector<bool> hit(k, false);
  for (int j : f.perm) {
    if (j < 0 || j >= static_cast<int>(k) || hit[j]) return fail("child map is not a bijection");
    hit[j] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::string sub_why;
    if (!is_valid_iso(f.sub[i], a.children[i], b.children[f.perm[i]], &sub_why))
      return fail("child " + std::to_string(i) + ": " + sub_why);
  }
  if (a.link.size() != b.link.size()) return fail("link size mismatch");
  auto bp = partner_map(b);
  for (const auto& lp : a.link) {
    Position pa{f.perm[lp.a.child], f.sub[lp.a.child].perm.at(lp.a.sub)};
    Position pb{f.perm[lp.b.child], f.sub[lp.b.child].perm.at(lp.b.sub)};
    auto it = bp.find(pa);
    if (it == bp.end() || it->second.at != pb) return fail("link pair not preserved");
    const ShellIso& fa = f.sub[lp.a.child].sub.at(lp.a.sub);
    const ShellIso& fb = f.sub[lp.b.child].sub.at(lp.b.sub);
    if (compose(it->second.iso, fa) != compose(fb, lp.iso)) return fail("link witness square does not commute");
  }
  return true;
}

namespace {

void validate_into(const Shell& s, const std::string& where, Report& r) {
  auto at = [&](const std::string& msg) { return where.empty() ? msg : where + ": " + msg; };
  if (s.dim < 0) {
    r.add("Shell-1", at("negative dimension"));
    return;
  }
  if (s.dim != 1 && s.open_points) r.add("Shell-1", at("open point marker outside dimension 1"));
  if (s.dim == 0) {
    if (!s.children.empty()) r.add("Shell-1", at("0-shell has children"));
    if (!s.link.empty()) r.add("Shell-3", at("0-shell has a link"));
    return;
  }
  if (s.dim == 1) {
    for (std::size_t i = 0; i < s.children.size(); ++i)
      if (s.children[i].dim != 0 || !s.children[i].children.empty())
        r.add("Shell-1", at("child " + std::to_string(i) + " of a 1-shell is not a point"));
    if (!s.link.empty()) r.add("Shell-3", at("1-shell has a link"));
    return;
  }
  if (s.children.empty()) r.add("Shell-1", at("empty depth-1 layer in a " + std::to_string(s.dim) + "-shell"));
  bool children_ok = true;
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    const Shell& c = s.children[i];
    std::string cw = where + "/" + std::to_string(i);
    if (c.dim != s.dim - 1) {
      r.add("Shell-1", at("child " + std::to_string(i) + " has dimension " + std::to_string(c.dim)));
      children_ok = false;
      continue;
    }
    Report cr;
    validate_into(c, cw, cr);
    if (!cr.ok()) children_ok = false;
    r.merge(cr);
    if (cr.ok() && !is_closed(c)) {
      r.add("Shell-2", at("child " + std::to_string(i) + " is not closed"));
      children_ok = false;
    }
  }
  if (!children_ok) return;
  if (height(s) != s.dim) r.add("Shell-1", at("underlying tree height " + std::to_string(height(s)) +
                                              " differs from dimension " + std::to_string(s.dim)));
  std::set<Position> used;
  auto valid_pos = [&](Position p) {
    return p.child >= 0 && p.child < static_cast<int>(s.children.size()) && p.sub >= 0 &&
           p.sub < static_cast<int>(s.children[p.child].children.size());
  };
  for (std::size_t k = 0; k < s.link.size(); ++k) {
    const auto& lp = s.link[k];
    std::string tag = "link pair " + std::to_string(k);
    if (!valid_pos(lp.a) || !valid_pos(lp.b)) {
      r.add("Shell-3", at(tag + " addresses a missing depth-2 component"));
      continue;
    }
    if (lp.a == lp.b) r.add("Shell-3", at(tag + " matches a component with itself"));
    for (auto p : {lp.a, lp.b}) {
      if (!used.insert(p).second)
        r.add("Shell-3", at(tag + " matches component " + path_str({p.child, p.sub}) + " twice"));
    }
    std::string why;
    const Shell& sa = s.children[lp.a.child].children[lp.a.sub];
    const Shell& sb = s.children[lp.b.child].children[lp.b.sub];
    if (!is_valid_iso(lp.iso, sa, sb, &why)) r.add("Shell-3", at(tag + " witness invalid: " + why));
  }
}

void collect_linked(const Shell& s, Path& prefix, std::vector<LinkedPair>& out) {
  const int depth = static_cast<int>(prefix.size());
  for (const auto& lp : s.link) {
    Path pa = concat(prefix, {lp.a.child, lp.a.sub});
    Path pb = concat(prefix, {lp.b.child, lp.b.sub});
    const Shell& sa = s.children[lp.a.child].children[lp.a.sub];
    for (const auto& r : node_paths(sa)) out.push_back({concat(pa, r), concat(pb, apply(lp.iso, r)), depth});
  }
  for (int i = 0; i < static_cast<int>(s.children.size()); ++i) {
    prefix.push_back(i);
    collect_linked(s.children[i], prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Report validate_shell(const Shell& s) {
  Report r;
  validate_into(s, "", r);
  return r;
}

std::vector<LinkedPair> linked_pairs(const Shell& s) {
  std::vector<LinkedPair> out;
  Path prefix;
  collect_linked(s, prefix, out);
  return out;
}

bool linked(const Shell& s, const Path& x, const Path& y) {
  if (!has_component(s, x) || !has_component(s, y)) throw std::invalid_argument("linked: bad path");
  if (x.size() != y.size()) throw std::invalid_argument("linked: depth mismatch");
  if (x.size() < 2) throw std::invalid_argument("linked: depth below 2");
  for (const auto& lp : linked_pairs(s))
    if ((lp.x == x && lp.y == y) || (lp.x == y && lp.y == x)) return true;
  return false;
}

namespace {

struct Searcher {
  const Shell& a;
  const Shell& b;
  const std::function<bool(const ShellIso&)>& visit;
  std::map<Position, Partner> pa, pb;
  std::map<std::pair<int, int>, std::vector<ShellIso>> memo;
  std::vector<int> target;
  std::vector<const ShellIso*> chosen;
  std::vector<bool> used;

  const std::vector<ShellIso>& child_isos(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<ShellIso> all;
    for_each_iso(a.children[i], b.children[j], [&](const ShellIso& f) {
      all.push_back(f);
      return false;
    });
    return memo.emplace(key, std::move(all)).first->second;
  }

  bool consistent(int i) {
    const ShellIso& g = *chosen[i];
    const int j = target[i];
    for (int s = 0; s < static_cast<int>(a.children[i].children.size()); ++s) {
      Position p{i, s};
      Position pimg{j, g.perm[s]};
      auto ita = pa.find(p);
      auto itb = pb.find(pimg);
      if ((ita == pa.end()) != (itb == pb.end())) return false;
      if (ita == pa.end()) continue;
      const Position q = ita->second.at;
      if (q.child != i && target[q.child] < 0) continue;
      const ShellIso& gq = *chosen[q.child];
      Position qimg{target[q.child], gq.perm[q.sub]};
      if (itb->second.at != qimg) return false;
      if (compose(itb->second.iso, g.sub[s]) != compose(gq.sub[q.sub], ita->second.iso)) return false;
    }
    return true;
  }

  bool assign(int i) {
    const int k = static_cast<int>(a.children.size());
    if (i == k) {
      ShellIso f;
      f.perm = target;
      for (int c = 0; c < k; ++c) f.sub.push_back(*chosen[c]);
      return visit(f);
    }
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      if (node_count(a.children[i]) != node_count(b.children[j])) continue;
      for (const auto& g : child_isos(i, j)) {
        target[i] = j;
        chosen[i] = &g;
        used[j] = true;
        bool ok = consistent(i);
        if (ok && assign(i + 1)) return true;
        used[j] = false;
        target[i] = -1;
        chosen[i] = nullptr;
      }
    }
    return false;
  }
};

}  // namespace

bool for_each_iso(const Shell& a, const Shell& b, const std::function<bool(const ShellIso&)>& visit) {
  if (a.dim != b.dim || a.children.size() != b.children.size() || a.open_points != b.open_points ||
      a.link.size() != b.link.size())
    return false;
  const int k = static_cast<int>(a.children.size());
  if (a.dim == 0) return visit(ShellIso{});
  if (a.dim == 1) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (visit(ShellIso{perm, std::vector<ShellIso>(k)})) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }
  Searcher s{a, b, visit, partner_map(a), partner_map(b), {}, std::vector<int>(k, -1),
             std::vector<const ShellIso*>(k, nullptr), std::vector<bool>(k, false)};
  return s.assign(0);
}

std::optional<ShellIso> shell_iso_check(const Shell& a, const Shell& b) {
  std::optional<ShellIso> found;
  for_each_iso(a, b, [&](const ShellIso& f) {
    found = f;
    return true;
  });
  return found;
}

canon::ColoredTree flatten_shell(const Shell& s, const std::vector<Path>& paths,
                                 const std::function<std::string(const Path&)>& extra) {
  std::map<Path, int> index;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) index[paths[i]] = i;
  canon::ColoredTree g;
  g.parent.assign(paths.size(), -1);
  g.color.resize(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    if (!p.empty()) g.parent[i] = index.at(Path(p.begin(), p.end() - 1));
    std::string c = std::to_string(s.dim - static_cast<int>(p.size()));
    if (p.empty() && s.open_points) c += "o";
    if (extra) c += "|" + extra(p);
    g.color[i] = std::move(c);
  }
  for (const auto& lp : linked_pairs(s)) g.edges.emplace_back(index.at(lp.x), index.at(lp.y), lp.owner);
  return g;
}

std::string shell_canonical_code(const Shell& s, std::size_t budget) {
  if (s.dim == 0 && s.children.empty()) return std::string(1, '\0');
  auto paths = node_paths(s);
  return canon::canonicalize(flatten_shell(s, paths, {}), budget).code;
}

namespace {
ShellIso build_iso(const Shell& a, const Path& at, const std::map<Path, Path>& map) {
  ShellIso f;
  Path cur = at;
  for (int i = 0; i < static_cast<int>(a.children.size()); ++i) {
    cur.push_back(i);
    f.perm.push_back(map.at(cur).back());
    f.sub.push_back(build_iso(a.children[i], cur, map));
    cur.pop_back();
  }
  return f;
}
}  // namespace

ShellIso iso_from_path_map(const Shell& a, const std::map<Path, Path>& map) { return build_iso(a, {}, map); }

std::optional<ShellIso> canonical_iso(const Shell& a, const std::function<std::string(const Path&)>& extra_a,
                                      const Shell& b, const std::function<std::string(const Path&)>& extra_b,
                                      std::size_t budget) {
  if (a.dim != b.dim) return std::nullopt;
  auto pa = node_paths(a);
  auto pb = node_paths(b);
  if (pa.size() != pb.size()) return std::nullopt;
  auto ca = canon::canonicalize(flatten_shell(a, pa, extra_a), budget);
  auto cb = canon::canonicalize(flatten_shell(b, pb, extra_b), budget);
  if (ca.code != cb.code) return std::nullopt;
  std::vector<int> inv_b(pb.size());
  for (std::size_t v = 0; v < pb.size(); ++v) inv_b[cb.position[v]] = static_cast<int>(v);
  std::map<Path, Path> map;
  for (std::size_t v = 0; v < pa.size(); ++v) map[pa[v]] = pb[inv_b[ca.position[v]]];
  return iso_from_path_map(a, map);
}

}  // namespace hyper

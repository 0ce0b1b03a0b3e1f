#include "hypershell/closure.hpp"

#include <set>
#include <stdexcept>

namespace hyper {
namespace {

struct Step {
  Path to;
  ShellIso iso;
};

// Solid step: the partner of a depth-3 component inside its own child.
Step solid_step(const Shell& s, const Path& x) {
  const Shell& child = s.children[x[0]];
  auto p = partner(child, {x[1], x[2]});
  if (!p) throw std::logic_error("closure: child shell is not closed");
  return {{x[0], p->at.child, p->at.sub}, p->iso};
}

// Dotted step: transport through the top-link witness of the parent, if any.
std::optional<Step> dotted_step(const std::map<Position, Partner>& top, const Path& x) {
  auto it = top.find({x[0], x[1]});
  if (it == top.end()) return std::nullopt;
  const ShellIso& w = it->second.iso;
  return Step{{it->second.at.child, it->second.at.sub, w.perm.at(x[2])}, w.sub.at(x[2])};
}

std::vector<Path> depth3_nodes(const Shell& s) {
  std::vector<Path> out;
  for (int i = 0; i < static_cast<int>(s.children.size()); ++i)
    for (int j = 0; j < static_cast<int>(s.children[i].children.size()); ++j)
      for (int k = 0; k < static_cast<int>(s.children[i].children[j].children.size()); ++k) out.push_back({i, j, k});
  return out;
}

void add_star(const Shell& sub, Path from, Path to, std::map<Path, Path>& star) {
  star[from] = to;
  for (int i = 0; i < static_cast<int>(sub.children.size()); ++i) {
    from.push_back(i);
    to.push_back(i);
    add_star(sub.children[i], from, to, star);
    from.pop_back();
    to.pop_back();
  }
}

}  // namespace

ChainGraph build_chain_graph(const Shell& s) {
  ChainGraph g;
  if (s.dim < 3) return g;
  g.nodes = depth3_nodes(s);
  auto top = partner_map(s);
  for (const auto& x : g.nodes) {
    Path y = solid_step(s, x).to;
    if (x < y) g.solid.emplace_back(x, y);
    if (auto d = dotted_step(top, x); d && x < d->to) g.dotted.emplace_back(x, d->to);
  }
  return g;
}

ClosureResult close(const Shell& s) {
  if (auto rep = validate_shell(s); !rep.ok()) throw std::invalid_argument("close: invalid shell: " + rep.str());
  if (is_closed(s)) throw std::invalid_argument("close: shell is already closed");
  ClosureResult r;
  if (s.dim == 1) {
    const int k = static_cast<int>(s.children.size());
    r.closed = points(2 * k);
    for (int i = 0; i < k; ++i) r.star[{i}] = {k + i};
    return r;
  }

  const auto ext = external_positions(s);
  std::map<Position, int> copy_index;
  Shell cap;
  cap.dim = s.dim - 1;
  for (int idx = 0; idx < static_cast<int>(ext.size()); ++idx) {
    copy_index[ext[idx]] = idx;
    cap.children.push_back(s.children[ext[idx].child].children[ext[idx].sub]);
  }

  if (s.dim >= 3) {
    auto top = partner_map(s);
    std::set<Path> done;
    for (auto e : ext) {
      const int fan = static_cast<int>(s.children[e.child].children[e.sub].children.size());
      for (int k = 0; k < fan; ++k) {
        Path start{e.child, e.sub, k};
        if (done.count(start)) continue;
        Path cur = start;
        ShellIso acc = identity_iso(component_shell(s, start));
        while (true) {
          Step st = solid_step(s, cur);
          acc = compose(st.iso, acc);
          cur = st.to;
          auto d = dotted_step(top, cur);
          if (!d) break;
          acc = compose(d->iso, acc);
          cur = d->to;
        }
        done.insert(start);
        done.insert(cur);
        r.mu.push_back({start, cur, acc});
        Position a{copy_index.at({start[0], start[1]}), start[2]};
        Position b{copy_index.at({cur[0], cur[1]}), cur[2]};
        cap.link.push_back({a, b, acc});
      }
    }
  }

  r.closed = s;
  r.cap = static_cast<int>(s.children.size());
  r.closed.children.push_back(std::move(cap));
  for (int idx = 0; idx < static_cast<int>(ext.size()); ++idx) {
    const Shell& sub = s.children[ext[idx].child].children[ext[idx].sub];
    r.closed.link.push_back({ext[idx], {r.cap, idx}, identity_iso(sub)});
    add_star(sub, {ext[idx].child, ext[idx].sub}, {r.cap, idx}, r.star);
  }
  return r;
}

const Shell& composite_shell(const ClosureResult& r) {
  if (r.cap < 0) throw std::invalid_argument("composite_shell: no composite in dimension 1");
  return r.closed.children.at(r.cap);
}

}  // namespace hyper

#include "hypershell/lafont.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "hypershell/fixtures.hpp"
#include "hypershell/monad.hpp"

namespace hyper::lafont {
namespace {

// A port of a rule: left-hand agent 0 (constructor) or 1 (operator), or a
// right-hand agent.
struct Ref {
  bool lhs;
  int agent;
  int port;
};
Ref L(int a, int p) { return {true, a, p}; }
Ref R(int a, int p) { return {false, a, p}; }

struct Template {
  std::string constructor, op;
  std::vector<std::string> rhs;
  std::vector<std::pair<Ref, Ref>> wires;
};

const std::map<std::string, Template>& templates() {
  static const std::map<std::string, Template> t = {
      {"0+", {"0", "+", {}, {{L(1, 1), L(1, 2)}}}},
      {"s+", {"s", "+", {"s", "+"},
              {{R(0, 0), L(1, 2)}, {R(0, 1), R(1, 2)}, {R(1, 0), L(0, 1)}, {R(1, 1), L(1, 1)}}}},
      {"0x", {"0", "x", {"eps", "0"}, {{R(0, 0), L(1, 1)}, {R(1, 0), L(1, 2)}}}},
      // s(x) * y = x * y + y, with y duplicated.
      {"sx", {"s", "x", {"delta", "x", "+"},
              {{R(0, 0), L(1, 1)},
               {R(1, 0), L(0, 1)},
               {R(1, 1), R(0, 1)},
               {R(1, 2), R(2, 0)},
               {R(2, 1), R(0, 2)},
               {R(2, 2), L(1, 2)}}}},
      {"0delta", {"0", "delta", {"0", "0"}, {{R(0, 0), L(1, 1)}, {R(1, 0), L(1, 2)}}}},
      {"sdelta", {"s", "delta", {"delta", "s", "s"},
                  {{R(0, 0), L(0, 1)}, {R(1, 0), L(1, 1)}, {R(1, 1), R(0, 1)}, {R(2, 0), L(1, 2)}, {R(2, 1), R(0, 2)}}}},
      {"0eps", {"0", "eps", {}, {}}},
      {"seps", {"s", "eps", {"eps"}, {{R(0, 0), L(0, 1)}}}},
  };
  return t;
}

Frame build_frame(const Template& t) {
  Frame f;
  f.shell.dim = 2;
  std::vector<std::string> agents{t.constructor, t.op};
  for (const auto& k : t.rhs) agents.push_back(star_name(k));
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const int n = arity(i < 2 ? agents[i] : t.rhs[i - 2]);
    f.shell.children.push_back(points(n));
    f.labels[{static_cast<int>(i)}] = agents[i];
    for (int j = 0; j < n; ++j) f.labels[{static_cast<int>(i), j}] = "a";
  }
  auto pos = [](Ref r) { return Position{r.lhs ? r.agent : 2 + r.agent, r.port}; };
  f.shell.link.push_back({{0, 0}, {1, 0}, identity_iso(point())});
  for (const auto& [a, b] : t.wires) f.shell.link.push_back({pos(a), pos(b), identity_iso(point())});
  return f;
}

std::optional<std::string> rule_for(const std::string& a, const std::string& b) {
  for (const auto& [name, t] : templates())
    if (t.constructor == a && t.op == b) return name;
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& kinds() {
  static const std::vector<std::string> k{"0", "eps", "s", "+", "x", "delta"};
  return k;
}

int arity(const std::string& kind) {
  if (kind == "0" || kind == "eps") return 1;
  if (kind == "s") return 2;
  if (kind == "+" || kind == "x" || kind == "delta") return 3;
  throw std::invalid_argument("lafont: unknown agent " + kind);
}

int Net::add(const std::string& kind) {
  arity(kind);
  agents[next_id] = kind;
  return next_id++;
}

void Net::wire(Port a, Port b) {
  for (Port p : {a, b}) {
    auto it = agents.find(p.agent);
    if (it == agents.end() || p.port < 0 || p.port >= arity(it->second))
      throw std::invalid_argument("lafont: no port " + std::to_string(p.agent) + "." + std::to_string(p.port));
    if (partner(p)) throw std::invalid_argument("lafont: port already wired");
  }
  if (a == b) throw std::invalid_argument("lafont: port wired to itself");
  wires.push_back({a, b});
}

std::optional<Port> Net::partner(Port p) const {
  for (const auto& [a, b] : wires) {
    if (a == p) return b;
    if (b == p) return a;
  }
  return std::nullopt;
}

std::vector<Port> Net::free_ports() const {
  std::set<Port> used;
  for (const auto& [a, b] : wires) {
    used.insert(a);
    used.insert(b);
  }
  std::vector<Port> out;
  for (const auto& [id, k] : agents)
    for (int j = 0; j < arity(k); ++j)
      if (!used.count({id, j})) out.push_back({id, j});
  return out;
}

const Hypergraph& signature() {
  static const Hypergraph h = [] {
    Hypergraph g(2, LabelSet{});
    g.labels().add("a", 0, "a");
    for (const auto& k : kinds()) {
      g.labels().add_pair(k, 1);
      g.set_boundary(k, fixtures::point_frame(std::vector<std::string>(arity(k), "a")));
    }
    for (const auto& [name, t] : templates()) {
      g.labels().add_pair(name, 2);
      g.set_boundary(name, build_frame(t));
    }
    return g;
  }();
  return h;
}

std::vector<std::string> rule_names() {
  std::vector<std::string> out;
  for (const auto& [name, t] : templates()) out.push_back(name);
  return out;
}

int rule_output_size(const std::string& rule) { return static_cast<int>(templates().at(rule).rhs.size()); }

const Frame& rule_frame(const std::string& rule) {
  if (!templates().count(rule)) throw std::invalid_argument("lafont: unknown rule " + rule);
  return signature().boundary(rule);
}

PastingDiagram to_pd(const Net& n) {
  if (n.agents.empty()) throw std::invalid_argument("lafont: empty net");
  std::map<int, int> index;
  PastingDiagram pd;
  pd.shell.dim = 2;
  for (const auto& [id, k] : n.agents) {
    const int t = static_cast<int>(index.size());
    index[id] = t;
    pd.shell.children.push_back(points(arity(k)));
    pd.labels[{t}] = k;
    for (int j = 0; j < arity(k); ++j) pd.labels[{t, j}] = "a";
  }
  std::set<Port> used;
  for (const auto& [a, b] : n.wires) {
    if (!used.insert(a).second || !used.insert(b).second) throw std::invalid_argument("lafont: port used twice");
    pd.shell.link.push_back({{index.at(a.agent), a.port}, {index.at(b.agent), b.port}, identity_iso(point())});
  }
  return pd;
}

Net encode_number(int k) {
  if (k < 0) throw std::invalid_argument("lafont: negative numeral");
  Net n;
  int below = n.add("0");
  for (int i = 0; i < k; ++i) {
    int s = n.add("s");
    n.wire({s, 1}, {below, 0});
    below = s;
  }
  return n;
}

std::optional<int> decode_number(const Net& n) {
  auto free = n.free_ports();
  if (free.size() != 1 || free[0].port != 0) return std::nullopt;
  int cur = free[0].agent, count = 0;
  std::set<int> seen;
  while (true) {
    if (!seen.insert(cur).second) return std::nullopt;
    const std::string& k = n.agents.at(cur);
    if (k == "0") break;
    if (k != "s") return std::nullopt;
    auto next = n.partner({cur, 1});
    if (!next || next->port != 0) return std::nullopt;
    cur = next->agent;
    ++count;
  }
  if (seen.size() != n.agents.size()) return std::nullopt;
  return count;
}

namespace {

// Copies `from` into `into` with fresh ids; returns the id map.
std::map<int, int> merge(Net& into, const Net& from) {
  std::map<int, int> ids;
  for (const auto& [id, k] : from.agents) ids[id] = into.add(k);
  for (const auto& [a, b] : from.wires) into.wire({ids.at(a.agent), a.port}, {ids.at(b.agent), b.port});
  return ids;
}

Net binary_net(const std::string& op, int m, int n) {
  Net net;
  int o = net.add(op);
  for (int side = 0; side < 2; ++side) {
    Net num = encode_number(side == 0 ? m : n);
    Port top = num.free_ports().at(0);
    auto ids = merge(net, num);
    net.wire({o, side}, {ids.at(top.agent), top.port});
  }
  return net;
}

}  // namespace

Net add_net(int m, int n) { return binary_net("+", m, n); }
Net mul_net(int m, int n) { return binary_net("x", m, n); }

std::vector<Redex> find_redexes(const Net& n) {
  std::vector<Redex> out;
  for (const auto& [a, b] : n.wires) {
    if (a.port != 0 || b.port != 0) continue;
    const std::string &ka = n.agents.at(a.agent), &kb = n.agents.at(b.agent);
    if (auto r = rule_for(ka, kb)) out.push_back({a.agent, b.agent, *r});
    else if (auto r2 = rule_for(kb, ka)) out.push_back({b.agent, a.agent, *r2});
  }
  std::sort(out.begin(), out.end(), [](const Redex& x, const Redex& y) {
    return std::minmax(x.constructor, x.op) < std::minmax(y.constructor, y.op);
  });
  return out;
}

std::pair<Net, Step> apply_rule(const Net& n, const Redex& r) {
  auto live = find_redexes(n);
  if (std::find(live.begin(), live.end(), r) == live.end()) throw std::invalid_argument("lafont: stale redex");
  const Template& t = templates().at(r.rule);
  const int lhs[2] = {r.constructor, r.op};

  Net out;
  out.next_id = n.next_id;
  for (const auto& [id, k] : n.agents)
    if (id != lhs[0] && id != lhs[1]) out.agents[id] = k;
  Step step{r.rule, {lhs[0], lhs[1]}, {}};
  for (const auto& k : t.rhs) step.produced.push_back(out.add(k));

  auto in_redex = [&](Port p) { return p.agent == lhs[0] || p.agent == lhs[1]; };
  auto port_of = [&](Ref x) { return Port{x.lhs ? lhs[x.agent] : step.produced[x.agent], x.port}; };

  // Old wires at the redex and the rule's wires form paths through the
  // redex ports; each path between two surviving ports becomes one wire.
  std::map<Port, std::vector<Port>> adj;
  for (const auto& [a, b] : n.wires) {
    if (!in_redex(a) && !in_redex(b)) {
      out.wires.push_back({a, b});
      continue;
    }
    if (a.port == 0 && b.port == 0 && in_redex(a) && in_redex(b)) continue;  // the active wire
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& [x, y] : t.wires) {
    Port a = port_of(x), b = port_of(y);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<Port> done;
  for (const auto& [start, nb] : adj) {
    if (in_redex(start) || done.count(start)) continue;
    Port prev = start, cur = nb.at(0);
    while (in_redex(cur)) {
      const auto& next = adj.at(cur);
      if (next.size() < 2) break;
      Port step_to = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step_to;
    }
    done.insert(start);
    if (in_redex(cur)) continue;  // the port stays free
    done.insert(cur);
    out.wires.push_back({start, cur});
  }
  for (const auto& [p, nb] : adj) {
    if (!in_redex(p) || nb.size() != 1) continue;
    Port prev = p, cur = nb[0];
    while (in_redex(cur) && adj.at(cur).size() == 2) {
      const auto& next = adj.at(cur);
      Port step_to = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step_to;
    }
    if (in_redex(cur)) throw std::invalid_argument("lafont: rule leaves a bare wire");
  }
  return {std::move(out), std::move(step)};
}

PastingDiagram trace_pd(const std::vector<Step>& steps, const std::map<int, std::string>& kinds) {
  PastingDiagram pd;
  pd.shell.dim = 3;
  std::map<int, Position> produced_at, consumed_at;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int c = static_cast<int>(i);
    const Frame& f = rule_frame(steps[i].rule);
    pd.shell.children.push_back(f.shell);
    pd.labels[{c}] = steps[i].rule;
    for (const auto& [p, l] : f.labels) pd.labels[concat({c}, p)] = l;
    for (int k = 0; k < 2; ++k) consumed_at[steps[i].consumed.at(k)] = {c, k};
    for (std::size_t k = 0; k < steps[i].produced.size(); ++k)
      produced_at[steps[i].produced[k]] = {c, 2 + static_cast<int>(k)};
  }
  for (const auto& [id, at] : produced_at) {
    auto it = consumed_at.find(id);
    if (it == consumed_at.end()) continue;
    if (it->second.child <= at.child) throw std::invalid_argument("lafont: agent consumed before it was produced");
    pd.shell.link.push_back({at, it->second, identity_iso(points(arity(kinds.at(id))))});
  }
  return pd;
}

Reduction reduce(const Net& n, Strategy s, int fuel, std::uint64_t seed, bool check) {
  if (fuel < 0) throw std::invalid_argument("lafont: negative fuel");
  Reduction out;
  out.net = n;
  std::mt19937_64 rng(seed);
  std::map<int, std::string> kinds = n.agents;
  const Hypergraph& h = signature();
  for (int i = 0; i < fuel; ++i) {
    auto redexes = find_redexes(out.net);
    if (redexes.empty()) break;
    const Redex& r = s == Strategy::leftmost
                         ? redexes.front()
                         : redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
    auto [next, step] = apply_rule(out.net, r);
    for (int id : step.produced) kinds[id] = next.agents.at(id);
    out.net = std::move(next);
    out.trace.steps.push_back(std::move(step));
    if (check && !out.net.agents.empty()) {
      PastingDiagram pd = to_pd(out.net);
      Report rep = validate_labeling(pd, h.labels());
      std::string why;
      if (!rep.ok() || !coherent(h, pd, &why))
        throw std::logic_error("lafont: invalid intermediate net: " + rep.str() + why);
    }
  }
  out.normal = find_redexes(out.net).empty();
  if (!out.trace.steps.empty()) out.trace.pd = trace_pd(out.trace.steps, kinds);
  return out;
}

Report check_trace(const Trace& t, const Net& initial, const Net& final) {
  Report r;
  if (t.steps.empty()) {
    if (initial.agents != final.agents) r.add("trace", "no steps but the nets differ");
    return r;
  }
  const Hypergraph& h = signature();
  if (classify(t.pd, h.labels()) != Kind::pasting_diagram) {
    r.add("trace", "not a pasting diagram: " + validate_labeling(t.pd, h.labels()).str());
    return r;
  }
  std::string why;
  if (!coherent(h, t.pd, &why)) r.add("trace", "incoherent: " + why);

  std::map<int, std::string> consumed, produced;
  for (const auto& p : external_positions(t.pd.shell)) {
    const Step& s = t.steps.at(p.child);
    const std::string& label = t.pd.labels.at({p.child, p.sub});
    if (p.sub < 2) consumed[s.consumed.at(p.sub)] = label;
    else produced[s.produced.at(p.sub - 2)] = label;
  }
  std::map<int, std::string> rest_initial = initial.agents, rest_final = final.agents;
  for (const auto& [id, label] : consumed) {
    auto it = initial.agents.find(id);
    if (it == initial.agents.end() || it->second != label) r.add("source", "agent " + std::to_string(id) + " is not initial");
    rest_initial.erase(id);
  }
  for (const auto& [id, label] : produced) {
    auto it = final.agents.find(id);
    if (it == final.agents.end() || star_name(it->second) != label) r.add("target", "agent " + std::to_string(id) + " is not final");
    rest_final.erase(id);
  }
  if (rest_initial != rest_final) r.add("untouched", "agents outside the trace differ");
  try {
    formal_composite(h, t.pd);
  } catch (const std::exception& e) {
    r.add("composite", e.what());
  }
  return r;
}

std::string net_code(const Net& n) { return labeling_code(to_pd(n), 1u << 20); }

}  // namespace hyper::lafont

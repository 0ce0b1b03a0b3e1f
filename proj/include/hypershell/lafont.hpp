#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypershell/hypergraph.hpp"

namespace hyper::lafont {

/// Agent kinds: "0", "eps", "s", "+", "x", "delta". Port 0 is the
/// principal port; s is (out, pred), + and x are (first, second, result),
/// delta is (input, copy1, copy2).
int arity(const std::string& kind);
const std::vector<std::string>& kinds();

struct Port {
  int agent = 0;
  int port = 0;

  auto operator<=>(const Port&) const = default;
};

/// Agents keep their ids across rewriting steps.
struct Net {
  std::map<int, std::string> agents;
  std::vector<std::pair<Port, Port>> wires;
  int next_id = 0;

  int add(const std::string& kind);
  void wire(Port a, Port b);
  std::optional<Port> partner(Port p) const;
  std::vector<Port> free_ports() const;
};

/// The signature as a 2-hypergraph: one self-conjugate object a, the agents
/// in grade 1 and one rule per interacting pair in grade 2.
const Hypergraph& signature();
std::vector<std::string> rule_names();
/// Number of agents a rule creates (it always consumes two).
int rule_output_size(const std::string& rule);
/// Boundary 2-frame of a rule: its two left-hand agents, then its
/// right-hand agents conjugated, glued along the interface.
const Frame& rule_frame(const std::string& rule);

/// Agents as top components, ports as points, wires as gluings. Throws
/// std::invalid_argument on an empty net or a doubly used port.
PastingDiagram to_pd(const Net& n);

Net encode_number(int k);
std::optional<int> decode_number(const Net& n);
/// m + n and m * n with the operator's principal port on m.
Net add_net(int m, int n);
Net mul_net(int m, int n);

struct Redex {
  int constructor = 0;  // the 0 or s agent
  int op = 0;
  std::string rule;

  bool operator==(const Redex&) const = default;
};
/// Active pairs with a rule, ordered by agent ids.
std::vector<Redex> find_redexes(const Net& n);

/// One rewriting step: `consumed` are the constructor and operator,
/// `produced` the new agents in rule order.
struct Step {
  std::string rule;
  std::vector<int> consumed;
  std::vector<int> produced;
};
/// Throws std::invalid_argument on a stale redex.
std::pair<Net, Step> apply_rule(const Net& n, const Redex& r);

struct Trace {
  std::vector<Step> steps;
  /// One 2-component per step; an agent produced by one step and consumed
  /// by a later one is glued between them. Empty when there are no steps.
  PastingDiagram pd;
};
PastingDiagram trace_pd(const std::vector<Step>& steps, const std::map<int, std::string>& kinds);

enum class Strategy { leftmost, random };

struct Reduction {
  Net net;
  Trace trace;
  bool normal = false;  // false when fuel ran out
};
/// With `check`, every intermediate net is validated.
Reduction reduce(const Net& n, Strategy s, int fuel, std::uint64_t seed = 0, bool check = false);

/// The trace is a coherent 2-diagram whose unglued agents are exactly the
/// consumed initial agents and the produced final ones.
Report check_trace(const Trace& t, const Net& initial, const Net& final);

std::string net_code(const Net& n);

}  // namespace hyper::lafont

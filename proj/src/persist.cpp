#include "hypershell/persist.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hyper {
namespace {

using json = nlohmann::json;

json iso_json(const ShellIso& f) {
  json sub = json::array();
  for (const auto& s : f.sub) sub.push_back(iso_json(s));
  return {{"perm", f.perm}, {"sub", sub}};
}

json shell_json(const Shell& s) {
  json children = json::array(), link = json::array();
  for (const auto& c : s.children) children.push_back(shell_json(c));
  for (const auto& lp : s.link)
    link.push_back({{"a", {lp.a.child, lp.a.sub}}, {"b", {lp.b.child, lp.b.sub}}, {"iso", iso_json(lp.iso)}});
  json out = {{"dim", s.dim}, {"children", children}, {"link", link}};
  if (s.open_points) out["open"] = true;
  return out;
}

json labeling_json(const Labeling& l) {
  json labels = json::array();
  for (const auto& [p, name] : l.labels) labels.push_back({{"path", p}, {"label", name}});
  return {{"shell", shell_json(l.shell)}, {"labels", labels}};
}

json hypergraph_json(const Hypergraph& h) {
  json labels = json::array();
  for (const auto& [name, info] : h.labels().all()) {
    json e = {{"name", name}, {"grade", info.grade}, {"conj", info.conj}};
    if (info.sign) e["sign"] = *info.sign;
    if (h.has_boundary(name)) e["boundary"] = labeling_json(h.boundary(name));
    labels.push_back(e);
  }
  return {{"dim", h.dim()}, {"budget", h.budget}, {"labels", labels}};
}

json net_json(const lafont::Net& n) {
  json agents = json::array(), wires = json::array();
  for (const auto& [id, k] : n.agents) agents.push_back({{"id", id}, {"kind", k}});
  for (const auto& [a, b] : n.wires) wires.push_back({{a.agent, a.port}, {b.agent, b.port}});
  return {{"agents", agents}, {"wires", wires}, {"next_id", n.next_id}};
}

json trace_json(const lafont::Trace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back({{"rule", s.rule}, {"consumed", s.consumed}, {"produced", s.produced}});
  return {{"steps", steps}};
}

std::string finish(json body, const std::string& kind) {
  body["kind"] = kind;
  body["version"] = kDocumentVersion;
  return body.dump(1) + "\n";
}

// ---- reading

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object", where);
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + std::string(key) + "' in " + where, where + "." + key);
  return *it;
}

template <typename T>
T as(const json& j, const std::string& field) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw SchemaError("field " + field + " has the wrong type", field);
  }
}

const json& array_at(const json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError("field " + field + " must be an array", field);
  return j;
}

ShellIso iso_from(const json& j, const std::string& where) {
  ShellIso f;
  f.perm = as<std::vector<int>>(need(j, "perm", where), where + ".perm");
  const json& sub = array_at(need(j, "sub", where), where + ".sub");
  for (std::size_t i = 0; i < sub.size(); ++i) f.sub.push_back(iso_from(sub[i], where + ".sub[" + std::to_string(i) + "]"));
  return f;
}

Position position_from(const json& j, const std::string& where) {
  auto v = as<std::vector<int>>(j, where);
  if (v.size() != 2) throw SchemaError(where + " must have two entries", where);
  return {v[0], v[1]};
}

Shell shell_from(const json& j, const std::string& where) {
  Shell s;
  s.dim = as<int>(need(j, "dim", where), where + ".dim");
  const json& children = array_at(need(j, "children", where), where + ".children");
  for (std::size_t i = 0; i < children.size(); ++i)
    s.children.push_back(shell_from(children[i], where + ".children[" + std::to_string(i) + "]"));
  const json& link = array_at(need(j, "link", where), where + ".link");
  for (std::size_t i = 0; i < link.size(); ++i) {
    const std::string at = where + ".link[" + std::to_string(i) + "]";
    s.link.push_back({position_from(need(link[i], "a", at), at + ".a"), position_from(need(link[i], "b", at), at + ".b"),
                      iso_from(need(link[i], "iso", at), at + ".iso")});
  }
  if (auto it = j.find("open"); it != j.end()) s.open_points = as<bool>(*it, where + ".open");
  return s;
}

Labeling labeling_from(const json& j, const std::string& where) {
  Labeling l;
  l.shell = shell_from(need(j, "shell", where), where + ".shell");
  const json& labels = array_at(need(j, "labels", where), where + ".labels");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string at = where + ".labels[" + std::to_string(i) + "]";
    l.labels[as<Path>(need(labels[i], "path", at), at + ".path")] = as<std::string>(need(labels[i], "label", at), at + ".label");
  }
  return l;
}

Hypergraph hypergraph_from(const json& j, const std::string& where) {
  Hypergraph h(as<int>(need(j, "dim", where), where + ".dim"), LabelSet{});
  if (auto it = j.find("budget"); it != j.end()) h.budget = as<std::size_t>(*it, where + ".budget");
  const json& labels = array_at(need(j, "labels", where), where + ".labels");
  std::vector<std::pair<std::string, Frame>> boundaries;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string at = where + ".labels[" + std::to_string(i) + "]";
    const auto name = as<std::string>(need(labels[i], "name", at), at + ".name");
    const auto conj = as<std::string>(need(labels[i], "conj", at), at + ".conj");
    const int grade = as<int>(need(labels[i], "grade", at), at + ".grade");
    std::optional<int> sign;
    if (auto it = labels[i].find("sign"); it != labels[i].end()) sign = as<int>(*it, at + ".sign");
    if (!h.labels().contains(name)) {
      try {
        h.labels().add(name, grade, conj, sign);
      } catch (const std::invalid_argument& e) {
        throw SchemaError(at + ": " + e.what(), at);
      }
    } else {
      const LabelInfo& info = h.labels().info(name);
      if (info.conj != conj || info.grade != grade || info.sign != sign)
        throw SchemaError(at + ": inconsistent with its conjugate", at);
    }
    if (auto it = labels[i].find("boundary"); it != labels[i].end())
      boundaries.push_back({name, labeling_from(*it, at + ".boundary")});
  }
  for (const auto& [name, f] : boundaries) h.set_boundary_raw(name, f);
  return h;
}

lafont::Net net_from(const json& j, const std::string& where) {
  lafont::Net n;
  const json& agents = array_at(need(j, "agents", where), where + ".agents");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string at = where + ".agents[" + std::to_string(i) + "]";
    const int id = as<int>(need(agents[i], "id", at), at + ".id");
    const auto kind = as<std::string>(need(agents[i], "kind", at), at + ".kind");
    if (std::find(lafont::kinds().begin(), lafont::kinds().end(), kind) == lafont::kinds().end())
      throw SchemaError(at + ": unknown agent kind " + kind, at + ".kind");
    n.agents[id] = kind;
  }
  n.next_id = as<int>(need(j, "next_id", where), where + ".next_id");
  const json& wires = array_at(need(j, "wires", where), where + ".wires");
  for (std::size_t i = 0; i < wires.size(); ++i) {
    const std::string at = where + ".wires[" + std::to_string(i) + "]";
    auto w = as<std::vector<std::vector<int>>>(wires[i], at);
    if (w.size() != 2 || w[0].size() != 2 || w[1].size() != 2) throw SchemaError(at + " must be two ports", at);
    try {
      n.wire({w[0][0], w[0][1]}, {w[1][0], w[1][1]});
    } catch (const std::invalid_argument& e) {
      throw InvalidDocument(at + ": " + e.what(), {});
    }
  }
  for (const auto& [id, k] : n.agents)
    if (id >= n.next_id) throw InvalidDocument(where + ": agent id " + std::to_string(id) + " is not below next_id", {});
  return n;
}

lafont::Trace trace_from(const json& j, const std::string& where) {
  lafont::Trace t;
  const json& steps = array_at(need(j, "steps", where), where + ".steps");
  std::map<int, std::string> kinds;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string at = where + ".steps[" + std::to_string(i) + "]";
    lafont::Step s;
    s.rule = as<std::string>(need(steps[i], "rule", at), at + ".rule");
    s.consumed = as<std::vector<int>>(need(steps[i], "consumed", at), at + ".consumed");
    s.produced = as<std::vector<int>>(need(steps[i], "produced", at), at + ".produced");
    const auto names = lafont::rule_names();
    if (std::find(names.begin(), names.end(), s.rule) == names.end()) throw SchemaError(at + ": unknown rule " + s.rule, at + ".rule");
    if (s.consumed.size() != 2 || static_cast<int>(s.produced.size()) != lafont::rule_output_size(s.rule))
      throw InvalidDocument(at + ": agent counts do not fit " + s.rule, {});
    // Kinds are determined by the rule's frame.
    const Frame& f = lafont::rule_frame(s.rule);
    for (int k = 0; k < 2; ++k) kinds[s.consumed[k]] = f.labels.at({k});
    for (std::size_t k = 0; k < s.produced.size(); ++k) {
      std::string l = f.labels.at({2 + static_cast<int>(k)});
      kinds[s.produced[k]] = l.substr(0, l.size() - 1);
    }
    t.steps.push_back(std::move(s));
  }
  if (!t.steps.empty()) {
    try {
      t.pd = lafont::trace_pd(t.steps, kinds);
    } catch (const std::invalid_argument& e) {
      throw InvalidDocument(where + ": " + e.what(), {});
    }
  }
  return t;
}

void check(const Report& r, const std::string& what) {
  if (!r.ok()) throw InvalidDocument(what + " fails validation:\n" + r.str(), r);
}

}  // namespace

std::string render_doc(const Shell& s) { return finish(shell_json(s), "shell"); }

std::string render_doc(const Labeling& l, const std::string& kind) {
  if (kind != "labeling" && kind != "pd") throw std::invalid_argument("render_doc: labeling kind must be labeling or pd");
  return finish(labeling_json(l), kind);
}

std::string render_doc(const Hypergraph& h) { return finish(hypergraph_json(h), "hypergraph"); }
std::string render_doc(const lafont::Net& n) { return finish(net_json(n), "net"); }
std::string render_doc(const lafont::Trace& t) { return finish(trace_json(t), "trace"); }

std::string render_doc(const WeakModel& m) {
  std::vector<std::string> universal(m.universal.begin(), m.universal.end());
  return finish({{"hypergraph", hypergraph_json(m.h)},
                 {"universal", universal},
                 {"dimension", m.dimension},
                 {"weakness", m.weakness}},
                "weakmodel");
}

std::string render_doc(const Outer& o) {
  json slots = json::array();
  for (const auto& [name, pd] : o.slots) slots.push_back({{"name", name}, {"pd", labeling_json(pd)}});
  return finish({{"outer", labeling_json(o.outer)}, {"slots", slots}}, "outer");
}

Document parse_doc(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("syntax error at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
  const auto kind = as<std::string>(need(j, "kind", "document"), "kind");
  const int version = as<int>(need(j, "version", "document"), "version");
  if (version != kDocumentVersion) throw SchemaError("unsupported version " + std::to_string(version), "version");

  Document d{kind, Shell{}};
  if (kind == "shell") {
    Shell s = shell_from(j, "shell");
    check(validate_shell(s), "shell");
    d.value = std::move(s);
  } else if (kind == "labeling" || kind == "pd") {
    Labeling l = labeling_from(j, kind);
    check(validate_shell(l.shell), kind);
    d.value = std::move(l);
  } else if (kind == "hypergraph") {
    Hypergraph h = hypergraph_from(j, "hypergraph");
    check(validate_hypergraph(h), "hypergraph");
    d.value = std::move(h);
  } else if (kind == "net") {
    d.value = net_from(j, "net");
  } else if (kind == "trace") {
    d.value = trace_from(j, "trace");
  } else if (kind == "weakmodel") {
    WeakModel m{hypergraph_from(need(j, "hypergraph", "weakmodel"), "weakmodel.hypergraph"), {}, 1, 0};
    check(validate_hypergraph(m.h), "weakmodel hypergraph");
    for (const auto& u : as<std::vector<std::string>>(need(j, "universal", "weakmodel"), "weakmodel.universal")) {
      if (!m.h.labels().contains(u)) throw SchemaError("unknown universal label " + u, "weakmodel.universal");
      m.universal.insert(u);
    }
    m.dimension = as<int>(need(j, "dimension", "weakmodel"), "weakmodel.dimension");
    m.weakness = as<int>(need(j, "weakness", "weakmodel"), "weakmodel.weakness");
    d.value = std::move(m);
  } else if (kind == "outer") {
    Outer o{labeling_from(need(j, "outer", "outer"), "outer.outer"), {}};
    check(validate_shell(o.outer.shell), "outer diagram");
    for (const auto& slot : array_at(need(j, "slots", "outer"), "outer.slots")) {
      auto name = as<std::string>(need(slot, "name", "outer.slots"), "outer.slots.name");
      Labeling pd = labeling_from(need(slot, "pd", "outer.slots"), "outer.slots.pd");
      check(validate_shell(pd.shell), "slot " + name);
      if (!o.slots.emplace(name, std::move(pd)).second) throw SchemaError("duplicate slot " + name, "outer.slots.name");
    }
    d.value = std::move(o);
  } else {
    throw SchemaError("unknown document kind " + kind, "kind");
  }
  return d;
}

Document read_doc(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_doc(ss.str());
}

void write_doc(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace hyper

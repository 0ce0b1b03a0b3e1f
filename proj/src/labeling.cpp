#include "hypershell/labeling.hpp"

#include <stdexcept>

namespace hyper {

namespace {

bool same_info(const LabelInfo& a, const LabelInfo& b) {
  return a.grade == b.grade && a.conj == b.conj && a.sign == b.sign;
}

void insert(std::map<std::string, LabelInfo>& m, const std::string& name, LabelInfo info) {
  auto [it, fresh] = m.emplace(name, info);
  if (!fresh && !same_info(it->second, info))
    throw std::invalid_argument("label set: conflicting declaration of " + name);
}

bool is_prefix(const Path& p, const Path& x) {
  return x.size() <= p.size() && std::equal(x.begin(), x.end(), p.begin());
}

}  // namespace

void LabelSet::add(const std::string& name, int grade, const std::string& conj, std::optional<int> sign) {
  if (grade < 0) throw std::invalid_argument("label set: negative grade for " + name);
  if (sign && *sign != 1 && *sign != -1) throw std::invalid_argument("label set: sign must be +1 or -1");
  if (name == conj) {
    if (sign) throw std::invalid_argument("label set: signed label " + name + " cannot be self-conjugate");
    insert(info_, name, {grade, conj, std::nullopt});
    return;
  }
  insert(info_, name, {grade, conj, sign});
  insert(info_, conj, {grade, name, sign ? std::optional<int>(-*sign) : std::nullopt});
}

void LabelSet::add_pair(const std::string& name, int grade, std::optional<int> sign) {
  add(name, grade, star_name(name), sign);
}

const LabelInfo& LabelSet::info(const std::string& name) const {
  auto it = info_.find(name);
  if (it == info_.end()) throw std::out_of_range("unknown label " + name);
  return it->second;
}

std::vector<std::string> LabelSet::of_grade(int g) const {
  std::vector<std::string> out;
  for (const auto& [name, i] : info_)
    if (i.grade == g) out.push_back(name);
  return out;
}

int LabelSet::top_grade() const {
  int g = -1;
  for (const auto& [name, i] : info_) g = std::max(g, i.grade);
  return g;
}

Report LabelSet::validate() const {
  Report r;
  for (const auto& [name, i] : info_) {
    auto it = info_.find(i.conj);
    if (it == info_.end()) {
      r.add("conjugation", "conjugate of " + name + " is missing");
      continue;
    }
    if (it->second.conj != name) r.add("conjugation", "conjugation is not involutive at " + name);
    if (it->second.grade != i.grade) r.add("grade", name + " and its conjugate differ in grade");
    if (i.sign.has_value() != it->second.sign.has_value())
      r.add("sign", "only one of " + name + ", " + i.conj + " is signed");
    else if (i.sign && (*i.sign != -*it->second.sign || i.conj == name))
      r.add("sign", name + " and its conjugate must have opposite signs");
  }
  return r;
}

std::string star_name(const std::string& name) {
  if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
  return name + "*";
}

int component_dim(const Shell& s, const Path& x) { return s.dim - static_cast<int>(x.size()); }

Report validate_labeling(const Labeling& l, const LabelSet& sigma) {
  Report r;
  Report sr = validate_shell(l.shell);
  if (!sr.ok()) {
    r.add("shell", sr.str());
    return r;
  }
  bool known = true;
  for (const auto& [x, name] : l.labels) {
    if (!has_component(l.shell, x)) {
      r.add("shell", "label on missing component " + path_str(x));
      known = false;
      continue;
    }
    if (!sigma.contains(name)) {
      r.add("unknown-label", name + " at " + path_str(x));
      known = false;
      continue;
    }
    int d = component_dim(l.shell, x);
    if (sigma.grade(name) != d)
      r.add("graded", name + " of grade " + std::to_string(sigma.grade(name)) + " on a " + std::to_string(d) +
                          "-component " + path_str(x));
    const Shell& sub = component_shell(l.shell, x);
    for (int i = 0; i < static_cast<int>(sub.children.size()); ++i)
      if (!l.labels.count(concat(x, {i})))
        r.add("descendant-closed", path_str(x) + " is labeled but its child " + std::to_string(i) + " is not");
  }
  if (!known) return r;
  for (const auto& lp : linked_pairs(l.shell)) {
    auto a = l.labels.find(lp.x), b = l.labels.find(lp.y);
    if (a == l.labels.end() || b == l.labels.end()) continue;
    if (sigma.conj(a->second) != b->second)
      r.add("link-compatible", path_str(lp.x) + " (" + a->second + ") and " + path_str(lp.y) + " (" + b->second +
                                   ") are linked but not conjugate");
  }
  return r;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::cell: return "cell";
    case Kind::frame: return "frame";
    case Kind::pasting_diagram: return "pasting-diagram";
    case Kind::partial: return "partial";
    case Kind::invalid: return "invalid";
  }
  return "invalid";
}

Kind classify(const Labeling& l, const LabelSet& sigma) {
  if (!validate_labeling(l, sigma).ok()) return Kind::invalid;
  bool lower_total = true;
  for (const auto& p : node_paths(l.shell))
    if (!p.empty() && !l.labels.count(p)) lower_total = false;
  bool root = l.labels.count({}) != 0;
  if (!lower_total) return Kind::partial;
  if (is_closed(l.shell)) return root ? Kind::cell : Kind::frame;
  return root ? Kind::partial : Kind::pasting_diagram;
}

namespace {
std::function<std::string(const Path&)> label_color(const Labeling& l) {
  return [&l](const Path& p) {
    auto it = l.labels.find(p);
    return it == l.labels.end() ? std::string("~") : "=" + it->second;
  };
}
}  // namespace

std::string labeling_code(const Labeling& l, std::size_t budget) {
  auto paths = node_paths(l.shell);
  return canon::canonicalize(flatten_shell(l.shell, paths, label_color(l)), budget).code;
}

std::optional<ShellIso> labeled_iso(const Labeling& a, const Labeling& b, std::size_t budget) {
  return canonical_iso(a.shell, label_color(a), b.shell, label_color(b), budget);
}

Frame boundary_frame(const Cell& c) {
  Frame f = c;
  f.labels.erase(Path{});
  return f;
}

Cell with_root(const Frame& f, const std::string& label) {
  Cell c = f;
  c.labels[{}] = label;
  return c;
}

Labeling restrict_to(const Labeling& l, const Path& x) {
  Labeling out;
  out.shell = component_shell(l.shell, x);
  for (auto it = l.labels.lower_bound(x); it != l.labels.end() && is_prefix(it->first, x); ++it)
    out.labels[Path(it->first.begin() + x.size(), it->first.end())] = it->second;
  return out;
}

Cell face(const Labeling& l, const Path& x) {
  if (!has_component(l.shell, x)) throw std::invalid_argument("face: no component at " + path_str(x));
  Cell c = restrict_to(l, x);
  for (const auto& p : node_paths(c.shell))
    if (!c.labels.count(p)) throw std::invalid_argument("face: " + path_str(concat(x, p)) + " is unlabeled");
  return c;
}

Frame face_frame(const Labeling& l, const Path& x) { return boundary_frame(face(l, x)); }

PastingDiagram singleton_pd(const Cell& c) {
  PastingDiagram pd;
  if (c.shell.dim == 0) {
    pd.shell = points(1, true);
  } else {
    pd.shell.dim = c.shell.dim + 1;
    pd.shell.children = {c.shell};
  }
  for (const auto& [p, name] : c.labels) pd.labels[concat({0}, p)] = name;
  return pd;
}

Labeling conjugate_labeling(const Labeling& l, const LabelSet& sigma) {
  Labeling out = l;
  for (auto& [p, name] : out.labels) name = sigma.conj(name);
  return out;
}

Labeling transport(const Labeling& l, const ShellIso& f) {
  Labeling out;
  out.shell = transport(l.shell, f);
  for (const auto& [p, name] : l.labels) out.labels[apply(f, p)] = name;
  return out;
}

}  // namespace hyper

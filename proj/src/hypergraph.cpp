#include "hypershell/hypergraph.hpp"

#include <stdexcept>

namespace hyper {

void Hypergraph::set_boundary(const std::string& name, const Frame& f) {
  set_boundary_raw(name, f);
  const std::string& c = labels_.conj(name);
  if (c != name) set_boundary_raw(c, conjugate_labeling(f, labels_));
}

void Hypergraph::set_boundary_raw(const std::string& name, const Frame& f) {
  if (!labels_.contains(name)) throw std::invalid_argument("hypergraph: unknown label " + name);
  boundary_[name] = f;
  code_cache_.erase(name);
}

const Frame& Hypergraph::boundary(const std::string& name) const {
  auto it = boundary_.find(name);
  if (it == boundary_.end()) throw std::out_of_range("hypergraph: no boundary for " + name);
  return it->second;
}

const std::string& Hypergraph::boundary_code(const std::string& name) const {
  auto it = code_cache_.find(name);
  if (it != code_cache_.end()) return it->second;
  return code_cache_.emplace(name, labeling_code(boundary(name), budget)).first->second;
}

Hypergraph Hypergraph::truncate(int d) const {
  LabelSet ls;
  for (const auto& [name, info] : labels_.all())
    if (info.grade <= d) ls.add(name, info.grade, info.conj, info.sign);
  Hypergraph out(std::min(d, dim_), ls);
  out.budget = budget;
  for (const auto& [name, f] : boundary_)
    if (labels_.grade(name) <= d) out.set_boundary_raw(name, f);
  return out;
}

bool coherent(const Hypergraph& h, const Labeling& l, std::string* why) {
  for (const auto& [x, name] : l.labels) {
    if (component_dim(l.shell, x) < 1) continue;
    if (!h.has_boundary(name)) {
      if (why) *why = name + " has no boundary";
      return false;
    }
    if (labeling_code(face_frame(l, x), h.budget) != h.boundary_code(name)) {
      if (why) *why = "face at " + path_str(x) + " does not match the boundary of " + name;
      return false;
    }
  }
  return true;
}

Report validate_hypergraph(const Hypergraph& h) {
  Report r;
  r.merge(h.labels().validate(), "labels");
  for (const auto& [name, info] : h.labels().all()) {
    if (info.grade > h.dim()) r.add("labels", name + " has grade above " + std::to_string(h.dim()));
    if (info.grade == 0) continue;
    if (!h.has_boundary(name)) {
      r.add("boundary", name + " has no boundary frame");
      continue;
    }
    const Frame& f = h.boundary(name);
    if (f.shell.dim != info.grade || classify(f, h.labels()) != Kind::frame) {
      r.add("boundary", "boundary of " + name + " is not a " + std::to_string(info.grade) + "-frame");
      continue;
    }
    if (!coherent(h, f)) r.add("coherence", "boundary of " + name + " is not coherent");
  }
  if (!r.ok()) return r;
  for (const auto& [name, info] : h.labels().all()) {
    if (info.grade == 0) continue;
    if (labeling_code(conjugate_labeling(h.boundary(name), h.labels()), h.budget) != h.boundary_code(info.conj))
      r.add("conjugation", "boundary of " + info.conj + " is not the conjugate boundary of " + name);
  }
  return r;
}

bool frame_member(const Hypergraph& h, const Frame& f) {
  if (f.shell.dim > h.dim() + 1) throw std::invalid_argument("frame_member: frame dimension exceeds hypergraph");
  return classify(f, h.labels()) == Kind::frame && coherent(h, f);
}

Labeling relabel(const Labeling& l, const std::map<std::string, std::string>& carrier) {
  Labeling out = l;
  for (auto& [p, name] : out.labels) name = carrier.at(name);
  return out;
}

Report validate_map(const HypergraphMap& m) {
  Report r;
  const auto& src = m.source->labels();
  const auto& dst = m.target->labels();
  for (const auto& [name, info] : src.all()) {
    auto it = m.carrier.find(name);
    if (it == m.carrier.end() || !dst.contains(it->second)) {
      r.add("total", name + " has no image");
      continue;
    }
    if (dst.grade(it->second) != info.grade) r.add("graded", name + " changes grade");
    auto jt = m.carrier.find(info.conj);
    if (jt != m.carrier.end() && dst.conj(it->second) != jt->second)
      r.add("conjugation", "image of " + name + "* is not the conjugate image");
  }
  if (!r.ok()) return r;
  for (const auto& [name, info] : src.all()) {
    if (info.grade == 0) continue;
    const std::string& img = m.carrier.at(name);
    if (labeling_code(relabel(m.source->boundary(name), m.carrier), m.target->budget) != m.target->boundary_code(img))
      r.add("boundary", "boundary of " + name + " is not carried to the boundary of " + img);
  }
  return r;
}

HypergraphMap compose_maps(const HypergraphMap& g, const HypergraphMap& f) {
  HypergraphMap h{f.source, g.target, {}};
  for (const auto& [a, b] : f.carrier) h.carrier[a] = g.carrier.at(b);
  return h;
}

HypergraphMap identity_map(const Hypergraph& h) {
  HypergraphMap m{&h, &h, {}};
  for (const auto& [name, info] : h.labels().all()) m.carrier[name] = name;
  return m;
}

}  // namespace hyper

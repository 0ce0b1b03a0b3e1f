#pragma once

#include <map>
#include <string>

#include "hypershell/labeling.hpp"

namespace hyper {

/// Finite n-hypergraph: labels graded 0..dim, each label of grade i >= 1
/// carrying its boundary i-frame.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int dim, LabelSet labels) : dim_(dim), labels_(std::move(labels)) {}

  int dim() const { return dim_; }
  const LabelSet& labels() const { return labels_; }
  LabelSet& labels() { return labels_; }

  /// Sets the boundary of `name` and the conjugate boundary of its conjugate.
  void set_boundary(const std::string& name, const Frame& f);
  /// Sets only the boundary of `name` (used to build malformed inputs).
  void set_boundary_raw(const std::string& name, const Frame& f);
  bool has_boundary(const std::string& name) const { return boundary_.count(name) != 0; }
  const Frame& boundary(const std::string& name) const;
  /// Canonical code of boundary(name), cached.
  const std::string& boundary_code(const std::string& name) const;
  const std::map<std::string, Frame>& boundaries() const { return boundary_; }

  /// Drops grades above `d`.
  Hypergraph truncate(int d) const;

  std::size_t budget = 4096;

 private:
  int dim_ = 0;
  LabelSet labels_;
  std::map<std::string, Frame> boundary_;
  mutable std::map<std::string, std::string> code_cache_;
};

/// Clauses: "labels", "boundary", "conjugation", "coherence".
Report validate_hypergraph(const Hypergraph& h);

/// Every labeled component of dimension >= 1 has a face frame isomorphic to
/// the boundary of its label. Assumes `l` is a valid labeling.
bool coherent(const Hypergraph& h, const Labeling& l, std::string* why = nullptr);

/// Throws std::invalid_argument when the frame dimension exceeds dim + 1.
bool frame_member(const Hypergraph& h, const Frame& f);

struct HypergraphMap {
  const Hypergraph* source = nullptr;
  const Hypergraph* target = nullptr;
  std::map<std::string, std::string> carrier;
};

Labeling relabel(const Labeling& l, const std::map<std::string, std::string>& carrier);

/// Clauses: "total", "graded", "conjugation", "boundary".
Report validate_map(const HypergraphMap& m);

HypergraphMap compose_maps(const HypergraphMap& g, const HypergraphMap& f);
HypergraphMap identity_map(const Hypergraph& h);

}  // namespace hyper

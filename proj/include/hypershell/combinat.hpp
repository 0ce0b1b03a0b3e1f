#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyper {

/// Rooted tree over opaque node ids 0..size()-1. Children are unordered;
/// equality is up to isomorphism via tree_canonical_code.
class Tree {
 public:
  using Node = int;

  /// `parent[v]` is the parent of v, or -1 for the single root.
  /// Throws std::invalid_argument unless the map forms a tree.
  explicit Tree(std::vector<Node> parent);

  static Tree single() { return Tree({-1}); }

  std::size_t size() const { return parent_.size(); }
  Node root() const { return root_; }
  std::optional<Node> parent(Node v) const;
  const std::vector<Node>& children(Node v) const { return children_.at(v); }
  int depth(Node v) const { return depth_.at(v); }
  int height() const;
  const std::vector<Node>& parents() const { return parent_; }

  std::set<Node> layer(int k) const;
  std::set<Node> deep_layers(int i) const;

  /// Subtree rooted at `x`; node ids are renumbered, `original[i]` gives the
  /// id in this tree of new node i.
  Tree subtree(Node x, std::vector<Node>* original = nullptr) const;

 private:
  std::vector<Node> parent_;
  std::vector<std::vector<Node>> children_;
  std::vector<int> depth_;
  Node root_ = 0;
};

/// Equal iff the trees are isomorphic as rooted unordered trees.
std::string tree_canonical_code(const Tree& t);

/// Finite family indexed by a set.
template <typename V>
using Word = std::map<int, V>;

/// Fixed-point-free partial matching on `carrier`, each ordered matched pair
/// carrying a witness. Only one orientation is stored; the reverse witness is
/// produced by `invert`.
template <typename V>
class Link {
 public:
  using Invert = V (*)(const V&);

  Link(std::set<int> carrier, Invert invert) : carrier_(std::move(carrier)), invert_(invert) {}

  const std::set<int>& carrier() const { return carrier_; }

  void match(int i, int j, V witness) {
    if (i == j) throw std::invalid_argument("link: fixed point");
    if (!carrier_.count(i) || !carrier_.count(j)) throw std::invalid_argument("link: not in carrier");
    if (partner_.count(i) || partner_.count(j)) throw std::invalid_argument("link: already matched");
    partner_[i] = j;
    partner_[j] = i;
    witness_.emplace(std::make_pair(i, j), std::move(witness));
  }

  std::optional<int> partner(int i) const {
    auto it = partner_.find(i);
    if (it == partner_.end()) return std::nullopt;
    return it->second;
  }

  /// Witness for the ordered pair (i, j); throws if unmatched.
  V witness(int i, int j) const {
    if (auto it = witness_.find({i, j}); it != witness_.end()) return it->second;
    if (auto it = witness_.find({j, i}); it != witness_.end()) return invert_(it->second);
    throw std::out_of_range("link: pair not matched");
  }

  std::size_t pair_count() const { return witness_.size(); }

  std::set<int> external() const {
    std::set<int> out;
    for (int i : carrier_)
      if (!partner_.count(i)) out.insert(i);
    return out;
  }
  bool closed() const { return external().empty(); }

 private:
  std::set<int> carrier_;
  Invert invert_;
  std::map<int, int> partner_;
  std::map<std::pair<int, int>, V> witness_;
};

}  // namespace hyper

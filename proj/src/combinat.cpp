#include "hypershell/combinat.hpp"

#include <algorithm>
#include <limits>

#include "hypershell/canon.hpp"

namespace hyper {

Tree::Tree(std::vector<Node> parent) : parent_(std::move(parent)) {
  const int n = static_cast<int>(parent_.size());
  if (n == 0) throw std::invalid_argument("tree: no nodes");
  children_.assign(n, {});
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    int p = parent_[v];
    if (p == -1) {
      ++roots;
      root_ = v;
    } else if (p < 0 || p >= n || p == v) {
      throw std::invalid_argument("tree: bad parent for node " + std::to_string(v));
    } else {
      children_[p].push_back(v);
    }
  }
  if (roots != 1) throw std::invalid_argument("tree: need exactly one root");
  depth_.assign(n, -1);
  depth_[root_] = 0;
  std::vector<Node> stack{root_};
  int seen = 0;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    ++seen;
    for (Node c : children_[v]) {
      depth_[c] = depth_[v] + 1;
      stack.push_back(c);
    }
  }
  if (seen != n) throw std::invalid_argument("tree: cycle or unreachable node");
}

std::optional<Tree::Node> Tree::parent(Node v) const {
  if (parent_.at(v) < 0) return std::nullopt;
  return parent_[v];
}

int Tree::height() const { return *std::max_element(depth_.begin(), depth_.end()); }

std::set<Tree::Node> Tree::layer(int k) const {
  std::set<Node> out;
  for (Node v = 0; v < static_cast<Node>(size()); ++v)
    if (depth_[v] == k) out.insert(v);
  return out;
}

std::set<Tree::Node> Tree::deep_layers(int i) const {
  std::set<Node> out;
  for (Node v = 0; v < static_cast<Node>(size()); ++v)
    if (depth_[v] >= i) out.insert(v);
  return out;
}

Tree Tree::subtree(Node x, std::vector<Node>* original) const {
  if (x < 0 || x >= static_cast<Node>(size())) throw std::out_of_range("tree: unknown node");
  std::vector<Node> order{x};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Node c : children_[order[i]]) order.push_back(c);
  std::vector<Node> index(size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<Node>(i);
  std::vector<Node> parent(order.size(), -1);
  for (std::size_t i = 1; i < order.size(); ++i) parent[i] = index[parent_[order[i]]];
  if (original) *original = order;
  return Tree(std::move(parent));
}

std::string tree_canonical_code(const Tree& t) {
  canon::ColoredTree g;
  g.parent = t.parents();
  g.color.assign(t.size(), std::string());
  return canon::canonicalize(g, std::numeric_limits<std::size_t>::max()).code;
}

}  // namespace hyper

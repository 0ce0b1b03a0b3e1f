#include "hypershell/canon.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyper::canon {
namespace {

constexpr int kNoJump = std::numeric_limits<int>::max();

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

int rank_compress(std::vector<int>& colors) {
  std::vector<int> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& c : colors)
    c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
  return static_cast<int>(sorted.size());
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  Search(const ColoredTree& g, std::vector<int> key_rank, std::string header)
      : g_(g), n_(static_cast<int>(g.parent.size())), key_rank_(std::move(key_rank)),
        header_(std::move(header)), children_(n_), adj_(n_) {
    for (int v = 0; v < n_; ++v)
      if (g.parent[v] >= 0) children_[g.parent[v]].push_back(v);
    for (const auto& [u, v, tag] : g.edges) {
      adj_[u].push_back({tag, v});
      adj_[v].push_back({tag, u});
    }
  }

  Canonical run() {
    std::vector<int> colors = key_rank_;
    rank_compress(colors);
    refine(colors);
    std::vector<int> prefix;
    explore(colors, prefix);
    return {best_code_, best_perm_};
  }

 private:
  int refine(std::vector<int>& colors) const {
    int cells = rank_compress(colors);
    std::vector<std::vector<long long>> sig(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        s.push_back(g_.parent[v] >= 0 ? colors[g_.parent[v]] : -1);
        std::vector<long long> kids;
        for (int c : children_[v]) kids.push_back(colors[c]);
        std::sort(kids.begin(), kids.end());
        s.push_back(static_cast<long long>(kids.size()));
        s.insert(s.end(), kids.begin(), kids.end());
        std::vector<long long> nb;
        for (const auto& [tag, u] : adj_[v])
          nb.push_back(static_cast<long long>(tag) * (static_cast<long long>(n_) + 1) + colors[u]);
        std::sort(nb.begin(), nb.end());
        s.push_back(static_cast<long long>(nb.size()));
        s.insert(s.end(), nb.begin(), nb.end());
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n_);
      int rank = -1;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      int next_cells = rank + 1;
      colors = std::move(next);
      if (next_cells == cells) return cells;
      cells = next_cells;
    }
  }

  std::string leaf_code(const std::vector<int>& pos) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[pos[v]] = v;
    std::string out = header_;
    put_u32(out, static_cast<std::uint32_t>(n_));
    for (int p = 0; p < n_; ++p) {
      int v = inv[p];
      put_u32(out, g_.parent[v] >= 0 ? static_cast<std::uint32_t>(pos[g_.parent[v]] + 1) : 0u);
      put_u32(out, static_cast<std::uint32_t>(key_rank_[v]));
    }
    std::vector<std::tuple<int, int, int>> es;
    es.reserve(g_.edges.size());
    for (const auto& [u, v, tag] : g_.edges) {
      int a = pos[u], b = pos[v];
      if (a > b) std::swap(a, b);
      es.emplace_back(a, b, tag);
    }
    std::sort(es.begin(), es.end());
    put_u32(out, static_cast<std::uint32_t>(es.size()));
    for (const auto& [a, b, tag] : es) {
      put_u32(out, static_cast<std::uint32_t>(a));
      put_u32(out, static_cast<std::uint32_t>(b));
      put_u32(out, static_cast<std::uint32_t>(tag));
    }
    return out;
  }

  // Automorphism mapping the node labeled by `to` onto the one labeled by `from`.
  std::vector<int> automorphism(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[from[v]] = v;
    std::vector<int> sigma(n_);
    for (int v = 0; v < n_; ++v) sigma[v] = inv[to[v]];
    return sigma;
  }

  std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    UnionFind uf(n_);
    for (const auto& a : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return a[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, a[v]);
    }
    std::vector<int> orbit(n_);
    for (int v = 0; v < n_; ++v) orbit[v] = uf.find(v);
    return orbit;
  }

  int divergence(const std::vector<int>& prefix) const {
    std::size_t l = 0;
    while (l < prefix.size() && l < first_prefix_.size() && prefix[l] == first_prefix_[l]) ++l;
    return static_cast<int>(l);
  }

  int explore(const std::vector<int>& colors, std::vector<int>& prefix) {
    int cells = 1 + *std::max_element(colors.begin(), colors.end());
    if (cells == n_) {
      std::string code = leaf_code(colors);
      if (!have_first_) {
        have_first_ = true;
        first_code_ = best_code_ = code;
        first_perm_ = best_perm_ = colors;
        first_prefix_ = prefix;
        return kNoJump;
      }
      if (code == first_code_) {
        autos_.push_back(automorphism(first_perm_, colors));
        return divergence(prefix);
      }
      if (code < best_code_) {
        best_code_ = std::move(code);
        best_perm_ = colors;
      } else if (code == best_code_) {
        autos_.push_back(automorphism(best_perm_, colors));
      }
      return kNoJump;
    }

    std::vector<int> count(cells, 0);
    for (int c : colors) ++count[c];
    int target = 0;
    while (count[target] < 2) ++target;
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (colors[v] == target) cell.push_back(v);

    const int level = static_cast<int>(prefix.size());
    std::vector<int> tried;
    for (int v : cell) {
      if (!tried.empty() && !autos_.empty()) {
        auto orbit = orbits_fixing(prefix);
        bool equivalent = std::any_of(tried.begin(), tried.end(),
                                      [&](int t) { return orbit[t] == orbit[v]; });
        if (equivalent) continue;
      }
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int u = 0; u < n_; ++u) next[u] = 2 * colors[u] + (u == v ? 0 : 1);
      refine(next);
      prefix.push_back(v);
      int jump = explore(next, prefix);
      prefix.pop_back();
      if (jump < level) return jump;
    }
    return kNoJump;
  }

  const ColoredTree& g_;
  int n_;
  std::vector<int> key_rank_;
  std::string header_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<std::pair<int, int>>> adj_;

  bool have_first_ = false;
  std::string first_code_, best_code_;
  std::vector<int> first_perm_, best_perm_, first_prefix_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

Canonical canonicalize(const ColoredTree& g, std::size_t budget) {
  const std::size_t n = g.parent.size();
  if (n == 0) throw std::invalid_argument("canonicalize: empty structure");
  if (g.color.size() != n) throw std::invalid_argument("canonicalize: color size mismatch");
  if (n > budget)
    throw std::length_error("canonical form refused: " + std::to_string(n) +
                            " nodes exceed budget " + std::to_string(budget));
  int roots = 0;
  for (int p : g.parent) {
    if (p == -1) ++roots;
    else if (p < 0 || static_cast<std::size_t>(p) >= n)
      throw std::invalid_argument("canonicalize: bad parent index");
  }
  if (roots != 1) throw std::invalid_argument("canonicalize: need exactly one root");

  std::map<std::string, int> keys;
  for (const auto& c : g.color) keys.emplace(c, 0);
  std::string header;
  put_u32(header, static_cast<std::uint32_t>(keys.size()));
  int r = 0;
  for (auto& [k, rank] : keys) {
    rank = r++;
    put_u32(header, static_cast<std::uint32_t>(k.size()));
    header += k;
  }
  std::vector<int> key_rank(n);
  for (std::size_t v = 0; v < n; ++v) key_rank[v] = keys.at(g.color[v]);

  Search search(g, std::move(key_rank), std::move(header));
  return search.run();
}

}  // namespace hyper::canon

#include "hypershell/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace hyper::fixtures {

Shell polygon(int k) {
  Shell s = arrow_chain(k);
  s.link.push_back({{k - 1, 1}, {0, 0}, {}});
  return s;
}

Shell arrow_chain(int k) {
  if (k < 1) throw std::invalid_argument("arrow_chain: need at least one arrow");
  Shell s;
  s.dim = 2;
  s.children.assign(k, points(2));
  for (int i = 0; i + 1 < k; ++i) s.link.push_back({{i, 1}, {i + 1, 0}, {}});
  return s;
}

Shell surface(const std::vector<std::vector<int>>& faces) {
  Shell s;
  s.dim = 3;
  // Edge (u, v) of a face, keyed by its unordered vertex pair.
  std::map<std::pair<int, int>, std::vector<std::pair<Position, int>>> edges;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& cyc = faces[f];
    const int k = static_cast<int>(cyc.size());
    s.children.push_back(polygon(k));
    for (int e = 0; e < k; ++e) {
      int u = cyc[e], v = cyc[(e + 1) % k];
      edges[{std::min(u, v), std::max(u, v)}].push_back({{f, e}, u});
    }
  }
  for (auto& [key, uses] : edges) {
    if (uses.size() == 1) continue;
    if (uses.size() != 2) throw std::invalid_argument("surface: edge shared by more than two faces");
    // Points are ordered source, target; the witness matches equal vertices.
    bool same = uses[0].second == uses[1].second;
    ShellIso w{same ? std::vector<int>{0, 1} : std::vector<int>{1, 0}, {{}, {}}};
    s.link.push_back({uses[0].first, uses[1].first, w});
  }
  return s;
}

Shell tetrahedron() { return surface({{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}); }

Shell open_triangle_fan() { return surface({{0, 3, 1}, {1, 3, 2}, {2, 3, 0}}); }

Frame point_frame(const std::vector<std::string>& labels) {
  Frame f;
  f.shell = points(static_cast<int>(labels.size()));
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) f.labels[{i}] = labels[i];
  return f;
}

Hypergraph three_arrow_hypergraph() {
  LabelSet ls;
  ls.add("A", 0, "F");
  ls.add("B", 0, "D");
  ls.add("C", 0, "E");
  for (const char* a : {"f", "g", "h"}) ls.add_pair(a, 1);
  Hypergraph h(1, ls);
  h.set_boundary("f", point_frame({"A", "B"}));
  h.set_boundary("g", point_frame({"D", "C"}));
  h.set_boundary("h", point_frame({"E", "F"}));
  return h;
}

PastingDiagram three_arrow_pd() {
  PastingDiagram pd;
  pd.shell = arrow_chain(3);
  const char* arrows[] = {"f", "g", "h"};
  const char* ends[][2] = {{"A", "B"}, {"D", "C"}, {"E", "F"}};
  for (int i = 0; i < 3; ++i) {
    pd.labels[{i}] = arrows[i];
    pd.labels[{i, 0}] = ends[i][0];
    pd.labels[{i, 1}] = ends[i][1];
  }
  return pd;
}

Hypergraph arrow_prototype() {
  LabelSet ls;
  ls.add_pair("a", 0);
  ls.add_pair("b", 1);
  Hypergraph h(1, ls);
  h.set_boundary("b", point_frame({"a*", "a"}));
  return h;
}

}  // namespace hyper::fixtures

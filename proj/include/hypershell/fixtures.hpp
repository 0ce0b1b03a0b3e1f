#pragma once

#include <string>
#include <vector>

#include "hypershell/hypergraph.hpp"
#include "hypershell/shell.hpp"

namespace hyper::fixtures {

/// Closed 2-shell of k arrows glued head to tail in a cycle. Each arrow is a
/// 1-shell whose point 0 is its source and point 1 its target.
Shell polygon(int k);

/// Open 2-shell of k composable arrows; only the inner endpoints are glued.
Shell arrow_chain(int k);

/// 3-shell glued from polygonal faces, each given as a cycle of vertex ids.
/// Face edges shared by two faces are glued so that vertices correspond;
/// edges used once stay external.
Shell surface(const std::vector<std::vector<int>>& faces);

/// The four triangles of a tetrahedron, closed.
Shell tetrahedron();

/// Three triangles around a common vertex, glued pairwise; six external
/// depth-3 components.
Shell open_triangle_fan();

/// 1-frame with one point per label.
Frame point_frame(const std::vector<std::string>& labels);

/// Three arrows f:(A,B), g:(D,C), h:(E,F) with A*=F, B*=D, C*=E, as a
/// 1-hypergraph.
Hypergraph three_arrow_hypergraph();
/// f, g, h pasted along B-D and C-E; A and F stay external.
PastingDiagram three_arrow_pd();

/// Objects a, a* and arrows b, b* with boundary (a*, a).
Hypergraph arrow_prototype();

}  // namespace hyper::fixtures

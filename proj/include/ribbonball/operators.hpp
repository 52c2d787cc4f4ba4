#pragma once

#include <vector>

#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

// Builds an orientable closed map from polygons given as vertex cycles, all
// oriented coherently. Every directed edge (u, v) must occur in exactly one
// polygon and its reverse in exactly one other. The dart of polygon p at
// position i runs from faces[p][i] to faces[p][i+1], and the darts of each
// polygon form one phi-orbit, so polygon p is face p in trace order.
// `face_colors` is empty or has one entry per polygon.
RibbonGraph map_from_faces(int num_vertices, const std::vector<std::vector<int>>& faces, Role role = Role::plain,
                           const std::vector<Color>& face_colors = {});

// For an untwisted map whose vertices are distinct sigma-orbits: the tail
// vertex index of each dart of each face, in trace order.
std::vector<std::vector<int>> face_vertex_cycles(const RibbonGraph& g);

// Medial map: one 4-valent vertex per edge, one edge per corner. Faces coming
// from vertices of g are black, faces coming from faces of g are white
// (swapped when `swap_colors`). Dart 2x is the corner edge leaving the
// midpoint of edge(x); dart 2x+1 arrives at the midpoint of edge(sigma x).
RibbonGraph medial(const RibbonGraph& g, bool swap_colors = false);

// Truncates the given vertices. Each truncated vertex becomes a black face,
// all other faces are white. Darts of g keep their ids.
RibbonGraph truncate(const RibbonGraph& g, const std::vector<int>& vertices);
RibbonGraph truncate_all(const RibbonGraph& g);

}  // namespace ribbonball

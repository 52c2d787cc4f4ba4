#pragma once

#include <optional>
#include <vector>

#include "ribbonball/covers.hpp"
#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

// Regluing of two edges {a, alpha a} and {b, alpha b} into {a, alpha b} and
// {b, alpha a}. The tails of a and b must have the same color, and so must the
// heads, so both edges have the same color type. Applying the same call twice
// restores the input.
RibbonGraph cross_join(const RibbonGraph& g, Dart a, Dart b);

// Edge-indexed variant: a is the smallest dart of e1, b the dart of e2 whose
// tail color matches (smallest first).
RibbonGraph cross_join_edges(const RibbonGraph& g, int e1, int e2);

// Replaces the rotation at `vertex` by the cyclic sequence `order`, which must
// be a permutation of the vertex's darts.
RibbonGraph reorder_black(const RibbonGraph& g, int vertex, const std::vector<Dart>& order);

// At every white vertex e1..e6 (e1, e3, e5 leading to black vertices) the
// rotation becomes e1, e4, e3, e6, e5, e2. Order 3, dart for dart.
RibbonGraph rotate_whites(const RibbonGraph& g);

// Toggles the twist of one edge.
RibbonGraph half_twist(const RibbonGraph& g, int edge);

// An involution f with f(sigma d) = sigma^-1 f(d), f(alpha d) = alpha f(d),
// preserving colors and fixing no vertex, edge or face. The first one in order
// of the image of dart 0 is returned.
std::optional<std::vector<Dart>> find_antipodal_involution(const RibbonGraph& g);

// Quotient of an untwisted graph by a free orientation-reversing involution.
RibbonGraph quotient_by_involution(const RibbonGraph& g, const std::vector<Dart>& f);

// Quotient of gamma0() by its antipodal involution. Throws if none is found.
RibbonGraph antipodal_quotient();

struct DoubleCover {
  RibbonGraph graph;
  CoveringMap projection;
  // True when the input was orientable; the cover is then two copies.
  bool disconnected = false;
};

// Dart (d, s) gets id d + s * N for s in {0 (+), 1 (-)}.
DoubleCover orientation_double_cover(const RibbonGraph& g);

}  // namespace ribbonball

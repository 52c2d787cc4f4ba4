#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

// Certificate of a connected graph: the lexicographically smallest code over
// all starting darts of a breadth-first relabeling along sigma and alpha.
// Equal certificates <=> isomorphic (color-, role-, sigma-, alpha- and
// twist-preserving). Mirror images are NOT identified; compare against
// reflect(g) for that. Throws Error for disconnected input.
std::string canonical_form(const RibbonGraph& g);

// A dart bijection g -> h commuting with sigma and alpha and preserving colors
// and twists, or nullopt. Throws Error for disconnected input.
std::optional<std::vector<Dart>> is_isomorphic(const RibbonGraph& g, const RibbonGraph& h);

// Isomorphic to h or to its mirror image.
bool is_isomorphic_up_to_mirror(const RibbonGraph& g, const RibbonGraph& h);

// Renames darts: dart d of g becomes perm[d].
RibbonGraph relabel(const RibbonGraph& g, const std::vector<Dart>& perm);

}  // namespace ribbonball

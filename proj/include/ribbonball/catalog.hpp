#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

enum class Solid { tetrahedron, cube, dodecahedron, octahedron, icosahedron };

std::optional<Solid> parse_solid(std::string_view name);
std::string_view to_string(Solid s);

// Plain (uncolored) maps of the Platonic solids.
RibbonGraph platonic(Solid s);

// Two poles joined by k meridians; k bigon faces. Vertex 0 is the north pole.
RibbonGraph american_football(int k);

// One row of the classification table. Rows 11, 15, 16 and 17 are families
// in k; for them `k` holds the parameter (>= 3), for all other rows it is 0.
struct RowInfo {
  int row;
  int k;  // 0 for a family row
  int m;
  int n;
  std::string_view name;
  bool family() const { return k == 0; }
};

const std::vector<RowInfo>& catalog_rows();
const RowInfo& row_info(int row);

struct CatalogId {
  int row = 10;
  int k = 0;  // family parameter; ignored for sporadic rows
  friend bool operator==(const CatalogId&, const CatalogId&) = default;
};

// Throws Error for unknown rows or a family row with k < 3.
PatternType pattern_type(const CatalogId& id);

// A colored pattern realizing the row with the table's (b, w), on the sphere.
RibbonGraph minimal_realization(const CatalogId& id);

// Dual of the truncated icosahedron: the standard football graph.
RibbonGraph gamma0();

// Octahedron with two opposite faces black and the others white; realizes
// (3,3,3) without being a branched cover of the minimal realization.
RibbonGraph painted_octahedron();

// Pattern constructions, exposed for tests and the CLI.
RibbonGraph variation(const RibbonGraph& solid);
RibbonGraph subdivision(const RibbonGraph& solid);
RibbonGraph double_tin_can(int k);
RibbonGraph zigzag_tin_can(int k);

}  // namespace ribbonball

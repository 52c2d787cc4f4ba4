#include "ribbonball/catalog.hpp"

#include <queue>

#include "ribbonball/operators.hpp"

namespace ribbonball {

namespace {

// Polygons of the three base solids, listed with a coherent orientation.
const std::vector<std::vector<int>> kTetrahedronFaces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};

const std::vector<std::vector<int>> kCubeFaces = {
    {0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5},
};

const std::vector<std::vector<int>> kDodecahedronFaces = {
    {7, 19, 5, 11, 17},  {15, 9, 1, 11, 5},  {19, 16, 4, 15, 5}, {14, 8, 4, 16, 6},
    {18, 12, 2, 14, 6},  {7, 18, 6, 16, 19}, {13, 10, 2, 12, 3}, {17, 11, 1, 13, 3},
    {7, 17, 3, 12, 18},  {1, 9, 0, 10, 13},  {2, 10, 0, 8, 14},  {4, 8, 0, 9, 15},
};

const std::vector<RowInfo> kRows = {
    {1, 3, 3, 1, "octahedron"},
    {2, 3, 4, 1, "cuboctahedron"},
    {3, 4, 3, 1, "cuboctahedron"},
    {4, 3, 5, 1, "icosidodecahedron"},
    {5, 5, 3, 1, "icosidodecahedron"},
    {6, 3, 3, 2, "truncated tetrahedron"},
    {7, 3, 4, 2, "truncated cube"},
    {8, 4, 3, 2, "truncated octahedron"},
    {9, 3, 5, 2, "truncated dodecahedron"},
    {10, 5, 3, 2, "truncated icosahedron = football"},
    {11, 0, 2, 2, "truncated American football"},
    {12, 3, 2, 3, "variation on the tetrahedron"},
    {13, 4, 2, 3, "variation on the cube"},
    {14, 5, 2, 3, "variation on the dodecahedron"},
    {15, 0, 1, 3, "partially truncated American football"},
    {16, 0, 1, 4, "double tin can"},
    {17, 0, 1, 5, "zigzag tin can"},
    {18, 3, 1, 6, "subdivision of the tetrahedron"},
    {19, 4, 1, 6, "subdivision of the cube"},
    {20, 5, 1, 6, "subdivision of the dodecahedron"},
};

int mod(int a, int n) { return ((a % n) + n) % n; }

void require_k(int k) {
  if (k < 3) throw Error("family parameter k must be at least 3, got " + std::to_string(k));
}

}  // namespace

std::optional<Solid> parse_solid(std::string_view name) {
  if (name == "tetrahedron") return Solid::tetrahedron;
  if (name == "cube") return Solid::cube;
  if (name == "dodecahedron") return Solid::dodecahedron;
  if (name == "octahedron") return Solid::octahedron;
  if (name == "icosahedron") return Solid::icosahedron;
  return std::nullopt;
}

std::string_view to_string(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return "tetrahedron";
    case Solid::cube: return "cube";
    case Solid::dodecahedron: return "dodecahedron";
    case Solid::octahedron: return "octahedron";
    case Solid::icosahedron: return "icosahedron";
  }
  return "?";
}

RibbonGraph platonic(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return map_from_faces(4, kTetrahedronFaces);
    case Solid::cube: return map_from_faces(8, kCubeFaces);
    case Solid::dodecahedron: return map_from_faces(20, kDodecahedronFaces);
    case Solid::octahedron: return dual(platonic(Solid::cube));
    case Solid::icosahedron: return dual(platonic(Solid::dodecahedron));
  }
  throw Error("unknown solid");
}

RibbonGraph american_football(int k) {
  require_k(k);
  std::vector<Dart> north(k), south(k);
  std::vector<std::pair<Dart, Dart>> edges;
  for (int i = 0; i < k; ++i) {
    north[i] = i;
    south[i] = 2 * k - 1 - i;
    edges.emplace_back(i, k + i);
  }
  return from_rotations({north, south}, edges);
}

const std::vector<RowInfo>& catalog_rows() { return kRows; }

const RowInfo& row_info(int row) {
  if (row < 1 || row > static_cast<int>(kRows.size())) throw Error("unknown table row " + std::to_string(row));
  return kRows[row - 1];
}

PatternType pattern_type(const CatalogId& id) {
  const RowInfo& r = row_info(id.row);
  int k = r.k;
  if (r.family()) {
    require_k(id.k);
    k = id.k;
  }
  return PatternType(k, r.m * r.n, r.n);
}

RibbonGraph variation(const RibbonGraph& solid) {
  const auto cycles = face_vertex_cycles(solid);
  const int base = solid.num_vertices();
  std::vector<int> inner_start(cycles.size());
  int next = base;
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    inner_start[f] = next;
    next += static_cast<int>(cycles[f].size());
  }
  // Locate the face and position of every directed edge.
  const auto s = trace_faces(solid);
  std::vector<std::pair<int, int>> where(solid.num_darts());
  for (int f = 0; f < s.F; ++f) {
    for (int i = 0; i < s.faces[f].length(); ++i) where[s.faces[f].darts[i]] = {f, i};
  }
  std::vector<std::vector<int>> polys;
  std::vector<Color> colors;
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    std::vector<int> inner(cycles[f].size());
    for (std::size_t i = 0; i < inner.size(); ++i) inner[i] = inner_start[f] + static_cast<int>(i);
    polys.push_back(inner);
    colors.push_back(Color::black);
  }
  for (int e = 0; e < solid.num_edges(); ++e) {
    const Dart d = solid.edge_dart(e);
    const auto [f, i] = where[d];
    const auto [g, a] = where[solid.alpha(d)];
    const int k = static_cast<int>(cycles[f].size()), kk = static_cast<int>(cycles[g].size());
    const int ci = cycles[f][i], cn = cycles[f][mod(i + 1, k)];
    auto v = [&](int face, int len, int pos) { return inner_start[face] + mod(pos, len); };
    polys.push_back({ci, v(g, kk, a + 1), v(g, kk, a), cn, v(f, k, i + 1), v(f, k, i)});
    colors.push_back(Color::white);
  }
  return map_from_faces(next, polys, Role::pattern, colors);
}

RibbonGraph subdivision(const RibbonGraph& solid) {
  const auto s = trace_faces(solid);
  const int base = solid.num_vertices();
  const int n = solid.num_darts();
  // Point on the edge of dart d next to its tail: base + d.
  int next = base + n;
  std::vector<std::vector<int>> polys;
  std::vector<Color> colors;
  for (const auto& face : s.faces) {
    const int k = face.length();
    const int inner = next;
    next += k;
    std::vector<int> ring(k);
    for (int i = 0; i < k; ++i) ring[i] = inner + i;
    polys.push_back(ring);
    colors.push_back(Color::black);
    for (int i = 0; i < k; ++i) {
      const Dart here = face.darts[i];
      const Dart prev = face.darts[mod(i - 1, k)];
      const int corner = solid.vertex_of(here);
      const int a_i = base + here;
      const int b_i = base + solid.alpha(here);
      const int b_prev = base + solid.alpha(prev);
      polys.push_back({b_prev, corner, a_i, b_i, inner + i, inner + mod(i - 1, k)});
      colors.push_back(Color::white);
    }
  }
  return map_from_faces(next, polys, Role::pattern, colors);
}

RibbonGraph double_tin_can(int k) {
  require_k(k);
  auto t = [k](int i) { return mod(i, k); };
  auto m = [k](int i) { return k + mod(i, k); };
  auto b = [k](int i) { return 2 * k + mod(i, k); };
  std::vector<std::vector<int>> polys;
  std::vector<Color> colors;
  std::vector<int> top, bottom;
  for (int i = k - 1; i >= 0; --i) top.push_back(t(i));
  for (int i = 0; i < k; ++i) bottom.push_back(b(i));
  polys.push_back(top);
  colors.push_back(Color::black);
  polys.push_back(bottom);
  colors.push_back(Color::black);
  for (int i = 0; i < k; ++i) {
    polys.push_back({t(i), t(i + 1), m(i + 1), m(i)});
    polys.push_back({b(i + 1), b(i), m(i), m(i + 1)});
    colors.push_back(Color::white);
    colors.push_back(Color::white);
  }
  return map_from_faces(3 * k, polys, Role::pattern, colors);
}

RibbonGraph zigzag_tin_can(int k) {
  require_k(k);
  // Top ring t_i, x_i, z_i; bottom ring t'_i whose zigzag is glued with
  // x'_i = z_{i-1} and z'_i = x_i.
  auto t = [k](int i) { return mod(i, k); };
  auto x = [k](int i) { return k + mod(i, k); };
  auto z = [k](int i) { return 2 * k + mod(i, k); };
  auto tb = [k](int i) { return 3 * k + mod(i, k); };
  std::vector<std::vector<int>> polys;
  std::vector<Color> colors;
  std::vector<int> top, bottom;
  for (int i = k - 1; i >= 0; --i) top.push_back(t(i));
  for (int i = 0; i < k; ++i) bottom.push_back(tb(i));
  polys.push_back(top);
  colors.push_back(Color::black);
  polys.push_back(bottom);
  colors.push_back(Color::black);
  for (int i = 0; i < k; ++i) {
    polys.push_back({t(i), t(i + 1), x(i + 1), z(i), x(i)});
    polys.push_back({z(i - 1), x(i), z(i), tb(i + 1), tb(i)});
    colors.push_back(Color::white);
    colors.push_back(Color::white);
  }
  return map_from_faces(4 * k, polys, Role::pattern, colors);
}

RibbonGraph minimal_realization(const CatalogId& id) {
  const RowInfo& info = row_info(id.row);
  if (info.family()) require_k(id.k);
  switch (id.row) {
    case 1: return medial(platonic(Solid::tetrahedron));
    case 2: return medial(platonic(Solid::cube));
    case 3: return medial(platonic(Solid::cube), true);
    case 4: return medial(platonic(Solid::dodecahedron));
    case 5: return medial(platonic(Solid::dodecahedron), true);
    case 6: return truncate_all(platonic(Solid::tetrahedron));
    case 7: return truncate_all(platonic(Solid::cube));
    case 8: return truncate_all(platonic(Solid::octahedron));
    case 9: return truncate_all(platonic(Solid::dodecahedron));
    case 10: return truncate_all(platonic(Solid::icosahedron));
    case 11: return truncate_all(american_football(id.k));
    case 12: return variation(platonic(Solid::tetrahedron));
    case 13: return variation(platonic(Solid::cube));
    case 14: return variation(platonic(Solid::dodecahedron));
    case 15: return truncate(american_football(id.k), {0});
    case 16: return double_tin_can(id.k);
    case 17: return zigzag_tin_can(id.k);
    case 18: return subdivision(platonic(Solid::tetrahedron));
    case 19: return subdivision(platonic(Solid::cube));
    case 20: return subdivision(platonic(Solid::dodecahedron));
    default: break;
  }
  throw Error("unknown table row " + std::to_string(id.row));
}

RibbonGraph gamma0() { return dual(minimal_realization({10, 0})); }

RibbonGraph painted_octahedron() {
  const RibbonGraph cube = platonic(Solid::cube);
  // The vertex at distance 3 from vertex 0 is its antipode.
  std::vector<int> dist(cube.num_vertices(), -1);
  std::queue<int> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (Dart d : cube.vertex_darts(v)) {
      const int u = cube.vertex_of(cube.alpha(d));
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  std::vector<Color> colors(cube.num_vertices(), Color::white);
  for (int v = 0; v < cube.num_vertices(); ++v) {
    if (dist[v] == 0 || dist[v] == 3) colors[v] = Color::black;
  }
  return dual(recolor_vertices(cube, colors)).with_role(Role::pattern);
}

}  // namespace ribbonball

#include "ribbonball/operators.hpp"

#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace ribbonball {

RibbonGraph map_from_faces(int num_vertices, const std::vector<std::vector<int>>& faces, Role role,
                           const std::vector<Color>& face_colors) {
  if (!face_colors.empty() && face_colors.size() != faces.size()) throw Error("one color per polygon required");
  std::vector<Dart> phi;
  std::vector<int> tail;
  std::vector<Color> fc;
  std::map<std::pair<int, int>, Dart> directed;
  for (std::size_t p = 0; p < faces.size(); ++p) {
    const auto& poly = faces[p];
    if (poly.size() < 2) throw Error("polygon " + std::to_string(p) + " has fewer than two corners");
    const Dart first = static_cast<Dart>(phi.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const int u = poly[i], v = poly[(i + 1) % poly.size()];
      if (u < 0 || u >= num_vertices) throw Error("polygon " + std::to_string(p) + " uses an unknown vertex");
      const Dart d = static_cast<Dart>(phi.size());
      if (!directed.emplace(std::pair{u, v}, d).second)
        throw Error("directed edge " + std::to_string(u) + "->" + std::to_string(v) + " occurs twice");
      phi.push_back(i + 1 == poly.size() ? first : d + 1);
      tail.push_back(u);
      fc.push_back(face_colors.empty() ? Color::none : face_colors[p]);
    }
  }
  const int n = static_cast<int>(phi.size());
  std::vector<Dart> alpha(n), sigma(n);
  for (const auto& [uv, d] : directed) {
    const auto it = directed.find({uv.second, uv.first});
    if (it == directed.end())
      throw Error("directed edge " + std::to_string(uv.first) + "->" + std::to_string(uv.second) + " has no reverse");
    alpha[d] = it->second;
  }
  for (Dart d = 0; d < n; ++d) sigma[d] = phi[alpha[d]];
  RibbonGraph g(std::move(sigma), std::move(alpha), role, {}, {}, std::move(fc));
  std::set<int> used(tail.begin(), tail.end());
  if (g.num_vertices() != static_cast<int>(used.size()))
    throw Error("polygons do not close up to a surface around every vertex");
  return g;
}

std::vector<std::vector<int>> face_vertex_cycles(const RibbonGraph& g) {
  if (g.has_twists()) throw Error("face cycles need an untwisted map");
  const auto s = trace_faces(g);
  std::vector<std::vector<int>> out;
  out.reserve(s.faces.size());
  for (const auto& f : s.faces) {
    std::vector<int> cyc;
    for (Dart d : f.darts) cyc.push_back(g.vertex_of(d));
    out.push_back(std::move(cyc));
  }
  return out;
}

RibbonGraph medial(const RibbonGraph& g, bool swap_colors) {
  if (g.has_twists()) throw Error("medial implemented for orientable maps only");
  const int n = g.num_darts();
  std::vector<Dart> sigma(2 * n), alpha(2 * n);
  std::vector<Color> fc(2 * n);
  const Color from_vertex = swap_colors ? Color::white : Color::black;
  for (Dart x = 0; x < n; ++x) {
    sigma[2 * x] = 2 * g.sigma_inv(x) + 1;
    sigma[2 * x + 1] = 2 * g.alpha(g.sigma(x));
    alpha[2 * x] = 2 * x + 1;
    alpha[2 * x + 1] = 2 * x;
    fc[2 * x] = swapped(from_vertex);
    fc[2 * x + 1] = from_vertex;
  }
  return RibbonGraph(std::move(sigma), std::move(alpha), Role::pattern, {}, {}, std::move(fc));
}

RibbonGraph truncate(const RibbonGraph& g, const std::vector<int>& vertices) {
  if (g.has_twists()) throw Error("truncation implemented for orientable maps only");
  const int n = g.num_darts();
  std::vector<char> cut(g.num_vertices(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.num_vertices()) throw Error("unknown vertex " + std::to_string(v));
    if (g.valence(v) < 3) throw Error("cannot truncate vertex " + std::to_string(v) + " of valence < 3");
    cut[v] = 1;
  }
  // p(d) leads toward the corner of sigma(d), q(d) toward sigma^-1(d).
  std::vector<Dart> slot(n, -1);
  int extra = 0;
  for (Dart d = 0; d < n; ++d) {
    if (cut[g.vertex_of(d)]) slot[d] = n + 2 * extra++;
  }
  const int total = n + 2 * extra;
  std::vector<Dart> sigma(total), alpha(total);
  std::vector<Color> fc(total, Color::white);
  for (Dart d = 0; d < n; ++d) {
    alpha[d] = g.alpha(d);
    if (slot[d] < 0) {
      sigma[d] = g.sigma(d);
      continue;
    }
    const Dart p = slot[d], q = slot[d] + 1;
    sigma[d] = p;
    sigma[p] = q;
    sigma[q] = d;
    alpha[p] = slot[g.sigma(d)] + 1;
    alpha[slot[g.sigma(d)] + 1] = p;
    fc[q] = Color::black;
  }
  return RibbonGraph(std::move(sigma), std::move(alpha), Role::pattern, {}, {}, std::move(fc));
}

RibbonGraph truncate_all(const RibbonGraph& g) {
  std::vector<int> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return truncate(g, all);
}

}  // namespace ribbonball

#include "ribbonball/surgery.hpp"

#include <algorithm>

#include "ribbonball/catalog.hpp"

namespace ribbonball {

namespace {

void check_dart(const RibbonGraph& g, Dart d) {
  if (d < 0 || d >= g.num_darts()) throw Error("dart " + std::to_string(d) + " out of range");
}

// Face colors are dropped: surgeries act on vertex-colored (dual) graphs.
RibbonGraph rebuild(const RibbonGraph& g, std::vector<Dart> sigma, std::vector<Dart> alpha, std::vector<bool> twist) {
  return RibbonGraph(std::move(sigma), std::move(alpha), g.role(), std::move(twist), g.vertex_colors());
}

}  // namespace

RibbonGraph cross_join(const RibbonGraph& g, Dart a, Dart b) {
  check_dart(g, a);
  check_dart(g, b);
  if (g.edge_of(a) == g.edge_of(b)) throw Error("cross_join needs two distinct edges");
  const Dart abar = g.alpha(a), bbar = g.alpha(b);
  if (g.vertex_color(a) != g.vertex_color(b) || g.vertex_color(abar) != g.vertex_color(bbar))
    throw Error("cross_join needs edges of the same color type");
  if (g.twisted(a) || g.twisted(b)) throw Error("cross_join needs untwisted edges");
  auto alpha = g.alpha_perm();
  alpha[a] = bbar;
  alpha[bbar] = a;
  alpha[b] = abar;
  alpha[abar] = b;
  return rebuild(g, g.sigma_perm(), std::move(alpha), g.twist_flags());
}

RibbonGraph cross_join_edges(const RibbonGraph& g, int e1, int e2) {
  if (e1 < 0 || e1 >= g.num_edges() || e2 < 0 || e2 >= g.num_edges()) throw Error("edge out of range");
  const Dart a = g.edge_dart(e1);
  Dart b = g.edge_dart(e2);
  if (g.vertex_color(b) != g.vertex_color(a)) b = g.alpha(b);
  return cross_join(g, a, b);
}

RibbonGraph reorder_black(const RibbonGraph& g, int vertex, const std::vector<Dart>& order) {
  if (vertex < 0 || vertex >= g.num_vertices()) throw Error("vertex out of range");
  auto darts = g.vertex_darts(vertex);
  std::vector<Dart> have(darts.begin(), darts.end()), want = order;
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  if (have != want) throw Error("order is not a permutation of the darts of vertex " + std::to_string(vertex));
  auto sigma = g.sigma_perm();
  for (std::size_t i = 0; i < order.size(); ++i) sigma[order[i]] = order[(i + 1) % order.size()];
  return rebuild(g, std::move(sigma), g.alpha_perm(), g.twist_flags());
}

RibbonGraph rotate_whites(const RibbonGraph& g) {
  auto sigma = g.sigma_perm();
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.color_of_vertex(v) != Color::white) continue;
    auto ds = g.vertex_darts(v);
    if (ds.size() != 6) throw Error("white vertex " + std::to_string(v) + " does not have valence 6");
    auto to_black = [&](std::size_t i) { return g.vertex_color(g.alpha(ds[i % 6])) == Color::black; };
    std::size_t off = 0;
    while (off < 2 && !(to_black(off) && to_black(off + 2) && to_black(off + 4) && !to_black(off + 1) &&
                        !to_black(off + 3) && !to_black(off + 5)))
      ++off;
    if (off == 2) throw Error("white vertex " + std::to_string(v) + " does not alternate");
    Dart e[6];
    for (int i = 0; i < 6; ++i) e[i] = ds[(off + i) % 6];
    const Dart order[6] = {e[0], e[3], e[2], e[5], e[4], e[1]};
    for (int i = 0; i < 6; ++i) sigma[order[i]] = order[(i + 1) % 6];
  }
  return rebuild(g, std::move(sigma), g.alpha_perm(), g.twist_flags());
}

RibbonGraph half_twist(const RibbonGraph& g, int edge) {
  if (edge < 0 || edge >= g.num_edges()) throw Error("edge out of range");
  auto twist = g.twist_flags();
  const Dart d = g.edge_dart(edge);
  twist[d] = twist[g.alpha(d)] = !twist[d];
  return rebuild(g, g.sigma_perm(), g.alpha_perm(), std::move(twist));
}

std::optional<std::vector<Dart>> find_antipodal_involution(const RibbonGraph& g) {
  if (g.has_twists()) throw Error("antipodal search needs an untwisted graph");
  const int n = g.num_darts();
  const auto s = trace_faces(g);
  std::vector<Dart> f(n);
  for (Dart image = 0; image < n; ++image) {
    std::fill(f.begin(), f.end(), -1);
    f[0] = image;
    std::vector<Dart> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      const Dart x = stack.back();
      stack.pop_back();
      for (auto [xs, ys] : {std::pair{g.sigma(x), g.sigma_inv(f[x])}, std::pair{g.alpha(x), g.alpha(f[x])}}) {
        if (f[xs] < 0) {
          f[xs] = ys;
          stack.push_back(xs);
        } else if (f[xs] != ys) {
          ok = false;
          break;
        }
      }
    }
    for (Dart d = 0; ok && d < n; ++d) {
      const Dart y = f[d];
      ok = y >= 0 && f[y] == d && y != d && y != g.alpha(d) && g.vertex_of(y) != g.vertex_of(d) &&
           g.vertex_color(y) == g.vertex_color(d) && s.face_of(g.alpha(y)) != s.face_of(d) &&
           s.faces[s.face_of(g.alpha(y))].color == s.faces[s.face_of(d)].color;
    }
    if (ok) return f;
  }
  return std::nullopt;
}

RibbonGraph quotient_by_involution(const RibbonGraph& g, const std::vector<Dart>& f) {
  const int n = g.num_darts();
  if (static_cast<int>(f.size()) != n) throw Error("involution has wrong size");
  std::vector<Dart> id(n, -1);
  int count = 0;
  for (Dart d = 0; d < n; ++d) {
    const int v = g.vertex_of(d);
    if (v < g.vertex_of(f[d])) id[d] = count++;
    else if (v == g.vertex_of(f[d])) throw Error("involution fixes vertex " + std::to_string(v));
  }
  std::vector<Dart> sigma(count), alpha(count);
  std::vector<bool> twist(count);
  std::vector<Color> vc(count);
  for (Dart d = 0; d < n; ++d) {
    if (id[d] < 0) continue;
    sigma[id[d]] = id[g.sigma(d)];
    const Dart a = g.alpha(d);
    if (id[a] >= 0) {
      alpha[id[d]] = id[a];
    } else {
      alpha[id[d]] = id[f[a]];
      twist[id[d]] = true;
    }
    vc[id[d]] = g.vertex_color(d);
  }
  return RibbonGraph(std::move(sigma), std::move(alpha), g.role(), std::move(twist), std::move(vc));
}

RibbonGraph antipodal_quotient() {
  const RibbonGraph g = gamma0();
  const auto f = find_antipodal_involution(g);
  if (!f) throw Error("no free antipodal involution found on the standard football graph");
  return quotient_by_involution(g, *f);
}

DoubleCover orientation_double_cover(const RibbonGraph& g) {
  const int n = g.num_darts();
  const auto s = trace_faces(g);
  std::vector<Dart> sigma(2 * n), alpha(2 * n), map(2 * n);
  std::vector<bool> reversed(2 * n);
  std::vector<Color> vc(2 * n), fc(2 * n);
  for (int side = 0; side < 2; ++side) {
    for (Dart d = 0; d < n; ++d) {
      const Dart x = d + side * n;
      sigma[x] = (side == 0 ? g.sigma(d) : g.sigma_inv(d)) + side * n;
      alpha[x] = g.alpha(d) + (side ^ (g.twisted(d) ? 1 : 0)) * n;
      map[x] = d;
      reversed[x] = side == 1;
      vc[x] = g.vertex_color(d);
      fc[x] = s.faces[s.face_of(d, side == 0)].color;
    }
  }
  DoubleCover out;
  out.graph = RibbonGraph(std::move(sigma), std::move(alpha), g.role(), {}, std::move(vc), std::move(fc));
  out.disconnected = !is_connected(out.graph);
  out.projection = make_covering(std::make_shared<const RibbonGraph>(out.graph), std::make_shared<const RibbonGraph>(g),
                                 std::move(map), std::move(reversed));
  return out;
}

}  // namespace ribbonball

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "detail.hpp"
#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

namespace detail {

// A state is (dart, side) with side 0 = (+), 1 = (-). One step crosses the
// edge of the dart, flips the side on twisted edges, and turns around the
// reached vertex with sigma on the (+) side, sigma^-1 on the (-) side.
TraceResult trace_states(const std::vector<Dart>& sigma, const std::vector<Dart>& sigma_inv,
                         const std::vector<Dart>& alpha, const std::vector<std::uint8_t>& twist) {
  const int n = static_cast<int>(sigma.size());
  TraceResult out;
  out.face_of_state.assign(2 * n, -1);
  auto step = [&](int state) {
    const Dart d = state / 2;
    const int side = (state % 2) ^ twist[d];
    const Dart a = alpha[d];
    return 2 * (side == 0 ? sigma[a] : sigma_inv[a]) + side;
  };
  auto mirror = [&](int state) {
    const Dart d = state / 2;
    return 2 * alpha[d] + ((state % 2) ^ twist[d] ^ 1);
  };
  // All (+) states first so that untwisted graphs yield the phi-orbits.
  for (int pass = 0; pass < 2; ++pass) {
    for (Dart d = 0; d < n; ++d) {
      const int start = 2 * d + pass;
      if (out.face_of_state[start] >= 0) continue;
      const int f = static_cast<int>(out.faces.size());
      Face face;
      int s = start;
      do {
        out.face_of_state[s] = f;
        face.darts.push_back(s / 2);
        face.reversed.push_back(s % 2 == 1);
        s = step(s);
      } while (s != start);
      for (std::size_t i = 0; i < face.darts.size(); ++i) {
        const int m = mirror(2 * face.darts[i] + (face.reversed[i] ? 1 : 0));
        if (out.face_of_state[m] == f) throw Error("face traversal meets its own mirror");
        out.face_of_state[m] = f;
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

}  // namespace detail

std::map<int, int> SurfaceSummary::length_profile() const {
  std::map<int, int> p;
  for (const auto& f : faces) ++p[f.length()];
  return p;
}

std::pair<std::vector<int>, int> dart_components(const RibbonGraph& g) {
  const int n = g.num_darts();
  std::vector<int> comp(n, -1);
  int count = 0;
  std::vector<Dart> stack;
  for (Dart s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Dart x = stack.back();
      stack.pop_back();
      for (Dart y : {g.sigma(x), g.alpha(x)}) {
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return {std::move(comp), count};
}

bool is_connected(const RibbonGraph& g) { return dart_components(g).second == 1; }

std::vector<Component> split_components(const RibbonGraph& g) {
  const auto [comp, count] = dart_components(g);
  std::vector<Component> out(count);
  std::vector<Dart> local(g.num_darts());
  for (Dart d = 0; d < g.num_darts(); ++d) {
    local[d] = static_cast<Dart>(out[comp[d]].original_dart.size());
    out[comp[d]].original_dart.push_back(d);
  }
  for (auto& c : out) {
    const auto n = c.original_dart.size();
    std::vector<Dart> sigma(n), alpha(n);
    std::vector<bool> twist(n);
    std::vector<Color> vc(n), fc(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Dart d = c.original_dart[i];
      sigma[i] = local[g.sigma(d)];
      alpha[i] = local[g.alpha(d)];
      twist[i] = g.twisted(d);
      vc[i] = g.vertex_color(d);
      fc[i] = g.face_color(d);
    }
    c.graph = RibbonGraph(std::move(sigma), std::move(alpha), g.role(), std::move(twist), std::move(vc), std::move(fc));
  }
  return out;
}

namespace {

// Local orientation bit per vertex such that the bits at the ends of an edge
// differ exactly when the edge is twisted. Empty when none exists.
std::optional<std::vector<int>> orientation_bits(const RibbonGraph& g) {
  std::vector<int> bit(g.num_vertices(), -1);
  for (int root = 0; root < g.num_vertices(); ++root) {
    if (bit[root] >= 0) continue;
    bit[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (Dart d : g.vertex_darts(v)) {
        const int u = g.vertex_of(g.alpha(d));
        const int want = bit[v] ^ (g.twisted(d) ? 1 : 0);
        if (bit[u] < 0) {
          bit[u] = want;
          q.push(u);
        } else if (bit[u] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return bit;
}

}  // namespace

bool is_orientable(const RibbonGraph& g) { return orientation_bits(g).has_value(); }

SurfaceSummary trace_faces(const RibbonGraph& g) {
  std::vector<std::uint8_t> tw(g.num_darts());
  for (Dart d = 0; d < g.num_darts(); ++d) tw[d] = g.twisted(d) ? 1 : 0;
  auto trace = detail::trace_states(g.sigma_perm(), detail::inverse(g.sigma_perm()), g.alpha_perm(), tw);

  SurfaceSummary s;
  s.V = g.num_vertices();
  s.E = g.num_edges();
  s.F = static_cast<int>(trace.faces.size());
  s.euler = s.V - s.E + s.F;
  s.orientable = is_orientable(g);
  s.components = dart_components(g).second;
  s.genus = s.orientable ? (2 * s.components - s.euler) / 2 : 2 * s.components - s.euler;
  s.faces = std::move(trace.faces);
  s.face_of_state = std::move(trace.face_of_state);
  for (Dart d = 0; d < g.num_darts(); ++d) s.faces[s.face_of(d)].color = g.face_color(d);
  if (g.role() == Role::dual) s.d_param = counts(g).d;
  return s;
}

RibbonGraph normalize_orientation(const RibbonGraph& g) {
  const auto bits = orientation_bits(g);
  if (!bits) throw Error("graph is not orientable");
  const auto s = trace_faces(g);
  const int n = g.num_darts();
  std::vector<Dart> sigma(n);
  std::vector<Color> fc(n);
  for (Dart d = 0; d < n; ++d) {
    const bool flip = (*bits)[g.vertex_of(d)] != 0;
    sigma[d] = flip ? g.sigma_inv(d) : g.sigma(d);
    fc[d] = s.faces[s.face_of(d, !flip)].color;
  }
  return RibbonGraph(std::move(sigma), g.alpha_perm(), g.role(), {}, g.vertex_colors(), std::move(fc));
}

RibbonGraph dual(const RibbonGraph& g0) {
  const RibbonGraph* gp = &g0;
  RibbonGraph normalized;
  if (g0.has_twists()) {
    if (!is_orientable(g0)) throw Error("duality implemented for orientable maps only");
    normalized = normalize_orientation(g0);
    gp = &normalized;
  }
  const RibbonGraph& g = *gp;
  std::vector<Dart> sigma(g.num_darts());
  for (Dart d = 0; d < g.num_darts(); ++d) sigma[d] = g.phi(d);
  Role role = g.role();
  if (role == Role::pattern) role = Role::dual;
  else if (role == Role::dual) role = Role::pattern;
  return RibbonGraph(std::move(sigma), g.alpha_perm(), role, {}, g.face_colors(), g.vertex_colors());
}

RibbonGraph reflect(const RibbonGraph& g) {
  const auto s = trace_faces(g);
  std::vector<Color> fc(g.num_darts());
  for (Dart d = 0; d < g.num_darts(); ++d) fc[d] = s.faces[s.face_of(d, false)].color;
  return RibbonGraph(detail::inverse(g.sigma_perm()), g.alpha_perm(), g.role(), g.twist_flags(), g.vertex_colors(),
                     std::move(fc));
}

ValidationReport validate(const RibbonGraph& input, const PatternType& t) {
  const RibbonGraph g = input.role() == Role::pattern ? dual(input) : input;
  ValidationReport report;
  auto add = [&](ViolationKind kind, int index, std::string msg) {
    report.violations.push_back({kind, index, std::move(msg)});
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.color_of_vertex(v) == Color::none) throw Error("vertex " + std::to_string(v) + " is uncolored");
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto darts = g.vertex_darts(v);
    const int val = static_cast<int>(darts.size());
    const std::string where = "vertex " + std::to_string(v);
    if (g.color_of_vertex(v) == Color::black) {
      if (val != t.k) add(ViolationKind::black_valence, v, where + ": black valence " + std::to_string(val) + " != k");
      for (Dart d : darts) {
        if (g.vertex_color(g.alpha(d)) != Color::white) {
          add(ViolationKind::black_neighbor, v, where + ": black vertex has a non-white neighbor");
          break;
        }
      }
      continue;
    }
    if (val != t.l) {
      add(ViolationKind::white_valence, v, where + ": white valence " + std::to_string(val) + " != l");
      continue;
    }
    bool some_offset = false;
    for (int offset = 0; offset < t.n && !some_offset; ++offset) {
      bool ok = true;
      for (int i = 0; i < val && ok; ++i) {
        const bool to_black = g.vertex_color(g.alpha(darts[i])) == Color::black;
        ok = to_black == ((i - offset) % t.n == 0);
      }
      some_offset = ok;
    }
    if (!some_offset)
      add(ViolationKind::white_alternation, v, where + ": black neighbors are not every " + std::to_string(t.n) + "-th");
  }
  const auto s = trace_faces(g);
  for (int f = 0; f < s.F; ++f) {
    if (s.faces[f].length() < 3)
      add(ViolationKind::short_face, f, "face " + std::to_string(f) + " has length " + std::to_string(s.faces[f].length()));
  }
  return report;
}

CountsReport counts(const RibbonGraph& g) {
  CountsReport c;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const Color col = g.color_of_vertex(v);
    if (col == Color::black) ++c.b;
    else if (col == Color::white) ++c.w;
  }
  c.e = g.num_edges();
  for (int e = 0; e < g.num_edges(); ++e) {
    const Dart d = g.edge_dart(e);
    const Color x = g.vertex_color(d), y = g.vertex_color(g.alpha(d));
    if (x == Color::black && y == Color::black) ++c.e_black_black;
    else if (x == Color::white && y == Color::white) ++c.e_white_white;
    else if (x != Color::none && y != Color::none) ++c.e_black_white;
  }
  if (c.b > 0 && c.b % 6 == 0 && c.w == 10 * (c.b / 6)) c.d = c.b / 6;
  return c;
}

}  // namespace ribbonball

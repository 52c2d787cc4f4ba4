#include "ribbonball/ribbon_graph.hpp"

#include <algorithm>
#include <sstream>

#include "detail.hpp"

namespace ribbonball {

std::string_view to_string(Color c) {
  switch (c) {
    case Color::black: return "black";
    case Color::white: return "white";
    case Color::none: break;
  }
  return "none";
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::pattern: return "pattern";
    case Role::dual: return "dual";
    case Role::plain: break;
  }
  return "plain";
}

std::optional<Color> parse_color(std::string_view s) {
  if (s == "black") return Color::black;
  if (s == "white") return Color::white;
  if (s == "none") return Color::none;
  return std::nullopt;
}

std::optional<Role> parse_role(std::string_view s) {
  if (s == "pattern") return Role::pattern;
  if (s == "dual") return Role::dual;
  if (s == "plain") return Role::plain;
  return std::nullopt;
}

Color swapped(Color c) {
  if (c == Color::black) return Color::white;
  if (c == Color::white) return Color::black;
  return c;
}

namespace detail {

std::vector<Dart> inverse(const std::vector<Dart>& perm) {
  std::vector<Dart> inv(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Dart>(i);
  return inv;
}

}  // namespace detail

RibbonGraph::RibbonGraph(std::vector<Dart> sigma, std::vector<Dart> alpha, Role role,
                         std::vector<bool> twist, std::vector<Color> vertex_color,
                         std::vector<Color> face_color)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), role_(role) {
  const int n = num_darts();
  if (n < 2 || n % 2 != 0) throw Error("number of darts must be even and at least 2");
  if (static_cast<int>(alpha_.size()) != n) throw Error("sigma and alpha sizes differ");

  std::vector<char> seen(n, 0);
  for (Dart d : sigma_) {
    if (d < 0 || d >= n || seen[d]) throw Error("sigma is not a permutation");
    seen[d] = 1;
  }
  for (Dart d = 0; d < n; ++d) {
    const Dart a = alpha_[d];
    if (a < 0 || a >= n) throw Error("alpha out of range");
    if (a == d) throw Error("alpha has a fixed point at dart " + std::to_string(d));
    if (alpha_[a] != d) throw Error("alpha is not an involution at dart " + std::to_string(d));
  }
  sigma_inv_ = detail::inverse(sigma_);

  twist_.assign(n, 0);
  if (!twist.empty()) {
    if (static_cast<int>(twist.size()) != n) throw Error("twist vector has wrong size");
    for (Dart d = 0; d < n; ++d) {
      if (twist[d] != twist[alpha_[d]]) throw Error("twist is not constant on edge of dart " + std::to_string(d));
      twist_[d] = twist[d] ? 1 : 0;
    }
  }

  // Vertex orbits, numbered by smallest dart.
  vertex_of_.assign(n, -1);
  vertex_darts_.reserve(n);
  for (Dart d = 0; d < n; ++d) {
    if (vertex_of_[d] >= 0) continue;
    const int v = num_vertices();
    Dart x = d;
    do {
      vertex_of_[x] = v;
      vertex_darts_.push_back(x);
      x = sigma_[x];
    } while (x != d);
    vertex_start_.push_back(static_cast<int>(vertex_darts_.size()));
  }
  edge_of_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (edge_of_[d] >= 0) continue;
    edge_of_[d] = edge_of_[alpha_[d]] = static_cast<int>(edge_dart_.size());
    edge_dart_.push_back(d);
  }

  vertex_color_ = vertex_color.empty() ? std::vector<Color>(n, Color::none) : std::move(vertex_color);
  face_color_ = face_color.empty() ? std::vector<Color>(n, Color::none) : std::move(face_color);
  if (static_cast<int>(vertex_color_.size()) != n || static_cast<int>(face_color_.size()) != n)
    throw Error("color vectors have wrong size");
  for (Dart d = 0; d < n; ++d) {
    if (vertex_color_[d] != vertex_color_[sigma_[d]])
      throw Error("vertex color is not constant around vertex of dart " + std::to_string(d));
  }
  if (std::any_of(face_color_.begin(), face_color_.end(), [](Color c) { return c != Color::none; })) {
    const auto trace = detail::trace_states(sigma_, sigma_inv_, alpha_, twist_);
    std::vector<int> face_color_of(trace.faces.size(), -1);
    for (Dart d = 0; d < n; ++d) {
      int& c = face_color_of[trace.face_of_state[2 * d]];
      if (c < 0) c = static_cast<int>(face_color_[d]);
      else if (c != static_cast<int>(face_color_[d]))
        throw Error("face color is not constant on the face of dart " + std::to_string(d));
    }
  }
}

bool RibbonGraph::has_twists() const {
  return std::any_of(twist_.begin(), twist_.end(), [](std::uint8_t t) { return t != 0; });
}

std::span<const Dart> RibbonGraph::vertex_darts(int v) const {
  return std::span<const Dart>(vertex_darts_).subspan(vertex_start_[v], vertex_start_[v + 1] - vertex_start_[v]);
}

std::vector<bool> RibbonGraph::twist_flags() const {
  return std::vector<bool>(twist_.begin(), twist_.end());
}

RibbonGraph RibbonGraph::with_role(Role role) const {
  RibbonGraph g = *this;
  g.role_ = role;
  return g;
}

RibbonGraph RibbonGraph::without_colors() const {
  RibbonGraph g = *this;
  std::fill(g.vertex_color_.begin(), g.vertex_color_.end(), Color::none);
  std::fill(g.face_color_.begin(), g.face_color_.end(), Color::none);
  return g;
}

bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
  return a.role_ == b.role_ && a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_ && a.twist_ == b.twist_ &&
         a.vertex_color_ == b.vertex_color_ && a.face_color_ == b.face_color_;
}

RibbonGraph from_rotations(const std::vector<std::vector<Dart>>& rotations,
                           const std::vector<std::pair<Dart, Dart>>& edges, Role role,
                           const std::vector<bool>& edge_twist, const std::vector<Color>& rotation_color) {
  int n = 0;
  for (const auto& r : rotations) n += static_cast<int>(r.size());
  std::vector<Dart> sigma(n, -1), alpha(n, -1);
  std::vector<Color> vcolor(n, Color::none);
  std::vector<bool> twist(n, false);
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    const auto& r = rotations[v];
    if (r.empty()) throw Error("vertex " + std::to_string(v) + " has no darts");
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Dart d = r[i];
      if (d < 0 || d >= n || sigma[d] >= 0) throw Error("dart " + std::to_string(d) + " is out of range or repeated");
      sigma[d] = r[(i + 1) % r.size()];
      if (!rotation_color.empty()) vcolor[d] = rotation_color.at(v);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (a < 0 || a >= n || b < 0 || b >= n || alpha[a] >= 0 || alpha[b] >= 0 || a == b)
      throw Error("edge " + std::to_string(i) + " is invalid or reuses a dart");
    alpha[a] = b;
    alpha[b] = a;
    if (!edge_twist.empty() && edge_twist.at(i)) twist[a] = twist[b] = true;
  }
  if (std::find(alpha.begin(), alpha.end(), -1) != alpha.end()) throw Error("some dart is on no edge");
  return RibbonGraph(std::move(sigma), std::move(alpha), role, std::move(twist), std::move(vcolor));
}

std::string PatternType::str() const {
  std::ostringstream os;
  os << "(" << k << "," << l << "," << n << ")";
  return os.str();
}

PatternType::PatternType(int k_, int l_, int n_) : k(k_), l(l_), n(n_) {
  if (k < 3 || l < 3 || n < 1 || l % n != 0)
    throw Error("invalid pattern type " + str() + ": need k >= 3, l >= 3, n >= 1 dividing l");
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

RibbonGraph recolor_vertices(const RibbonGraph& g, const std::vector<Color>& color_of_vertex) {
  if (static_cast<int>(color_of_vertex.size()) != g.num_vertices()) throw Error("one color per vertex required");
  std::vector<Color> vc(g.num_darts());
  for (Dart d = 0; d < g.num_darts(); ++d) vc[d] = color_of_vertex[g.vertex_of(d)];
  return RibbonGraph(g.sigma_perm(), g.alpha_perm(), g.role(), g.twist_flags(), std::move(vc), g.face_colors());
}

RibbonGraph recolor_faces(const RibbonGraph& g, const std::vector<Color>& color_of_face) {
  const auto s = trace_faces(g);
  if (static_cast<int>(color_of_face.size()) != s.F) throw Error("one color per face required");
  std::vector<Color> fc(g.num_darts());
  for (Dart d = 0; d < g.num_darts(); ++d) fc[d] = color_of_face[s.face_of(d)];
  return RibbonGraph(g.sigma_perm(), g.alpha_perm(), g.role(), g.twist_flags(), g.vertex_colors(), std::move(fc));
}

}  // namespace ribbonball

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ribbonball {

// A dart (half-edge) index in [0, num_darts).
using Dart = std::int32_t;

enum class Color : std::uint8_t { none = 0, black = 1, white = 2 };

// Pattern graphs carry colors on faces, dual graphs on vertices.
enum class Role : std::uint8_t { plain = 0, pattern = 1, dual = 2 };

std::string_view to_string(Color c);
std::string_view to_string(Role r);
std::optional<Color> parse_color(std::string_view s);
std::optional<Role> parse_role(std::string_view s);
Color swapped(Color c);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * A (possibly signed) ribbon graph / combinatorial map.
 *
 *   sigma : cyclic successor of a dart around its vertex (counterclockwise)
 *   alpha : fixed-point-free involution pairing the two darts of an edge
 *   twist : per-dart flag, constant on each edge; true means the edge is glued
 *           with a reversal of local orientation
 *
 * Colors are stored per dart: vertex_color(d) is the color of the vertex of d,
 * face_color(d) is the color of the face on the (+) side of d. Both are
 * constant on the corresponding orbits; the constructor enforces this.
 *
 * Faces of an untwisted graph are the orbits of phi = sigma * alpha.
 *
 * Instances are immutable after construction.
 */
class RibbonGraph {
 public:
  RibbonGraph() = default;

  // Throws Error when an invariant is violated. Empty color / twist vectors
  // mean "all none" / "no twists".
  RibbonGraph(std::vector<Dart> sigma, std::vector<Dart> alpha, Role role = Role::plain,
              std::vector<bool> twist = {}, std::vector<Color> vertex_color = {},
              std::vector<Color> face_color = {});

  int num_darts() const { return static_cast<int>(sigma_.size()); }
  int num_vertices() const { return static_cast<int>(vertex_start_.size()) - 1; }
  int num_edges() const { return static_cast<int>(edge_dart_.size()); }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }
  bool twisted(Dart d) const { return twist_[d] != 0; }
  bool has_twists() const;

  Color vertex_color(Dart d) const { return vertex_color_[d]; }
  Color face_color(Dart d) const { return face_color_[d]; }
  Role role() const { return role_; }

  // Vertices are numbered by increasing smallest dart; the darts of a vertex
  // are listed in cyclic order starting from its smallest dart.
  int vertex_of(Dart d) const { return vertex_of_[d]; }
  std::span<const Dart> vertex_darts(int v) const;
  int valence(int v) const { return vertex_start_[v + 1] - vertex_start_[v]; }
  Color color_of_vertex(int v) const { return vertex_color_[vertex_darts(v)[0]]; }

  // Edges are numbered by increasing smallest dart.
  int edge_of(Dart d) const { return edge_of_[d]; }
  Dart edge_dart(int e) const { return edge_dart_[e]; }

  const std::vector<Dart>& sigma_perm() const { return sigma_; }
  const std::vector<Dart>& alpha_perm() const { return alpha_; }
  std::vector<bool> twist_flags() const;
  const std::vector<Color>& vertex_colors() const { return vertex_color_; }
  const std::vector<Color>& face_colors() const { return face_color_; }

  RibbonGraph with_role(Role role) const;
  RibbonGraph without_colors() const;

  // Dart-for-dart equality of all structure.
  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b);

 private:
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<Dart> alpha_;
  std::vector<std::uint8_t> twist_;
  std::vector<Color> vertex_color_;
  std::vector<Color> face_color_;
  Role role_ = Role::plain;

  std::vector<int> vertex_of_;
  std::vector<int> vertex_start_{0};
  std::vector<Dart> vertex_darts_;
  std::vector<int> edge_of_;
  std::vector<Dart> edge_dart_;
};

// Builds a graph from explicit rotations (darts of each vertex in cyclic
// order) and an edge list. Dart ids must be exactly 0..N-1.
RibbonGraph from_rotations(const std::vector<std::vector<Dart>>& rotations,
                           const std::vector<std::pair<Dart, Dart>>& edges, Role role = Role::plain,
                           const std::vector<bool>& edge_twist = {},
                           const std::vector<Color>& rotation_color = {});

struct Face {
  std::vector<Dart> darts;
  // reversed[i] is true when darts[i] is traversed on its (-) side.
  std::vector<bool> reversed;
  int length() const { return static_cast<int>(darts.size()); }
  Color color = Color::none;
};

struct SurfaceSummary {
  int V = 0;
  int E = 0;
  int F = 0;
  int euler = 0;
  bool orientable = true;
  // Orientable genus, or crosscap number when non-orientable. Summed over
  // components for disconnected graphs.
  int genus = 0;
  int components = 1;
  std::vector<Face> faces;
  // For (5,6,2) duals: the d with b = 6d and w = 10d.
  std::optional<int> d_param;
  // Face index of the state (d, side): index 2*d for (+), 2*d+1 for (-).
  std::vector<int> face_of_state;

  int face_of(Dart d, bool plus = true) const { return face_of_state[2 * d + (plus ? 0 : 1)]; }
  // length -> number of faces
  std::map<int, int> length_profile() const;
};

SurfaceSummary trace_faces(const RibbonGraph& g);

// Component index per dart and the component count.
std::pair<std::vector<int>, int> dart_components(const RibbonGraph& g);
bool is_connected(const RibbonGraph& g);

struct Component {
  RibbonGraph graph;
  // original_dart[d] is the dart of the input graph that became dart d.
  std::vector<Dart> original_dart;
};

// Connected components, each renumbered in increasing order of original dart.
std::vector<Component> split_components(const RibbonGraph& g);

bool is_orientable(const RibbonGraph& g);

// Flips vertices so that all twists vanish. Throws for non-orientable input.
RibbonGraph normalize_orientation(const RibbonGraph& g);

// sigma* = sigma * alpha, alpha* = alpha; vertex and face colors swap,
// pattern <-> dual. Involutive dart for dart.
RibbonGraph dual(const RibbonGraph& g);

// Conjugates sigma to its inverse (mirror image).
RibbonGraph reflect(const RibbonGraph& g);

struct PatternType {
  int k = 5;
  int l = 6;
  int n = 2;

  PatternType() = default;
  // Throws Error unless k >= 3, l >= 3, n >= 1 and n | l.
  PatternType(int k, int l, int n);
  int m() const { return l / n; }
  std::string str() const;
  friend bool operator==(const PatternType&, const PatternType&) = default;
};

enum class ViolationKind {
  black_valence,
  black_neighbor,
  white_valence,
  white_alternation,
  short_face,
};

struct Violation {
  ViolationKind kind;
  int index;  // vertex or face index
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

// Checks the dual-side football conditions for type t. Pattern-role inputs are
// dualized first. Throws Error on an uncolored vertex.
ValidationReport validate(const RibbonGraph& g, const PatternType& t);

struct CountsReport {
  int b = 0;
  int w = 0;
  int e = 0;
  int e_black_black = 0;
  int e_white_white = 0;  // e1
  int e_black_white = 0;  // e2
  std::optional<int> d;
};

CountsReport counts(const RibbonGraph& g);

// Graph with the same darts whose vertex colors come from `color_of_vertex`
// (indexed by vertex number).
RibbonGraph recolor_vertices(const RibbonGraph& g, const std::vector<Color>& color_of_vertex);

// Graph with the same darts whose face colors come from `color_of_face`
// (indexed by face number in trace order).
RibbonGraph recolor_faces(const RibbonGraph& g, const std::vector<Color>& color_of_face);

}  // namespace ribbonball

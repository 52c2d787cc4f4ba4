#include "ribbonball/covers.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace ribbonball {

std::map<int, int> CoveringMap::branch_profile() const {
  std::map<int, int> p;
  for (const auto& b : branches) ++p[b.order];
  return p;
}

CoveringMap make_covering(std::shared_ptr<const RibbonGraph> source, std::shared_ptr<const RibbonGraph> target,
                          std::vector<Dart> dart_map, std::vector<bool> reversed) {
  CoveringMap c;
  c.source = std::move(source);
  c.target = std::move(target);
  c.dart_map = std::move(dart_map);
  c.reversed = reversed.empty() ? std::vector<bool>(c.dart_map.size(), false) : std::move(reversed);
  if (c.target->num_darts() > 0) c.degree = c.source->num_darts() / c.target->num_darts();
  const auto ss = trace_faces(*c.source);
  const auto ts = trace_faces(*c.target);
  for (int f = 0; f < ss.F; ++f) {
    const auto& face = ss.faces[f];
    const Dart x = face.darts[0];
    const Dart y = x < static_cast<Dart>(c.dart_map.size()) ? c.dart_map[x] : -1;
    if (y < 0 || y >= c.target->num_darts()) {
      c.branches.push_back({f, -1, 0});
      continue;
    }
    const bool rev = x < static_cast<Dart>(c.reversed.size()) && c.reversed[x];
    const bool plus = face.reversed[0] == rev;
    const int tf = ts.face_of(y, plus);
    const int tl = ts.faces[tf].length();
    c.branches.push_back({f, tf, face.length() % tl == 0 ? face.length() / tl : 0});
  }
  return c;
}

bool CoveringReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

bool CoveringReport::passed(const std::string& name) const {
  for (const auto& i : items) {
    if (i.name == name) return i.passed;
  }
  return false;
}

CoveringReport verify_covering(const CoveringMap& c) {
  CoveringReport report;
  const RibbonGraph& s = *c.source;
  const RibbonGraph& t = *c.target;
  const int n = s.num_darts();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.items.push_back({std::move(name), ok, std::move(detail)});
  };

  bool range_ok = static_cast<int>(c.dart_map.size()) == n && static_cast<int>(c.reversed.size()) == n;
  for (std::size_t i = 0; range_ok && i < c.dart_map.size(); ++i)
    range_ok = c.dart_map[i] >= 0 && c.dart_map[i] < t.num_darts();
  add("range", range_ok);
  if (!range_ok) return report;

  int first_bad = -1;
  for (Dart x = 0; x < n && first_bad < 0; ++x) {
    const Dart y = c.dart_map[x];
    const Dart want = c.reversed[x] ? t.sigma_inv(y) : t.sigma(y);
    if (c.dart_map[s.sigma(x)] != want || c.reversed[s.sigma(x)] != c.reversed[x]) first_bad = x;
  }
  add("sigma_equivariance", first_bad < 0, first_bad < 0 ? "" : "fails at dart " + std::to_string(first_bad));

  first_bad = -1;
  for (Dart x = 0; x < n && first_bad < 0; ++x) {
    const Dart y = c.dart_map[x];
    const bool flip = s.twisted(x) != t.twisted(y);
    if (c.dart_map[s.alpha(x)] != t.alpha(y) || c.reversed[s.alpha(x)] != (c.reversed[x] != flip)) first_bad = x;
  }
  add("alpha_equivariance", first_bad < 0, first_bad < 0 ? "" : "fails at dart " + std::to_string(first_bad));

  const auto ss = trace_faces(s);
  const auto ts = trace_faces(t);
  first_bad = -1;
  for (Dart x = 0; x < n && first_bad < 0; ++x) {
    const Dart y = c.dart_map[x];
    if (s.vertex_color(x) != t.vertex_color(y)) first_bad = x;
    const Color sf = ss.faces[ss.face_of(x)].color;
    const Color tf = ts.faces[ts.face_of(y, !c.reversed[x])].color;
    if (sf != tf) first_bad = x;
  }
  add("colors", first_bad < 0, first_bad < 0 ? "" : "differs at dart " + std::to_string(first_bad));

  first_bad = -1;
  for (Dart x = 0; x < n && first_bad < 0; ++x) {
    if (s.valence(s.vertex_of(x)) != t.valence(t.vertex_of(c.dart_map[x]))) first_bad = x;
  }
  add("valences", first_bad < 0, first_bad < 0 ? "" : "differs at dart " + std::to_string(first_bad));

  std::vector<int> fiber(t.num_darts(), 0);
  for (Dart y : c.dart_map) ++fiber[y];
  const bool fibers_ok = c.degree > 0 && std::all_of(fiber.begin(), fiber.end(), [&](int k) { return k == c.degree; });
  add("fibers", fibers_ok, "degree " + std::to_string(c.degree));

  bool branches_ok = static_cast<int>(c.branches.size()) == ss.F;
  int ramification = 0;
  for (const auto& b : c.branches) {
    branches_ok = branches_ok && b.order > 0;
    ramification += b.order - 1;
  }
  add("branch_orders", branches_ok);

  const int lhs = ss.euler;
  const int rhs = c.degree * ts.euler - ramification;
  std::ostringstream os;
  os << "chi(source) = " << lhs << ", degree * chi(target) - ramification = " << rhs;
  add("riemann_hurwitz", branches_ok && lhs == rhs, os.str());
  return report;
}

std::optional<CoveringMap> find_covering(const RibbonGraph& g, const RibbonGraph& h) {
  if (!is_connected(g) || !is_connected(h)) throw Error("find_covering needs connected graphs");
  if (g.has_twists() || h.has_twists()) throw Error("find_covering needs untwisted orientable graphs");
  const int n = g.num_darts(), m = h.num_darts();
  if (n % m != 0) return std::nullopt;
  const auto gs = trace_faces(g);
  const auto hs = trace_faces(h);
  std::vector<Dart> map(n);
  std::vector<Dart> stack;
  auto compatible = [&](Dart x, Dart y) {
    return g.vertex_color(x) == h.vertex_color(y) && g.face_color(x) == h.face_color(y) &&
           g.valence(g.vertex_of(x)) == h.valence(h.vertex_of(y)) &&
           gs.faces[gs.face_of(x)].length() % hs.faces[hs.face_of(y)].length() == 0;
  };
  for (Dart image = 0; image < m; ++image) {
    std::fill(map.begin(), map.end(), -1);
    if (!compatible(0, image)) continue;
    map[0] = image;
    stack.assign(1, 0);
    bool ok = true;
    while (ok && !stack.empty()) {
      const Dart x = stack.back();
      stack.pop_back();
      const Dart y = map[x];
      for (auto [xs, ys] : {std::pair{g.sigma(x), h.sigma(y)}, std::pair{g.alpha(x), h.alpha(y)}}) {
        if (map[xs] < 0) {
          if (!compatible(xs, ys)) {
            ok = false;
            break;
          }
          map[xs] = ys;
          stack.push_back(xs);
        } else if (map[xs] != ys) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    return make_covering(std::make_shared<const RibbonGraph>(g), std::make_shared<const RibbonGraph>(h), map);
  }
  return std::nullopt;
}

CoveringMap compose(const CoveringMap& a, const CoveringMap& b) {
  if (a.target->num_darts() != b.source->num_darts()) throw Error("coverings are not composable");
  std::vector<Dart> map(a.dart_map.size());
  std::vector<bool> rev(a.dart_map.size());
  for (std::size_t x = 0; x < map.size(); ++x) {
    map[x] = b.dart_map[a.dart_map[x]];
    rev[x] = a.reversed[x] != b.reversed[a.dart_map[x]];
  }
  return make_covering(a.source, b.target, std::move(map), std::move(rev));
}

Voltages random_voltages(const RibbonGraph& g, int degree, std::uint64_t seed) {
  if (degree < 1) throw Error("degree must be positive");
  std::mt19937_64 rng(seed);
  Voltages volt(g.num_darts());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Dart d = g.edge_dart(e);
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<int> inv(degree);
    for (int i = 0; i < degree; ++i) inv[p[i]] = i;
    volt[d] = std::move(p);
    volt[g.alpha(d)] = std::move(inv);
  }
  return volt;
}

std::vector<CoveringMap> voltage_lift(const RibbonGraph& g, int degree, const Voltages& volt) {
  if (g.has_twists()) throw Error("voltage lifts need an untwisted graph");
  if (degree < 1) throw Error("degree must be positive");
  const int n = g.num_darts();
  if (static_cast<int>(volt.size()) != n) throw Error("one voltage per dart required");
  for (Dart d = 0; d < n; ++d) {
    const auto& v = volt[d];
    if (static_cast<int>(v.size()) != degree) throw Error("voltage of dart " + std::to_string(d) + " has wrong size");
    std::vector<char> seen(degree, 0);
    for (int i : v) {
      if (i < 0 || i >= degree || seen[i]) throw Error("voltage of dart " + std::to_string(d) + " is not a permutation");
      seen[i] = 1;
    }
    const auto& w = volt[g.alpha(d)];
    for (int i = 0; i < degree; ++i) {
      if (w[v[i]] != i) throw Error("inconsistent voltages: volt[alpha d] != volt[d]^-1 at dart " + std::to_string(d));
    }
  }
  std::vector<Dart> sigma(n * degree), alpha(n * degree);
  std::vector<Color> vc(n * degree), fc(n * degree);
  for (int i = 0; i < degree; ++i) {
    for (Dart d = 0; d < n; ++d) {
      const Dart x = i * n + d;
      sigma[x] = i * n + g.sigma(d);
      alpha[x] = volt[d][i] * n + g.alpha(d);
      vc[x] = g.vertex_color(d);
    }
  }
  // A lifted face projects onto a single face, so it inherits that color.
  for (int i = 0; i < degree; ++i) {
    for (Dart d = 0; d < n; ++d) fc[i * n + d] = g.face_color(d);
  }
  const RibbonGraph lift(std::move(sigma), std::move(alpha), g.role(), {}, std::move(vc), std::move(fc));
  auto target = std::make_shared<const RibbonGraph>(g);
  std::vector<CoveringMap> out;
  for (auto& comp : split_components(lift)) {
    std::vector<Dart> map(comp.original_dart.size());
    for (std::size_t x = 0; x < map.size(); ++x) map[x] = comp.original_dart[x] % n;
    out.push_back(make_covering(std::make_shared<const RibbonGraph>(std::move(comp.graph)), target, std::move(map)));
  }
  return out;
}

}  // namespace ribbonball

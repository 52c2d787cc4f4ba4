#include "ribbonball/monodromy.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace ribbonball {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// (p * q)(x) = p(q(x))
Perm multiply(const Perm& p, const Perm& q) {
  Perm out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

Perm invert(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

bool is_perm(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool all_cycles_of_length(const Perm& p, int len) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    int x = static_cast<int>(i), steps = 0;
    do {
      x = p[x];
      ++steps;
    } while (x != static_cast<int>(i) && steps <= len);
    if (steps != len) return false;
  }
  return true;
}

// Size of the subgroup generated by `gens`, stopping early once it exceeds
// `stop_above`.
std::int64_t subgroup_size(const std::vector<Perm>& gens, std::size_t degree, std::int64_t stop_above) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::unordered_set<Perm, PermHash> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier) {
      for (const auto& h : gens) {
        Perm p = multiply(h, g);
        if (seen.insert(p).second) {
          if (static_cast<std::int64_t>(seen.size()) > stop_above) return static_cast<std::int64_t>(seen.size());
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace

int perm_order(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  long long order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int x = static_cast<int>(i); !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

MonodromyEncoding encode(const RibbonGraph& g) {
  if (g.has_twists()) throw Error("encode needs an untwisted graph");
  if (!is_connected(g)) throw Error("encode needs a connected graph");
  RibbonGraph d = g.role() == Role::pattern ? dual(g) : g;
  int k = 0, l = 0;
  for (int v = 0; v < d.num_vertices(); ++v) {
    const Color c = d.color_of_vertex(v);
    if (c == Color::none) throw Error("encode needs a vertex-colored graph");
    int& slot = c == Color::black ? k : l;
    if (slot == 0) slot = d.valence(v);
  }
  if (k == 0 || l == 0 || l % 2 != 0) throw Error("encode needs black and white vertices with even white valence");
  if (k < 3 || l < 3) throw Error("encode needs valences of at least 3");
  if (!validate(d, PatternType(k, l, 2)).valid()) throw Error("encode needs a valid (k, l, 2) dual graph");

  MonodromyEncoding enc;
  enc.k = k;
  enc.m = l / 2;
  const int n = d.num_darts();
  std::vector<int> idx(n, -1);
  for (Dart x = 0; x < n; ++x) {
    if (d.vertex_color(x) == Color::black) {
      idx[x] = static_cast<int>(enc.black_dart.size());
      enc.black_dart.push_back(x);
    }
  }
  const int size = static_cast<int>(enc.black_dart.size());
  enc.r.resize(size);
  enc.s.resize(size);
  enc.t.resize(size);
  for (int e = 0; e < size; ++e) {
    const Dart bd = enc.black_dart[e];
    const Dart wd = d.alpha(bd);
    enc.t[e] = idx[d.sigma(bd)];
    enc.s[e] = idx[d.alpha(d.sigma(d.sigma(wd)))];
    enc.r[e] = idx[d.alpha(d.sigma_inv(d.alpha(d.sigma(wd))))];
  }
  if (!all_cycles_of_length(enc.r, 2)) throw Error("r is not a fixed-point-free involution");
  return enc;
}

bool is_transitive(const MonodromyEncoding& enc) {
  const int n = enc.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const Perm* p : {&enc.r, &enc.s, &enc.t}) {
      const int y = (*p)[x];
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

RibbonGraph decode(const MonodromyEncoding& enc) {
  const int n = enc.size();
  if (n == 0) throw Error("empty encoding");
  if (!is_perm(enc.r, n) || !is_perm(enc.s, n) || !is_perm(enc.t, n)) throw Error("r, s, t must be permutations of one set");
  if (!all_cycles_of_length(enc.r, 2)) throw Error("r must be a fixed-point-free involution");
  if (!all_cycles_of_length(enc.s, enc.m)) throw Error("s must have all cycles of length m");
  if (!all_cycles_of_length(enc.t, enc.k)) throw Error("t must have all cycles of length k");
  if (!is_transitive(enc)) throw Error("disconnected");
  std::vector<Dart> sigma(3 * n), alpha(3 * n);
  std::vector<Color> vc(3 * n, Color::white);
  for (int e = 0; e < n; ++e) {
    sigma[3 * e] = 3 * enc.t[e];
    sigma[3 * e + 1] = 3 * e + 2;
    sigma[3 * e + 2] = 3 * enc.s[e] + 1;
    alpha[3 * e] = 3 * e + 1;
    alpha[3 * e + 1] = 3 * e;
    alpha[3 * e + 2] = 3 * enc.r[e] + 2;
    vc[3 * e] = Color::black;
  }
  return RibbonGraph(std::move(sigma), std::move(alpha), Role::dual, {}, std::move(vc));
}

GroupInfo group_order(const MonodromyEncoding& enc, const GroupLimits& limits) {
  const int n = enc.size();
  if (n > limits.max_points) throw Error("encoding has more points than the cap " + std::to_string(limits.max_points));
  const std::vector<Perm> gens{enc.r, enc.s, enc.t};

  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::unordered_map<Perm, int, PermHash> index{{id, 0}};
  std::vector<Perm> elements{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm p = multiply(g, elements[i]);
      if (index.emplace(p, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(p));
        if (static_cast<std::int64_t>(elements.size()) > limits.max_elements)
          throw Error("group order exceeds the cap " + std::to_string(limits.max_elements));
      }
    }
  }
  GroupInfo info;
  info.order = static_cast<std::int64_t>(elements.size());
  if (info.order == 1) return info;

  // Conjugacy classes via conjugation by generators, then the normal closure
  // of one representative per class.
  std::vector<Perm> gen_inv;
  for (const auto& g : gens) gen_inv.push_back(invert(g));
  std::vector<int> class_of(elements.size(), -1);
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (class_of[i] >= 0) continue;
    const int c = static_cast<int>(classes.size());
    classes.push_back({static_cast<int>(i)});
    class_of[i] = c;
    for (std::size_t j = 0; j < classes[c].size(); ++j) {
      const Perm& x = elements[classes[c][j]];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const int y = index.at(multiply(multiply(gens[g], x), gen_inv[g]));
        if (class_of[y] < 0) {
          class_of[y] = c;
          classes[c].push_back(y);
        }
      }
    }
  }
  info.simple = true;
  for (const auto& cls : classes) {
    std::vector<Perm> gens_n;
    for (int i : cls) gens_n.push_back(elements[i]);
    // A proper subgroup has at most half the elements.
    if (subgroup_size(gens_n, n, info.order / 2) <= info.order / 2) {
      info.simple = false;
      break;
    }
  }
  return info;
}

FiberProduct fiber_product(const MonodromyEncoding& a, const MonodromyEncoding& b, int x, int y) {
  if (a.k != b.k || a.m != b.m) throw Error("fiber product needs encodings with the same (k, m)");
  if (x < 0 || x >= a.size() || y < 0 || y >= b.size()) throw Error("base point out of range");
  FiberProduct fp;
  auto key = [&](int i, int j) { return static_cast<std::int64_t>(i) * b.size() + j; };
  std::unordered_map<std::int64_t, int> id;
  id[key(x, y)] = 0;
  fp.to_a.push_back(x);
  fp.to_b.push_back(y);
  std::vector<std::array<int, 3>> images;
  for (std::size_t p = 0; p < fp.to_a.size(); ++p) {
    std::array<int, 3> img{};
    int g = 0;
    for (auto [pa, pb] : {std::pair{&a.r, &b.r}, std::pair{&a.s, &b.s}, std::pair{&a.t, &b.t}}) {
      const int i = (*pa)[fp.to_a[p]], j = (*pb)[fp.to_b[p]];
      auto [it, fresh] = id.emplace(key(i, j), static_cast<int>(fp.to_a.size()));
      if (fresh) {
        fp.to_a.push_back(i);
        fp.to_b.push_back(j);
      }
      img[g++] = it->second;
    }
    images.push_back(img);
  }
  auto& enc = fp.encoding;
  enc.k = a.k;
  enc.m = a.m;
  const int n = static_cast<int>(images.size());
  enc.r.resize(n);
  enc.s.resize(n);
  enc.t.resize(n);
  for (int p = 0; p < n; ++p) {
    enc.r[p] = images[p][0];
    enc.s[p] = images[p][1];
    enc.t[p] = images[p][2];
  }
  fp.degree_a = n / a.size();
  fp.degree_b = n / b.size();
  return fp;
}

CoveringMap induced_covering(const MonodromyEncoding& src, const MonodromyEncoding& tgt,
                             const std::vector<int>& point_map) {
  if (static_cast<int>(point_map.size()) != src.size()) throw Error("point map has wrong size");
  auto source = std::make_shared<const RibbonGraph>(decode(src));
  auto target = std::make_shared<const RibbonGraph>(decode(tgt));
  std::vector<Dart> map(3 * point_map.size());
  for (std::size_t p = 0; p < point_map.size(); ++p) {
    for (int j = 0; j < 3; ++j) map[3 * p + j] = 3 * point_map[p] + j;
  }
  return make_covering(source, target, std::move(map));
}

}  // namespace ribbonball

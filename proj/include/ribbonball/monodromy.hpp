#pragma once

#include <cstdint>
#include <vector>

#include "ribbonball/covers.hpp"
#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

using Perm = std::vector<int>;

// Action of r, s, t on the black-white edges of a (k, 2m, 2) dual graph.
// Point i is the edge whose black dart is the i-th black dart in increasing
// order (for encodings produced by encode()).
struct MonodromyEncoding {
  int k = 0;
  int m = 0;
  Perm r;
  Perm s;
  Perm t;
  // Black dart of each point when built from a graph; empty otherwise.
  std::vector<Dart> black_dart;

  int size() const { return static_cast<int>(t.size()); }
};

// Throws Error unless g is connected, untwisted and a valid (k, l, 2) dual.
MonodromyEncoding encode(const RibbonGraph& g);

// Darts 3e, 3e+1, 3e+2 are the black end, the white end, and the white-white
// dart following the white end. Throws Error("disconnected") for an
// intransitive triple and on order or fixed-point violations.
RibbonGraph decode(const MonodromyEncoding& enc);

bool is_transitive(const MonodromyEncoding& enc);
int perm_order(const Perm& p);

struct GroupInfo {
  std::int64_t order = 0;
  bool simple = false;
};

struct GroupLimits {
  int max_points = 10000;
  std::int64_t max_elements = 200000;
};

// Order of <r, s, t> by closure, and whether it is simple. Throws Error when
// a limit is exceeded.
GroupInfo group_order(const MonodromyEncoding& enc, const GroupLimits& limits = {});

struct FiberProduct {
  MonodromyEncoding encoding;
  // Images of each orbit point in a and in b.
  std::vector<int> to_a;
  std::vector<int> to_b;
  int degree_a = 0;
  int degree_b = 0;
};

// Orbit of (x, y) under the diagonal action. Throws Error on parameter mismatch.
FiberProduct fiber_product(const MonodromyEncoding& a, const MonodromyEncoding& b, int x = 0, int y = 0);

// Covering decode(src) -> decode(tgt) induced by an equivariant point map.
CoveringMap induced_covering(const MonodromyEncoding& src, const MonodromyEncoding& tgt,
                             const std::vector<int>& point_map);

}  // namespace ribbonball

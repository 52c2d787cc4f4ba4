// Runs the ten acceptance criteria and prints one [PASS]/[FAIL] line each.
// Exit status is the number of failed criteria.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "ribbonball/catalog.hpp"
#include "ribbonball/classify.hpp"
#include "ribbonball/covers.hpp"
#include "ribbonball/isomorphism.hpp"
#include "ribbonball/monodromy.hpp"
#include "ribbonball/surgery.hpp"

using namespace ribbonball;

namespace {

// Collects failure notes for one criterion.
struct Check {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "\n    failed: " << what;
    }
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      notes << "\n    failed: " << what << " (got " << got << ", want " << want << ")";
    }
  }
};

bool all_triangles(const RibbonGraph& g) {
  const auto p = trace_faces(g).length_profile();
  return p.size() == 1 && p.begin()->first == 3;
}

void criterion1(Check& c) {
  const auto g = gamma0();
  const auto s = trace_faces(g);
  const auto n = counts(g);
  c.equal(n.b, 12, "b");
  c.equal(n.w, 20, "w");
  c.equal(n.e, 90, "e");
  c.equal(s.F, 60, "F");
  c.expect(all_triangles(g), "all faces are triangles");
  c.equal(s.euler, 2, "euler");
  c.equal(s.genus, 0, "genus");
  int triangulations = 0;
  for (const auto& [name, h] : corpus::footballs()) {
    // Orientable surfaces only; the projective quotient is also all-triangle.
    if (!is_orientable(h)) continue;
    if (all_triangles(h)) {
      ++triangulations;
      c.expect(is_isomorphic(h, g).has_value(), name + " is all-triangle but not gamma0");
    }
  }
  c.equal(triangulations, 1, "orientable all-triangle football graphs in the corpus");
}

struct TableRow {
  int row, k, m, n, b, w;
};

void criterion2(Check& c) {
  std::vector<TableRow> want = {
      {1, 3, 3, 1, 4, 4},   {2, 3, 4, 1, 8, 6},   {3, 4, 3, 1, 6, 8},  {4, 3, 5, 1, 20, 12},
      {5, 5, 3, 1, 12, 20}, {6, 3, 3, 2, 4, 4},   {7, 3, 4, 2, 8, 6},  {8, 4, 3, 2, 6, 8},
      {9, 3, 5, 2, 20, 12}, {10, 5, 3, 2, 12, 20},
  };
  for (int k = 3; k <= 7; ++k) want.push_back({11, k, 2, 2, 2, k});
  want.push_back({12, 3, 2, 3, 4, 6});
  want.push_back({13, 4, 2, 3, 6, 12});
  want.push_back({14, 5, 2, 3, 12, 30});
  for (int k = 3; k <= 7; ++k) want.push_back({15, k, 1, 3, 1, k});
  for (int k = 3; k <= 7; ++k) want.push_back({16, k, 1, 4, 2, 2 * k});
  for (int k = 3; k <= 7; ++k) want.push_back({17, k, 1, 5, 2, 2 * k});
  want.push_back({18, 3, 1, 6, 4, 12});
  want.push_back({19, 4, 1, 6, 6, 24});
  want.push_back({20, 5, 1, 6, 12, 60});

  const auto got = feasible_rows(7);
  c.equal(got.rows.size(), want.size(), "row count");
  c.expect(got.unexplained.empty(), "no feasible triple outside the table");
  for (std::size_t i = 0; i < std::min(got.rows.size(), want.size()); ++i) {
    const auto& g = got.rows[i];
    const auto& w = want[i];
    const std::string tag = "row " + std::to_string(w.row) + " k=" + std::to_string(w.k);
    c.equal(g.row, w.row, tag + " row");
    c.equal(g.type.k, w.k, tag + " k");
    c.equal(g.type.m(), w.m, tag + " m");
    c.equal(g.type.n, w.n, tag + " n");
    c.equal(g.min_b, w.b, tag + " b");
    c.equal(g.min_w, w.w, tag + " w");
  }
}

void criterion3(Check& c) {
  int checked = 0;
  for (const auto& info : catalog_rows()) {
    const std::vector<int> ks = info.family() ? std::vector<int>{3, 4, 5, 6, 7} : std::vector<int>{0};
    for (int k : ks) {
      const CatalogId id{info.row, k};
      const std::string tag = "row " + std::to_string(info.row) + (k ? " k=" + std::to_string(k) : "");
      const auto p = minimal_realization(id);
      const auto t = pattern_type(id);
      c.expect(validate(p, t).valid(), tag + " validates");
      const auto s = trace_faces(p);
      c.expect(s.orientable && s.genus == 0 && s.components == 1, tag + " is a sphere");
      const auto n = counts(dual(p));
      const auto bound = arithmetic_min_b(t);
      c.expect(bound.min_b && *bound.min_b <= n.b, tag + " b respects the arithmetic bound");
      c.equal(n.w * t.m(), t.k * n.b, tag + " w = kb/m");
      ++checked;
    }
  }
  c.equal(checked, 16 + 4 * 5, "realizations checked");
  // Table counts are compared row by row in criterion 2 via the same realizations.
  const auto rows = feasible_rows(7).rows;
  for (const auto& r : rows) {
    const auto n = counts(dual(minimal_realization(r.realization)));
    c.equal(n.b, r.min_b, "row " + std::to_string(r.row) + " realized b");
    c.equal(n.w, r.min_w, "row " + std::to_string(r.row) + " realized w");
  }
}

void criterion4(Check& c) {
  using P = std::map<int, int>;
  const auto cj = trace_faces(corpus::cross_join_torus());
  c.expect(cj.orientable && cj.genus == 1, "cross_join gives a torus");
  c.expect(cj.length_profile() == P{{3, 56}, {6, 2}}, "cross_join profile {3:56, 6:2}");
  const auto rb = trace_faces(corpus::reorder_black_torus());
  c.expect(rb.orientable && rb.genus == 1, "reorder_black gives a torus");
  c.expect(rb.length_profile() == P{{3, 57}, {9, 1}}, "reorder_black profile {3:57, 9:1}");
  const auto rw = trace_faces(corpus::genus24());
  c.equal(rw.F, 12, "rotate_whites F");
  c.expect(rw.length_profile() == P{{15, 12}}, "rotate_whites faces all of length 15");
  c.equal(rw.euler, -46, "rotate_whites euler");
  c.equal(rw.genus, 24, "rotate_whites genus");
}

void criterion5(Check& c) {
  const auto enc = encode(gamma0());
  c.equal(enc.size(), 60, "|X|");
  c.equal(perm_order(enc.r), 2, "order of r");
  c.equal(perm_order(enc.s), 3, "order of s");
  c.equal(perm_order(enc.t), 5, "order of t");
  c.expect(is_transitive(enc), "transitive");
  const auto g = group_order(enc);
  c.equal(g.order, 60, "group order");
  c.expect(g.simple, "simple");
}

void criterion6(Check& c) {
  const auto a = encode(corpus::genus24());
  const auto b = encode(gamma0());
  const auto fp = fiber_product(a, b);
  c.equal(fp.encoding.size(), 3600, "orbit size");
  c.equal(fp.degree_a, 60, "degree over the genus 24 graph");
  c.expect(verify_covering(induced_covering(fp.encoding, a, fp.to_a)).ok(), "covering of the genus 24 graph");
  c.expect(verify_covering(induced_covering(fp.encoding, b, fp.to_b)).ok(), "covering of gamma0");
}

void criterion7(Check& c) {
  const auto cover = orientation_double_cover(half_twist(gamma0(), 0));
  const auto s = trace_faces(cover.graph);
  c.expect(!cover.disconnected, "double cover is connected");
  c.expect(s.orientable && s.euler == 2, "double cover is spherical");
  c.expect(s.d_param == 4, "d = 4");
  const auto found = find_covering(cover.graph, gamma0());
  c.expect(found.has_value(), "covering to gamma0 found");
  if (found) {
    c.equal(found->degree, 2, "degree");
    const auto profile = found->branch_profile();
    c.expect(profile.count(2) && profile.at(2) == 2, "two faces of branch order 2");
    c.expect(profile.size() == 2 && profile.count(1), "all other faces unbranched");
    c.expect(verify_covering(*found).ok(), "covering verifies");
  }
  const auto q = orientation_double_cover(antipodal_quotient());
  c.expect(is_isomorphic_up_to_mirror(q.graph, gamma0()), "double cover of the antipodal quotient is gamma0");
}

void criterion8(Check& c) {
  const auto octa = dual(painted_octahedron());
  const auto tetra = dual(minimal_realization({15, 3}));
  c.expect(!find_covering(octa, tetra).has_value(), "no covering");
}

void criterion9(Check& c) {
  int lifts = 0, components = 0;
  for (int row = 6; row <= 10; ++row) {
    const auto base = dual(minimal_realization({row, 0}));
    for (int i = 0; i < 20; ++i) {
      const int degree = 2 + i % 4;
      const std::uint64_t seed = 1000 * row + i;
      ++lifts;
      for (const auto& part : voltage_lift(base, degree, random_voltages(base, degree, seed))) {
        ++components;
        const std::string tag = "row " + std::to_string(row) + " seed " + std::to_string(seed);
        const auto report = verify_covering(part);
        c.expect(report.ok(), tag + " verify_covering");
        c.expect(report.passed("riemann_hurwitz"), tag + " Riemann-Hurwitz");
        for (const auto& [len, count] : trace_faces(*part.source).length_profile())
          c.expect(len % 3 == 0, tag + " face length " + std::to_string(len));
        const auto again = find_covering(*part.source, base);
        c.expect(again && again->degree == part.degree && verify_covering(*again).ok(),
                 tag + " covering rediscovered");
      }
    }
  }
  c.equal(lifts, 100, "lifts");
  c.expect(components >= lifts, "every lift has a component");
}

void criterion10(Check& c) {
  c.expect(exhaustive_search({6, 4, 4}, 1).empty(), "(6,4,4) with b = 1 has no realization");
  const auto found = exhaustive_search({3, 3, 3}, 1);
  c.equal(found.size(), 1u, "(3,3,3) with b = 1 realizations");
  if (found.size() == 1)
    c.expect(is_isomorphic_up_to_mirror(found[0], minimal_realization({15, 3})), "it is the painted tetrahedron");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"standard football counts and uniqueness of the triangulation", criterion1},
      {"classification table for k up to 7", criterion2},
      {"catalog realizations validate on the sphere", criterion3},
      {"surgery face profiles", criterion4},
      {"monodromy of gamma0 is the icosahedral group", criterion5},
      {"fiber product of size 3600", criterion6},
      {"branched double covers", criterion7},
      {"no covering between the (3,3,3) patterns", criterion8},
      {"100 random voltage lifts over the n=2 minimal duals", criterion9},
      {"exhaustive search certificates", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << "\n    exception: " << e.what();
    }
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ' ' << criteria[i].first << c.notes.str() << '\n';
    if (!c.ok) ++failed;
  }
  return failed;
}

#include <doctest.h>

#include <numeric>

#include "corpus.hpp"
#include "oracles.hpp"
#include "ribbonball/catalog.hpp"
#include "ribbonball/covers.hpp"
#include "ribbonball/isomorphism.hpp"
#include "ribbonball/surgery.hpp"

using namespace ribbonball;

namespace {

std::shared_ptr<const RibbonGraph> share(RibbonGraph g) { return std::make_shared<const RibbonGraph>(std::move(g)); }

Voltages identity_voltages(const RibbonGraph& g, int degree) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  return Voltages(g.num_darts(), id);
}

// Identity voltages except a transposition of sheets 0 and 1 on one edge.
Voltages one_swap(const RibbonGraph& g, int degree, int edge) {
  auto v = identity_voltages(g, degree);
  const Dart d = g.edge_dart(edge);
  std::swap(v[d][0], v[d][1]);
  std::swap(v[g.alpha(d)][0], v[g.alpha(d)][1]);
  return v;
}

}  // namespace

TEST_SUITE("covers") {
  TEST_CASE("identity covering") {
    const auto g = share(gamma0());
    std::vector<Dart> id(g->num_darts());
    std::iota(id.begin(), id.end(), 0);
    const auto c = make_covering(g, g, id);
    CHECK(c.degree == 1);
    const auto report = verify_covering(c);
    CHECK(report.ok());
    for (const char* item : {"range", "sigma_equivariance", "alpha_equivariance", "colors", "valences", "fibers",
                             "branch_orders", "riemann_hurwitz"})
      CHECK(report.passed(item));
    CHECK(c.branch_profile() == std::map<int, int>{{1, 60}});
  }

  TEST_CASE("a corrupted map fails equivariance") {
    const auto g = share(gamma0());
    std::vector<Dart> map(g->num_darts());
    std::iota(map.begin(), map.end(), 0);
    std::swap(map[0], map[1]);
    const auto report = verify_covering(make_covering(g, g, map));
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.passed("sigma_equivariance"));
    CHECK(report.passed("range"));

    map[0] = g->num_darts();
    CHECK_FALSE(verify_covering(make_covering(g, g, map)).passed("range"));
  }

  TEST_CASE("double cover of a half twist covers gamma0") {
    const auto cover = orientation_double_cover(half_twist(gamma0(), 0));
    const auto c = find_covering(cover.graph, gamma0());
    REQUIRE(c);
    CHECK(c->degree == 2);
    CHECK(c->branch_profile() == std::map<int, int>{{1, 116}, {2, 2}});
    CHECK(verify_covering(*c).ok());
  }

  TEST_CASE("no covering between the two (3,3,3) patterns") {
    CHECK_FALSE(find_covering(dual(painted_octahedron()), dual(minimal_realization({15, 3}))));
    CHECK(find_covering(dual(painted_octahedron()), dual(painted_octahedron())));
  }

  TEST_CASE("no covering from a torus of the same size") {
    CHECK_FALSE(find_covering(corpus::cross_join_torus(), gamma0()));
    CHECK_FALSE(find_covering(corpus::genus24(), gamma0()));
    CHECK_FALSE(find_covering(gamma0(), dual(minimal_realization({8, 0}))));
  }

  TEST_CASE("find_covering preconditions") {
    CHECK_THROWS_AS(find_covering(half_twist(gamma0(), 0), gamma0()), Error);
    const auto g = gamma0();
    const auto two = voltage_lift(g, 2, identity_voltages(g, 2));
    REQUIRE(two.size() == 2);
  }

  TEST_CASE("trivial lift is two copies") {
    const auto g = gamma0();
    const auto parts = voltage_lift(g, 2, identity_voltages(g, 2));
    REQUIRE(parts.size() == 2);
    for (const auto& p : parts) {
      CHECK(p.degree == 1);
      CHECK(verify_covering(p).ok());
      CHECK(*p.source == g);
    }
  }

  TEST_CASE("one swapped edge gives a connected sphere") {
    const auto g = gamma0();
    const auto parts = voltage_lift(g, 2, one_swap(g, 2, 0));
    REQUIRE(parts.size() == 1);
    const auto& c = parts[0];
    CHECK(c.degree == 2);
    CHECK(verify_covering(c).ok());
    const auto s = trace_faces(*c.source);
    CHECK(oracle::euler(*c.source) == 2);
    CHECK(s.euler == 2);
    REQUIRE(s.d_param);
    CHECK(*s.d_param == 4);
    CHECK(c.branch_profile() == std::map<int, int>{{1, 116}, {2, 2}});
    CHECK(validate(*c.source, {5, 6, 2}).valid());
  }

  TEST_CASE("branch order is face length over three") {
    const auto g = gamma0();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      for (const auto& c : voltage_lift(g, 3, random_voltages(g, 3, seed))) {
        const auto s = trace_faces(*c.source);
        for (const auto& b : c.branches) CHECK(b.order * 3 == s.faces[b.source_face].length());
        CHECK(verify_covering(c).ok());
      }
    }
  }

  TEST_CASE("random lifts are recovered by the search") {
    const auto g = dual(minimal_realization({8, 0}));
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      CAPTURE(seed);
      for (const auto& c : voltage_lift(g, 3, random_voltages(g, 3, seed))) {
        const auto found = find_covering(*c.source, g);
        REQUIRE(found);
        CHECK(found->degree == c.degree);
        CHECK(verify_covering(*found).ok());
      }
    }
  }

  TEST_CASE("random voltages are consistent and reproducible") {
    const auto g = gamma0();
    const auto v = random_voltages(g, 4, 7);
    CHECK(v == random_voltages(g, 4, 7));
    for (Dart d = 0; d < g.num_darts(); ++d) {
      for (int i = 0; i < 4; ++i) CHECK(v[g.alpha(d)][v[d][i]] == i);
    }
  }

  TEST_CASE("inconsistent voltages are rejected") {
    const auto g = gamma0();
    auto v = identity_voltages(g, 2);
    std::swap(v[0][0], v[0][1]);
    CHECK_THROWS_AS(voltage_lift(g, 2, v), Error);
    CHECK_THROWS_AS(voltage_lift(g, 0, {}), Error);
    CHECK_THROWS_AS(voltage_lift(g, 2, Voltages(3, {0, 1})), Error);
    CHECK_THROWS_AS(random_voltages(g, 0, 1), Error);
  }

  TEST_CASE("composition of coverings") {
    const auto g = gamma0();
    const auto first = voltage_lift(g, 2, one_swap(g, 2, 0));
    REQUIRE(first.size() == 1);
    const auto& mid = *first[0].source;
    const auto second = voltage_lift(mid, 2, one_swap(mid, 2, 5));
    REQUIRE(second.size() == 1);
    const auto c = compose(second[0], first[0]);
    CHECK(c.degree == 4);
    CHECK(verify_covering(c).ok());
    CHECK_THROWS_AS(compose(first[0], first[0]), Error);
  }

  TEST_CASE("spherical covers of the minimal n=2 duals") {
    for (int row = 6; row <= 10; ++row) {
      CAPTURE(row);
      const auto base = dual(minimal_realization({row, 0}));
      const auto cover = orientation_double_cover(half_twist(base, 0));
      CHECK(trace_faces(cover.graph).euler == 2);
      const auto c = find_covering(cover.graph, base);
      REQUIRE(c);
      CHECK(c->degree == 2);
      CHECK(verify_covering(*c).ok());
      CHECK(validate(cover.graph, pattern_type({row, 0})).valid());
    }
  }
}

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "corpus.hpp"
#include "ribbonball/catalog.hpp"
#include "ribbonball/rgf.hpp"

using namespace ribbonball;

namespace {

std::string embedded_rgf(const std::string& dot) {
  const auto start = dot.find("/* rgf\n");
  const auto end = dot.find("*/\n");
  REQUIRE(start == 0);
  REQUIRE(end != std::string::npos);
  return dot.substr(7, end - 7);
}

int parse_error_line(const std::string& text) {
  try {
    parse_rgf(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("rgf") {
  TEST_CASE("round trip over the corpus") {
    for (const auto& [name, g] : corpus::all()) {
      CAPTURE(name);
      const std::string text = write_rgf(g);
      const auto back = parse_rgf(text);
      CHECK(back == g);
      CHECK(write_rgf(back) == text);
    }
  }

  TEST_CASE("twisted graphs use the signed header") {
    const auto text = write_rgf(corpus::footballs()[4].graph);
    CHECK(text.rfind("rgf 1 dual signed\n", 0) == 0);
    CHECK(text.find(" twist\n") != std::string::npos);
    CHECK(write_rgf(gamma0()).rfind("rgf 1 dual orientable\n", 0) == 0);
  }

  TEST_CASE("frozen gamma0 fixture") {
    CHECK(read_rgf_file(corpus::fixture_path("gamma0.rgf")) == gamma0());
  }

  TEST_CASE("file round trip") {
    const auto path = (std::filesystem::temp_directory_path() / "ribbonball_rgf_test.rgf").string();
    write_rgf_file(painted_octahedron(), path);
    CHECK(read_rgf_file(path) == painted_octahedron());
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_rgf_file(path), Error);
  }

  TEST_CASE("comments and blank lines are ignored") {
    const std::string text =
        "# two darts\n\n"
        "rgf 1 plain orientable\n"
        "v 0 none : 0\n"
        "# the other pole\n"
        "v 1 none : 1\n"
        "e 0 1\n";
    const auto g = parse_rgf(text);
    CHECK(g.num_darts() == 2);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
  }

  TEST_CASE("parse errors carry the line") {
    const std::string head = "rgf 1 plain orientable\n";
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("rgf 2 plain orientable\n") == 1);
    CHECK(parse_error_line("rgf 1 square orientable\n") == 1);
    CHECK(parse_error_line(head + "v 0 none : 0 1\nv 1 purple : 2 3\n") == 3);
    CHECK(parse_error_line(head + "v 0 none : 0 1\ne 0 x\n") == 3);
    CHECK(parse_error_line(head + "v 0 none : 0 1\nv 1 none : 1 2\n") == 3);
    CHECK(parse_error_line(head + "v 0 none : 0 1\ne 0 1 twist\n") == 3);
    CHECK(parse_error_line(head + "v 0 none : 0 1\ne 0 0\n") == 3);
    CHECK(parse_error_line(head + "\n\nq 1 2\n") == 4);
    CHECK(parse_error_line(head + "v 0 none : 0 1\ne 0 7\n") == 3);

    try {
      parse_rgf(head + "v 0 none : 0 1\ne 0 1\nfc 5 black\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("line 4") == 0);
    }
  }

  TEST_CASE("dot export embeds the graph") {
    for (const auto& [name, g] : corpus::footballs()) {
      CAPTURE(name);
      const std::string dot = write_dot(g);
      CHECK(parse_rgf(embedded_rgf(dot)) == g);
      CHECK(write_dot(parse_rgf(embedded_rgf(dot))) == dot);
      CHECK(dot.find("id=\"e" + std::to_string(g.num_edges() - 1) + "\"") != std::string::npos);
      CHECK(dot.find("id=\"e" + std::to_string(g.num_edges()) + "\"") == std::string::npos);
    }
  }
}

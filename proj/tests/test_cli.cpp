#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"
#include "ribbonball/catalog.hpp"
#include "ribbonball/rgf.hpp"

using namespace ribbonball;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);)
    if (l == line) return true;
  return false;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ribbonball_cli_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build then info") {
    const auto built = run({"build", "10"});
    REQUIRE(built.code == 0);
    CHECK(parse_rgf(built.out) == minimal_realization({10, 0}));
    const auto info = run({"info"}, built.out);
    CHECK(info.code == 0);
    CHECK(has_line(info.out, "b 12"));
    CHECK(has_line(info.out, "w 20"));
    CHECK(has_line(info.out, "genus 0"));

    const auto js = run({"info", "--json"}, write_rgf(gamma0()));
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["F"] == 60);
    CHECK(j["d"] == 2);
    CHECK(j["face_lengths"]["3"] == 60);
  }

  TEST_CASE("build targets") {
    CHECK(run({"build", "cube"}).code == 0);
    CHECK(run({"build", "gamma0"}).code == 0);
    CHECK(parse_rgf(run({"build", "16", "--k", "5"}).out) == minimal_realization({16, 5}));
    CHECK(parse_rgf(run({"build", "painted_tetrahedron"}).out) == minimal_realization({15, 3}));
    CHECK(run({"build", "16"}).code == 2);
    CHECK(run({"build", "spheroid"}).code == 2);
    CHECK(run({"build", "21"}).code == 2);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"validate"}).code == 2);
    CHECK(run({"validate", "--type", "5,6"}, write_rgf(gamma0())).code == 2);
    CHECK(run({"info", "/nonexistent/file.rgf"}).code == 2);
  }

  TEST_CASE("validate") {
    const auto ok = run({"validate", "--type", "5,6,2"}, write_rgf(gamma0()));
    CHECK(ok.code == 0);
    CHECK(has_line(ok.out, "valid (5,6,2)"));
    const auto bad = run({"validate", "--type", "5,6,3"}, write_rgf(gamma0()));
    CHECK(bad.code == 1);
    const auto js = run({"validate", "--type", "5,6,3", "--json"}, write_rgf(gamma0()));
    CHECK(nlohmann::json::parse(js.out)["valid"] == false);
  }

  TEST_CASE("parse errors report the line") {
    const auto r = run({"info"}, "rgf 1 plain orientable\nv 0 none : 0 1\ne 0 one\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
  }

  TEST_CASE("classify") {
    const auto r = run({"classify", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 56);
    CHECK(j["k_max"] == 12);
    CHECK(j["unexplained"].empty());
    CHECK(j["rows"][9]["b"] == 12);

    CHECK(nlohmann::json::parse(run({"classify", "--json", "--kmax", "6"}).out)["rows"].size() == 32);

    ::setenv("RIBBONBALL_KMAX", "7", 1);
    const auto env = nlohmann::json::parse(run({"classify", "--json"}).out);
    CHECK(env["rows"].size() == 36);
    CHECK(nlohmann::json::parse(run({"classify", "--json", "--kmax", "5"}).out)["rows"].size() == 28);
    ::setenv("RIBBONBALL_KMAX", "x", 1);
    CHECK(run({"classify"}).code == 2);
    ::unsetenv("RIBBONBALL_KMAX");
    CHECK(run({"classify", "--kmax", "4"}).code == 2);
  }

  TEST_CASE("dual and export") {
    const auto d = run({"dual"}, write_rgf(gamma0()));
    REQUIRE(d.code == 0);
    CHECK(parse_rgf(d.out) == dual(gamma0()));
    const auto dot = run({"export", "--dot"}, write_rgf(gamma0()));
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph ribbon {") != std::string::npos);
    CHECK(dot.out.find(write_rgf(gamma0())) != std::string::npos);
  }

  TEST_CASE("surgery") {
    const auto r = run({"surgery", "rotate_whites"}, write_rgf(gamma0()));
    REQUIRE(r.code == 0);
    CHECK(trace_faces(parse_rgf(r.out)).genus == 24);

    const auto [a, b] = corpus::cross_join_pair();
    const auto cj = run({"surgery", "cross_join", "--darts", std::to_string(a) + "," + std::to_string(b)},
                        write_rgf(gamma0()));
    REQUIRE(cj.code == 0);
    CHECK(parse_rgf(cj.out) == corpus::cross_join_torus());

    // Positional input after a comma-separated option.
    const auto path = temp_file("surgery_g0.rgf");
    write_rgf_file(gamma0(), path);
    const auto fx = corpus::reorder_black_fixture();
    std::string order;
    for (Dart d : fx.order) order += (order.empty() ? "" : ",") + std::to_string(d);
    const auto rb = run({"surgery", "reorder_black", "--vertex", std::to_string(fx.vertex), "--order", order, path});
    REQUIRE(rb.code == 0);
    CHECK(parse_rgf(rb.out) == corpus::reorder_black_torus());
    CHECK(run({"surgery", "cross_join", "--darts", "0,x", path}).code == 2);
    std::filesystem::remove(path);

    const auto q = run({"surgery", "antipodal_quotient"});
    REQUIRE(q.code == 0);
    CHECK(trace_faces(parse_rgf(q.out)).euler == 1);

    CHECK(run({"surgery", "half_twist"}, write_rgf(gamma0())).code == 2);
    CHECK(run({"surgery", "unknown"}, write_rgf(gamma0())).code == 2);
  }

  TEST_CASE("monodromy") {
    const auto r = run({"mono", "order"}, write_rgf(gamma0()));
    REQUIRE(r.code == 0);
    CHECK(has_line(r.out, "order 60"));
    CHECK(has_line(r.out, "simple yes"));

    const auto path = temp_file("gamma0.rgf");
    write_rgf_file(gamma0(), path);
    const auto fp = run({"mono", "fiber", "--a", path, "--b", path, "--json"});
    REQUIRE(fp.code == 0);
    CHECK(nlohmann::json::parse(fp.out)["orbit"] == 60);
    std::filesystem::remove(path);
  }

  TEST_CASE("covering search") {
    const auto src = temp_file("octa.rgf"), dst = temp_file("tetra.rgf");
    REQUIRE(run({"build", "painted_octahedron", "-o", src}).code == 0);
    REQUIRE(run({"build", "painted_tetrahedron", "-o", dst}).code == 0);
    const auto none = run({"cover", "find", "--src", src, "--dst", dst});
    CHECK(none.code == 1);
    CHECK(has_line(none.out, "no covering"));
    const auto self = run({"cover", "find", "--src", src, "--dst", src});
    CHECK(self.code == 0);
    CHECK(has_line(self.out, "covering degree 1"));
    std::filesystem::remove(src);
    std::filesystem::remove(dst);
  }

  TEST_CASE("search") {
    const auto found = run({"search", "--k", "3", "--l", "3", "--n", "3", "--b", "1"});
    CHECK(found.code == 0);
    CHECK(has_line(found.out, "realizations 1"));
    const auto none = run({"search", "--k", "3", "--l", "6", "--n", "2", "--b", "2"});
    CHECK(none.code == 1);
    CHECK(has_line(none.out, "no realization"));
    CHECK(run({"search", "--k", "5", "--l", "6", "--n", "2", "--b", "12"}).code == 2);
  }

  TEST_CASE("lift") {
    const auto r = run({"lift", "--degree", "2", "--seed", "3", "--json"}, write_rgf(gamma0()));
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    int total = 0;
    for (const auto& c : j["components"]) {
      CHECK(c["verified"] == true);
      total += c["covering_degree"].get<int>();
    }
    CHECK(total == 2);
    CHECK(run({"lift", "--degree", "2"}, write_rgf(gamma0())).code == 2);
  }
}

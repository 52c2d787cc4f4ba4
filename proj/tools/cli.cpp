#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ribbonball/catalog.hpp"
#include "ribbonball/classify.hpp"
#include "ribbonball/covers.hpp"
#include "ribbonball/isomorphism.hpp"
#include "ribbonball/monodromy.hpp"
#include "ribbonball/operators.hpp"
#include "ribbonball/rgf.hpp"
#include "ribbonball/surgery.hpp"

namespace ribbonball::cli {

namespace {

using nlohmann::json;

// Domain-level "no" (exit code 1).
struct Negative {
  std::string message;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;

  RibbonGraph read(const std::string& path) const {
    if (path == "-") {
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_rgf(ss.str());
    }
    return read_rgf_file(path);
  }

  void write(const std::string& text, const std::string& path) const {
    if (path.empty() || path == "-") {
      out << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << text;
  }
};

int default_kmax() {
  if (const char* env = std::getenv("RIBBONBALL_KMAX")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(std::string("RIBBONBALL_KMAX is not an integer: ") + env);
    }
  }
  return 12;
}

PatternType parse_type(const std::string& s) {
  int k, l, n;
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> k >> c1 >> l >> c2 >> n) || c1 != ',' || c2 != ',' || !is.eof())
    throw Error("type must look like k,l,n, got '" + s + "'");
  return PatternType(k, l, n);
}

std::vector<Dart> parse_darts(const std::string& csv) {
  std::vector<Dart> out;
  if (csv.empty()) return out;
  std::istringstream is(csv);
  for (std::string tok; std::getline(is, tok, ',');) {
    std::size_t used = 0;
    int d = -1;
    try {
      d = std::stoi(tok, &used);
    } catch (const std::exception&) {
    }
    if (used == 0 || used != tok.size()) throw Error("expected comma-separated darts, got '" + csv + "'");
    out.push_back(d);
  }
  return out;
}

json profile_json(const std::map<int, int>& p) {
  json j = json::object();
  for (auto [len, count] : p) j[std::to_string(len)] = count;
  return j;
}

std::string profile_text(const std::map<int, int>& p) {
  std::string s;
  for (auto [len, count] : p) s += (s.empty() ? "" : " ") + std::to_string(len) + ":" + std::to_string(count);
  return s;
}

// Counts are taken on the vertex-colored side.
std::optional<CountsReport> counts_of(const RibbonGraph& g) {
  if (g.role() == Role::pattern) {
    if (!is_orientable(g)) return std::nullopt;
    return counts(dual(g));
  }
  return counts(g);
}

json summary_json(const RibbonGraph& g) {
  const auto s = trace_faces(g);
  json j;
  j["role"] = std::string(to_string(g.role()));
  j["darts"] = g.num_darts();
  j["V"] = s.V;
  j["E"] = s.E;
  j["F"] = s.F;
  j["euler"] = s.euler;
  j["orientable"] = s.orientable;
  j["genus"] = s.genus;
  j["components"] = s.components;
  j["face_lengths"] = profile_json(s.length_profile());
  if (const auto c = counts_of(g)) {
    j["b"] = c->b;
    j["w"] = c->w;
    j["e"] = c->e;
    j["e_black_black"] = c->e_black_black;
    j["e1"] = c->e_white_white;
    j["e2"] = c->e_black_white;
    j["d"] = c->d ? json(*c->d) : json(nullptr);
  }
  return j;
}

void print_summary(const RibbonGraph& g, std::ostream& out) {
  const json j = summary_json(g);
  out << "role " << j["role"].get<std::string>() << '\n';
  for (const char* key : {"darts", "V", "E", "F", "euler"}) out << key << ' ' << j[key] << '\n';
  out << "orientable " << (j["orientable"].get<bool>() ? "yes" : "no") << '\n';
  out << (j["orientable"].get<bool>() ? "genus " : "crosscaps ") << j["genus"] << '\n';
  out << "components " << j["components"] << '\n';
  out << "face_lengths " << profile_text(trace_faces(g).length_profile()) << '\n';
  if (j.contains("b")) {
    for (const char* key : {"b", "w", "e", "e_black_black", "e1", "e2"}) out << key << ' ' << j[key] << '\n';
    out << "d " << (j["d"].is_null() ? "none" : j["d"].dump()) << '\n';
  }
}

RibbonGraph build_named(const std::string& what, int k) {
  if (!what.empty() && std::all_of(what.begin(), what.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int row = std::stoi(what);
    const bool family = row_info(row).family();
    if (family && k == 0) throw Error("row " + what + " needs --k");
    return minimal_realization({row, family ? k : 0});
  }
  if (const auto s = parse_solid(what)) return platonic(*s);
  if (what == "american_football") {
    if (k == 0) throw Error("american_football needs --k");
    return american_football(k);
  }
  if (what == "gamma0") return gamma0();
  if (what == "painted_octahedron") return painted_octahedron();
  if (what == "painted_tetrahedron") return minimal_realization({15, 3});
  throw Error("unknown row or name '" + what + "'");
}

json covering_json(const CoveringMap& c) {
  const auto report = verify_covering(c);
  json j;
  j["degree"] = c.degree;
  j["branch_orders"] = profile_json(c.branch_profile());
  j["verified"] = report.ok();
  json checks = json::object();
  for (const auto& item : report.items) checks[item.name] = item.passed;
  j["checks"] = checks;
  j["dart_map"] = c.dart_map;
  return j;
}

Voltages read_voltages(const std::string& path, const RibbonGraph& g, int degree) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  Voltages volt(g.num_darts());
  std::string line;
  int no = 0;
  while (std::getline(f, line)) {
    ++no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    int d;
    if (!(is >> d)) throw Error(path + ":" + std::to_string(no) + ": expected '<dart> <images...>'");
    if (d < 0 || d >= g.num_darts()) throw Error(path + ":" + std::to_string(no) + ": dart out of range");
    std::vector<int> p;
    for (int x; is >> x;) p.push_back(x);
    volt[d] = std::move(p);
  }
  // Darts without an entry get the inverse of their partner, or the identity.
  for (Dart d = 0; d < g.num_darts(); ++d) {
    if (!volt[d].empty()) continue;
    const auto& other = volt[g.alpha(d)];
    std::vector<int> p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    if (!other.empty()) {
      for (int i = 0; i < degree && i < static_cast<int>(other.size()); ++i) {
        if (other[i] >= 0 && other[i] < degree) p[other[i]] = i;
      }
    }
    volt[d] = std::move(p);
  }
  return volt;
}

std::string indexed_path(const std::string& path, std::size_t i) {
  const auto dot = path.rfind('.');
  const auto slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "." + std::to_string(i);
  return path.substr(0, dot) + "." + std::to_string(i) + path.substr(dot);
}

json encoding_json(const MonodromyEncoding& enc) {
  json j;
  j["X"] = enc.size();
  j["k"] = enc.k;
  j["m"] = enc.m;
  j["orders"] = {perm_order(enc.r), perm_order(enc.s), perm_order(enc.t)};
  j["transitive"] = is_transitive(enc);
  j["r"] = enc.r;
  j["s"] = enc.s;
  j["t"] = enc.t;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  const Io io{out, err, in};
  CLI::App app{"ribbonball: football patterns, ribbon graphs and their coverings", "ribbonball"};
  app.require_subcommand(1);

  std::string in_path = "-", out_path, what, type_str;
  bool as_json = false;
  int k = 0;

  auto* build = app.add_subcommand("build", "write a catalog pattern or base map as RGF");
  build->add_option("what", what, "table row 1-20, a solid, american_football, gamma0, painted_octahedron, painted_tetrahedron")
      ->required();
  build->add_option("--k", k, "family parameter");
  build->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* info = app.add_subcommand("info", "surface summary and counts");
  info->add_option("--in,input", in_path, "RGF file, - for stdin");
  info->add_flag("--json", as_json);

  auto* validate_cmd = app.add_subcommand("validate", "check the football conditions for a type");
  validate_cmd->add_option("--type", type_str, "k,l,n")->required();
  validate_cmd->add_option("--in,input", in_path);
  validate_cmd->add_flag("--json", as_json);

  auto* dual_cmd = app.add_subcommand("dual", "dual graph");
  dual_cmd->add_option("--in,input", in_path);
  dual_cmd->add_option("-o,--out", out_path);

  std::string src_path, dst_path;
  auto* cover = app.add_subcommand("cover", "covering maps");
  cover->require_subcommand(1);
  auto* cover_find = cover->add_subcommand("find", "search for a covering src -> dst");
  cover_find->add_option("--src", src_path)->required();
  cover_find->add_option("--dst", dst_path)->required();
  cover_find->add_flag("--json", as_json);

  int degree = 0;
  std::uint64_t seed = 0;
  std::string volt_path;
  auto* lift = app.add_subcommand("lift", "permutation-voltage lift");
  lift->add_option("--in,input", in_path);
  lift->add_option("--degree", degree)->required();
  auto* seed_opt = lift->add_option("--seed", seed, "random voltages from this seed");
  auto* volt_opt = lift->add_option("--volt", volt_path, "voltage file: lines '<dart> <images...>'");
  seed_opt->excludes(volt_opt);
  lift->add_option("-o,--out", out_path, "component files (indexed when several)");
  lift->add_flag("--json", as_json);

  std::string kind, order_str;
  std::vector<int> edges;
  std::string darts_str;
  int vertex = -1;
  auto* surgery = app.add_subcommand("surgery", "cut-and-paste operations");
  surgery->add_option("kind", kind, "cross_join, reorder_black, rotate_whites, half_twist, antipodal_quotient, orientation_double_cover")
      ->required();
  surgery->add_option("--in,input", in_path);
  surgery->add_option("--edge", edges, "edge index (twice for cross_join)");
  surgery->add_option("--darts", darts_str, "cross_join darts a,b");
  surgery->add_option("--vertex", vertex);
  surgery->add_option("--order", order_str, "comma-separated darts for reorder_black");
  surgery->add_option("-o,--out", out_path);

  std::string a_path, b_path;
  int x = 0, y = 0;
  auto* mono = app.add_subcommand("mono", "monodromy of (k,l,2) duals");
  mono->require_subcommand(1);
  auto* mono_encode = mono->add_subcommand("encode", "r, s, t on black-white edges");
  mono_encode->add_option("--in,input", in_path);
  auto* mono_order = mono->add_subcommand("order", "order and simplicity of <r, s, t>");
  mono_order->add_option("--in,input", in_path);
  auto* mono_fiber = mono->add_subcommand("fiber", "fiber product orbit of (x, y)");
  mono_fiber->add_option("--a", a_path)->required();
  mono_fiber->add_option("--b", b_path)->required();
  mono_fiber->add_option("--x", x);
  mono_fiber->add_option("--y", y);
  mono_fiber->add_option("-o,--out", out_path, "decoded common covering");
  for (auto* sub : {mono_encode, mono_order, mono_fiber}) sub->add_flag("--json", as_json);

  int kmax = 0;
  auto* classify = app.add_subcommand("classify", "feasibility table");
  classify->add_option("--kmax", kmax, "family cap (default RIBBONBALL_KMAX or 12)");
  classify->add_flag("--json", as_json);

  int sl = 0, sn = 0, sb = 0, cap = 40;
  auto* search = app.add_subcommand("search", "exhaustive search for spherical realizations");
  search->add_option("--k", k)->required();
  search->add_option("--l", sl)->required();
  search->add_option("--n", sn)->required();
  search->add_option("--b", sb)->required();
  search->add_option("--cap", cap, "dart cap");
  search->add_option("-o,--out", out_path, "realization files (indexed when several)");
  search->add_flag("--json", as_json);

  bool dot = false;
  auto* export_cmd = app.add_subcommand("export", "export to other formats");
  export_cmd->add_flag("--dot", dot, "Graphviz with embedded RGF")->required();
  export_cmd->add_option("--in,input", in_path);
  export_cmd->add_option("-o,--out", out_path);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (build->parsed()) {
      io.write(write_rgf(build_named(what, k)), out_path);
    } else if (info->parsed()) {
      const auto g = io.read(in_path);
      if (as_json) out << summary_json(g).dump(2) << '\n';
      else print_summary(g, out);
    } else if (validate_cmd->parsed()) {
      const auto t = parse_type(type_str);
      const auto report = validate(io.read(in_path), t);
      if (as_json) {
        json j;
        j["type"] = t.str();
        j["valid"] = report.valid();
        j["violations"] = json::array();
        for (const auto& v : report.violations) j["violations"].push_back(v.message);
        out << j.dump(2) << '\n';
      } else {
        for (const auto& v : report.violations) out << v.message << '\n';
        out << (report.valid() ? "valid " : "invalid ") << t.str() << '\n';
      }
      if (!report.valid()) return 1;
    } else if (dual_cmd->parsed()) {
      io.write(write_rgf(dual(io.read(in_path))), out_path);
    } else if (cover_find->parsed()) {
      // The search matches vertex colors, so patterns are compared via their duals.
      auto vertex_side = [](RibbonGraph g) { return g.role() == Role::pattern ? dual(g) : g; };
      const auto c = find_covering(vertex_side(io.read(src_path)), vertex_side(io.read(dst_path)));
      if (!c) throw Negative{"no covering"};
      if (as_json) {
        out << covering_json(*c).dump(2) << '\n';
      } else {
        out << "covering degree " << c->degree << '\n';
        out << "branch_orders " << profile_text(c->branch_profile()) << '\n';
        out << "verified " << (verify_covering(*c).ok() ? "yes" : "no") << '\n';
      }
    } else if (lift->parsed()) {
      if (seed_opt->count() == 0 && volt_path.empty()) throw Error("lift needs --seed or --volt");
      const auto g = io.read(in_path);
      const Voltages volt = volt_path.empty() ? random_voltages(g, degree, seed) : read_voltages(volt_path, g, degree);
      const auto parts = voltage_lift(g, degree, volt);
      json j;
      j["degree"] = degree;
      j["components"] = json::array();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        json c = summary_json(*parts[i].source);
        c["covering_degree"] = parts[i].degree;
        c["branch_orders"] = profile_json(parts[i].branch_profile());
        c["verified"] = verify_covering(parts[i]).ok();
        j["components"].push_back(c);
        if (!out_path.empty())
          write_rgf_file(*parts[i].source, parts.size() == 1 ? out_path : indexed_path(out_path, i));
      }
      if (as_json) {
        out << j.dump(2) << '\n';
      } else {
        out << "components " << parts.size() << '\n';
        for (const auto& c : j["components"])
          out << "degree " << c["covering_degree"] << " euler " << c["euler"] << " genus " << c["genus"]
              << " verified " << (c["verified"].get<bool>() ? "yes" : "no") << '\n';
      }
    } else if (surgery->parsed()) {
      RibbonGraph result;
      if (kind == "antipodal_quotient") {
        result = antipodal_quotient();
      } else {
        const auto g = io.read(in_path);
        if (kind == "cross_join") {
          const auto darts = parse_darts(darts_str);
          if (darts.size() == 2) result = cross_join(g, darts[0], darts[1]);
          else if (edges.size() == 2) result = cross_join_edges(g, edges[0], edges[1]);
          else throw Error("cross_join needs --darts a,b or two --edge options");
        } else if (kind == "reorder_black") {
          if (vertex < 0 || order_str.empty()) throw Error("reorder_black needs --vertex and --order");
          result = reorder_black(g, vertex, parse_darts(order_str));
        } else if (kind == "rotate_whites") {
          result = rotate_whites(g);
        } else if (kind == "half_twist") {
          if (edges.size() != 1) throw Error("half_twist needs one --edge");
          result = half_twist(g, edges[0]);
        } else if (kind == "orientation_double_cover") {
          result = orientation_double_cover(g).graph;
        } else {
          throw Error("unknown surgery '" + kind + "'");
        }
      }
      io.write(write_rgf(result), out_path);
    } else if (mono_encode->parsed()) {
      const auto enc = encode(io.read(in_path));
      if (as_json) {
        out << encoding_json(enc).dump(2) << '\n';
      } else {
        out << "X " << enc.size() << "\norders " << perm_order(enc.r) << ' ' << perm_order(enc.s) << ' '
            << perm_order(enc.t) << "\ntransitive " << (is_transitive(enc) ? "yes" : "no") << '\n';
      }
    } else if (mono_order->parsed()) {
      const auto enc = encode(io.read(in_path));
      const auto g = group_order(enc);
      if (as_json) {
        json j;
        j["X"] = enc.size();
        j["order"] = g.order;
        j["simple"] = g.simple;
        j["regular"] = is_transitive(enc) && g.order == enc.size();
        out << j.dump(2) << '\n';
      } else {
        out << "order " << g.order << "\nsimple " << (g.simple ? "yes" : "no") << '\n';
      }
    } else if (mono_fiber->parsed()) {
      const auto a = encode(io.read(a_path));
      const auto b = encode(io.read(b_path));
      const auto fp = fiber_product(a, b, x, y);
      if (!out_path.empty()) write_rgf_file(decode(fp.encoding), out_path);
      if (as_json) {
        json j;
        j["orbit"] = fp.encoding.size();
        j["degree_a"] = fp.degree_a;
        j["degree_b"] = fp.degree_b;
        j["X_a"] = a.size();
        j["X_b"] = b.size();
        out << j.dump(2) << '\n';
      } else {
        out << "orbit " << fp.encoding.size() << "\ndegree_a " << fp.degree_a << "\ndegree_b " << fp.degree_b << '\n';
      }
    } else if (classify->parsed()) {
      const int km = kmax > 0 ? kmax : default_kmax();
      if (km < 5) throw Error("--kmax must be at least 5");
      const auto cl = feasible_rows(km);
      if (as_json) {
        json j;
        j["k_max"] = km;
        j["rows"] = json::array();
        for (const auto& r : cl.rows) {
          json row;
          row["row"] = r.row;
          row["k"] = r.type.k;
          row["l"] = r.type.l;
          row["m"] = r.type.m();
          row["n"] = r.type.n;
          row["b"] = r.min_b;
          row["w"] = r.min_w;
          row["arithmetic_b"] = r.arithmetic_b;
          row["certification"] = std::string(to_string(r.certification));
          row["realization"] = std::string(row_info(r.row).name);
          j["rows"].push_back(row);
        }
        j["infeasible"] = json::array();
        for (const auto& t : cl.infeasible) j["infeasible"].push_back({{"k", t.type.k}, {"l", t.type.l}, {"n", t.type.n}, {"reason", t.reason}});
        j["unexplained"] = json::array();
        for (const auto& t : cl.unexplained) j["unexplained"].push_back(t.str());
        out << j.dump(2) << '\n';
      } else {
        out << "row  k  m  n  b  w  certification  realization\n";
        for (const auto& r : cl.rows) {
          out << r.row << "  " << r.type.k << "  " << r.type.m() << "  " << r.type.n << "  " << r.min_b << "  "
              << r.min_w << "  " << to_string(r.certification) << "  " << row_info(r.row).name << '\n';
        }
        out << "infeasible triples scanned: " << cl.infeasible.size() << '\n';
      }
    } else if (search->parsed()) {
      const PatternType t(k, sl, sn);
      const auto found = exhaustive_search(t, sb, cap);
      for (std::size_t i = 0; i < found.size() && !out_path.empty(); ++i)
        write_rgf_file(found[i], found.size() == 1 ? out_path : indexed_path(out_path, i));
      if (as_json) {
        json j;
        j["type"] = t.str();
        j["b"] = sb;
        j["count"] = found.size();
        j["realizations"] = json::array();
        for (const auto& g : found) j["realizations"].push_back(summary_json(g));
        out << j.dump(2) << '\n';
      } else {
        out << "realizations " << found.size() << '\n';
      }
      if (found.empty()) throw Negative{"no realization"};
    } else if (export_cmd->parsed()) {
      io.write(write_dot(io.read(in_path)), out_path);
    }
  } catch (const Negative& n) {
    out << n.message << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace ribbonball::cli

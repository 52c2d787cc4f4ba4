#include "ribbonball/rgf.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace ribbonball {

ParseError::ParseError(int line, int column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string write_rgf(const RibbonGraph& g) {
  std::ostringstream os;
  os << "rgf 1 " << to_string(g.role()) << ' ' << (g.has_twists() ? "signed" : "orientable") << '\n';
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "v " << v << ' ' << to_string(g.color_of_vertex(v)) << " :";
    for (Dart d : g.vertex_darts(v)) os << ' ' << d;
    os << '\n';
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Dart d = g.edge_dart(e);
    os << "e " << d << ' ' << g.alpha(d);
    if (g.twisted(d)) os << " twist";
    os << '\n';
  }
  const auto s = trace_faces(g);
  for (int f = 0; f < s.F; ++f) {
    if (s.faces[f].color != Color::none) os << "fc " << f << ' ' << to_string(s.faces[f].color) << '\n';
  }
  return os.str();
}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int to_int(const Token& t, int line) {
  int v = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [p, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || p != end) throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return v;
}

}  // namespace

RibbonGraph parse_rgf(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::vector<int> line_no;
  {
    int no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++no;
      auto toks = tokenize(line);
      if (!toks.empty() && toks[0].text[0] != '#') {
        lines.push_back(std::move(toks));
        line_no.push_back(no);
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  const auto& head = lines[0];
  const int hl = line_no[0];
  if (head.size() != 4 || head[0].text != "rgf") throw ParseError(hl, 1, "expected header 'rgf 1 <role> <orientable|signed>'");
  if (head[1].text != "1") throw ParseError(hl, head[1].column, "unsupported version '" + std::string(head[1].text) + "'");
  const auto role = parse_role(head[2].text);
  if (!role) throw ParseError(hl, head[2].column, "unknown role '" + std::string(head[2].text) + "'");
  bool allow_twists;
  if (head[3].text == "orientable") allow_twists = false;
  else if (head[3].text == "signed") allow_twists = true;
  else throw ParseError(hl, head[3].column, "expected 'orientable' or 'signed'");

  struct VertexLine {
    int line;
    Color color;
    std::vector<Token> darts;
  };
  std::vector<VertexLine> vertices;
  std::map<int, int> vertex_ids;
  struct EdgeLine {
    int line;
    Token a, b;
    bool twist;
  };
  std::vector<EdgeLine> edges;
  std::vector<std::pair<int, std::pair<Token, Color>>> face_colors;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    const int ln = line_no[i];
    if (t[0].text == "v") {
      if (t.size() < 5 || t[3].text != ":") throw ParseError(ln, t[0].column, "expected 'v <id> <color> : <darts>'");
      const int id = to_int(t[1], ln);
      if (!vertex_ids.emplace(id, static_cast<int>(vertices.size())).second)
        throw ParseError(ln, t[1].column, "duplicate vertex id " + std::to_string(id));
      const auto c = parse_color(t[2].text);
      if (!c) throw ParseError(ln, t[2].column, "unknown color '" + std::string(t[2].text) + "'");
      vertices.push_back({ln, *c, std::vector<Token>(t.begin() + 4, t.end())});
    } else if (t[0].text == "e") {
      if (t.size() != 3 && t.size() != 4) throw ParseError(ln, t[0].column, "expected 'e <dartA> <dartB> [twist]'");
      bool tw = false;
      if (t.size() == 4) {
        if (t[3].text != "twist") throw ParseError(ln, t[3].column, "expected 'twist'");
        if (!allow_twists) throw ParseError(ln, t[3].column, "twisted edge in an orientable file");
        tw = true;
      }
      edges.push_back({ln, t[1], t[2], tw});
    } else if (t[0].text == "fc") {
      if (t.size() != 3) throw ParseError(ln, t[0].column, "expected 'fc <face-index> <color>'");
      const auto c = parse_color(t[2].text);
      if (!c) throw ParseError(ln, t[2].column, "unknown color '" + std::string(t[2].text) + "'");
      face_colors.push_back({ln, {t[1], *c}});
    } else {
      throw ParseError(ln, t[0].column, "unknown record '" + std::string(t[0].text) + "'");
    }
  }

  int n = 0;
  for (const auto& v : vertices) n += static_cast<int>(v.darts.size());
  if (n == 0) throw ParseError(hl, 1, "no darts");
  std::vector<Dart> sigma(n, -1), alpha(n, -1);
  std::vector<Color> vc(n);
  std::vector<bool> twist(n, false);
  for (const auto& v : vertices) {
    std::vector<Dart> ds;
    for (const auto& tok : v.darts) {
      const int d = to_int(tok, v.line);
      if (d < 0 || d >= n) throw ParseError(v.line, tok.column, "dart " + std::to_string(d) + " out of range");
      if (sigma[d] >= 0) throw ParseError(v.line, tok.column, "dart " + std::to_string(d) + " listed twice");
      ds.push_back(d);
      sigma[d] = d;  // placeholder until the cycle is closed
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      sigma[ds[i]] = ds[(i + 1) % ds.size()];
      vc[ds[i]] = v.color;
    }
  }
  for (const auto& e : edges) {
    const int a = to_int(e.a, e.line), b = to_int(e.b, e.line);
    for (const auto& [d, tok] : {std::pair{a, e.a}, std::pair{b, e.b}}) {
      if (d < 0 || d >= n) throw ParseError(e.line, tok.column, "dart " + std::to_string(d) + " out of range");
      if (alpha[d] >= 0) throw ParseError(e.line, tok.column, "dart " + std::to_string(d) + " already on an edge");
    }
    if (a == b) throw ParseError(e.line, e.b.column, "edge joins a dart to itself");
    alpha[a] = b;
    alpha[b] = a;
    twist[a] = twist[b] = e.twist;
  }
  for (Dart d = 0; d < n; ++d) {
    if (alpha[d] < 0) throw ParseError(hl, 1, "dart " + std::to_string(d) + " is on no edge");
  }

  RibbonGraph g;
  try {
    g = RibbonGraph(std::move(sigma), std::move(alpha), *role, std::move(twist), std::move(vc));
  } catch (const Error& err) {
    throw ParseError(hl, 1, err.what());
  }
  if (face_colors.empty()) return g;
  const auto s = trace_faces(g);
  std::vector<Color> per_face(s.F, Color::none);
  for (const auto& [ln, fcol] : face_colors) {
    const int f = to_int(fcol.first, ln);
    if (f < 0 || f >= s.F) throw ParseError(ln, fcol.first.column, "face " + std::to_string(f) + " out of range");
    per_face[f] = fcol.second;
  }
  return recolor_faces(g, per_face);
}

RibbonGraph read_rgf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rgf(ss.str());
}

void write_rgf_file(const RibbonGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << write_rgf(g);
}

std::string write_dot(const RibbonGraph& g) {
  std::ostringstream os;
  os << "/* rgf\n" << write_rgf(g) << "*/\n";
  os << "graph ribbon {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    const Color c = g.color_of_vertex(v);
    os << "  v" << v << " [color=" << (c == Color::none ? "gray" : to_string(c))
       << ", style=filled, fillcolor=" << (c == Color::black ? "black" : c == Color::white ? "white" : "gray")
       << ", valence=" << g.valence(v) << "];\n";
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Dart d = g.edge_dart(e);
    os << "  v" << g.vertex_of(d) << " -- v" << g.vertex_of(g.alpha(d)) << " [id=\"e" << e << "\", label=\"e" << e
       << "\"" << (g.twisted(d) ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ribbonball

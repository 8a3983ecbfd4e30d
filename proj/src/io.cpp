#include "rcx/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "rcx/error.hpp"

namespace rcx {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId parse_label(std::string_view tok, std::size_t line) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail(line, "expected a positive integer, got '" + std::string(tok) + "'");
  if (x == 0 || x > UINT32_MAX) fail(line, "vertex label out of range: " + std::string(tok));
  return static_cast<VertexId>(x);
}

}  // namespace

Complex2 read_complex(std::istream& in) {
  std::vector<Face> faces;
  std::vector<Edge> edges;
  std::vector<VertexId> vertices;
  std::vector<std::size_t> face_lines;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view body(text);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto tok = split(body);
    if (tok.empty()) continue;
    const std::string_view kind = tok[0];
    auto expect = [&](std::size_t n) {
      if (tok.size() != n + 1)
        fail(line, "'" + std::string(kind) + "' takes " + std::to_string(n) + " argument(s)");
    };
    if (kind == "f") {
      expect(3);
      const VertexId a = parse_label(tok[1], line), b = parse_label(tok[2], line),
                     c = parse_label(tok[3], line);
      if (a == b || a == c || b == c)
        fail(line, "degenerate face " + std::string(tok[1]) + " " + std::string(tok[2]) + " " +
                       std::string(tok[3]));
      faces.push_back(Face::make(a, b, c));
      face_lines.push_back(line);
    } else if (kind == "e") {
      expect(2);
      const VertexId a = parse_label(tok[1], line), b = parse_label(tok[2], line);
      if (a == b) fail(line, "degenerate edge");
      edges.push_back(Edge::make(a, b));
    } else if (kind == "v") {
      expect(1);
      vertices.push_back(parse_label(tok[1], line));
    } else if (kind == "skeleton") {
      expect(1);
      const VertexId n = parse_label(tok[1], line);
      if (n > 100000) fail(line, "skeleton too large");
      for (VertexId a = 1; a <= n; ++a) {
        vertices.push_back(a);
        for (VertexId b = a + 1; b <= n; ++b) edges.push_back(Edge{a, b});
      }
    } else {
      fail(line, "unknown record '" + std::string(kind) + "'");
    }
  }
  if (in.bad()) throw Error(ErrorCode::IoError, "read failure");

  std::vector<std::size_t> order(faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return faces[x] < faces[y]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (faces[order[i]] == faces[order[i - 1]]) fail(face_lines[order[i]], "duplicate face");

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Complex2::from_faces(faces, edges, vertices);
}

Complex2 parse_complex(const std::string& text) {
  std::istringstream in(text);
  return read_complex(in);
}

Complex2 read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_complex(in);
}

void write_complex(std::ostream& out, const Complex2& s) {
  const auto& vs = s.vertices();
  const std::size_t n = vs.size();
  bool skeleton = n >= 2 && vs.front() == 1 && vs.back() == n && s.num_edges() == n * (n - 1) / 2;
  std::vector<bool> covered_edge(s.num_edges(), false);
  for (std::size_t i = 0; i < s.num_edges(); ++i) covered_edge[i] = s.edge_degree(i) > 0;
  if (skeleton)
    skeleton = std::find(covered_edge.begin(), covered_edge.end(), false) != covered_edge.end();

  if (skeleton) {
    out << "skeleton " << n << '\n';
  } else {
    std::vector<bool> covered_vertex(n, false);
    for (const Edge& e : s.edges()) {
      covered_vertex[*s.vertex_index(e.a)] = true;
      covered_vertex[*s.vertex_index(e.b)] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!covered_vertex[i]) out << "v " << vs[i] << '\n';
    for (std::size_t i = 0; i < s.num_edges(); ++i)
      if (!covered_edge[i]) out << "e " << s.edges()[i].a << ' ' << s.edges()[i].b << '\n';
  }
  for (const Face& f : s.faces()) out << "f " << f.a << ' ' << f.b << ' ' << f.c << '\n';
}

std::string format_complex(const Complex2& s) {
  std::ostringstream out;
  write_complex(out, s);
  return out.str();
}

void write_complex_file(const std::string& path, const Complex2& s) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  write_complex(out, s);
  if (!out) throw Error(ErrorCode::IoError, "write failure on " + path);
}

}  // namespace rcx

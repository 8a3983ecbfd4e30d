#include "rcx/catalog.hpp"

#include <algorithm>

#include "rcx/error.hpp"

namespace rcx::catalog {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

VertexId label(std::int64_t x) { return static_cast<VertexId>(x); }

}  // namespace

Complex2 cone_over_graph(const Graph1& g) {
  const VertexId apex = (g.vertices.empty() ? 0 : g.vertices.back()) + 1;
  std::vector<Face> faces;
  for (const Edge& e : g.edges) faces.push_back(Face::make(apex, e.a, e.b));
  std::vector<VertexId> vertices = g.vertices;
  vertices.push_back(apex);
  std::vector<Edge> spokes;
  for (VertexId v : g.vertices) spokes.push_back(Edge::make(apex, v));
  return Complex2::from_faces(faces, spokes, vertices);
}

Graph1 gamma_graph(GammaKind kind, std::int64_t x, std::int64_t y, std::int64_t z) {
  require(x >= 3 && y >= 3, "gamma graph needs x, y >= 3");
  std::vector<Edge> edges;
  auto cycle = [&](std::vector<VertexId> ring) {
    for (std::size_t i = 0; i < ring.size(); ++i)
      edges.push_back(Edge::make(ring[i], ring[(i + 1) % ring.size()]));
  };
  auto arc = [&](VertexId from, VertexId to, std::int64_t length, VertexId& next) {
    VertexId prev = from;
    for (std::int64_t i = 1; i < length; ++i) {
      edges.push_back(Edge::make(prev, next));
      prev = next++;
    }
    edges.push_back(Edge::make(prev, to));
  };

  if (kind == GammaKind::TwoCircles) {
    require(z >= 0, "two-circle gamma graph needs z >= 0");
    std::vector<VertexId> left;
    for (std::int64_t i = 1; i <= x; ++i) left.push_back(label(i));
    cycle(left);
    VertexId next = label(x + 1);
    VertexId hub = 1;
    if (z > 0) {
      hub = label(x + z);
      VertexId inner = next;
      arc(1, hub, z, inner);
      next = hub + 1;
    }
    std::vector<VertexId> right{hub};
    for (std::int64_t i = 1; i < y; ++i) right.push_back(next++);
    cycle(right);
  } else {
    require(z >= 1, "theta graph needs z >= 1");
    VertexId next = 3;
    arc(1, 2, x, next);
    arc(1, 2, y, next);
    arc(1, 2, z, next);
  }
  return Graph1::from_edges(std::move(edges));
}

Complex2 l_xy(std::int64_t x, std::int64_t y) {
  require(x >= 3 && y >= 3, "L(x,y) needs x, y >= 3");
  const VertexId v = 1, w = 2, a = 3, b = 4;
  VertexId next = 5;
  std::vector<Face> faces{Face::make(v, w, a), Face::make(v, w, b)};
  auto fan = [&](VertexId hub, std::int64_t inner) {
    std::vector<VertexId> path{a};
    for (std::int64_t i = 0; i < inner; ++i) path.push_back(next++);
    path.push_back(b);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      faces.push_back(Face::make(hub, path[i], path[i + 1]));
  };
  fan(v, x - 3);
  fan(w, y - 3);
  return Complex2::from_faces(faces);
}

Complex2 disk(DiskKind kind, std::int64_t n) {
  require(n >= 3, "disk needs n >= 3");
  if (kind == DiskKind::Ngon) {
    std::vector<Edge> ring;
    for (std::int64_t i = 1; i <= n; ++i) ring.push_back(Edge::make(label(i), label(i % n + 1)));
    return cone_over_graph(Graph1::from_edges(ring));
  }

  // Outer square 1..4, inner n-cycle 5..n+4, center n+5. The annulus walks
  // both cycles once, spreading the four outer steps evenly among the inner.
  auto outer = [](std::int64_t i) { return label(i % 4 + 1); };
  auto inner = [n](std::int64_t j) { return label(j % n + 5); };
  const VertexId center = label(n + 5);
  std::vector<Face> faces;
  std::int64_t j = 0;
  for (std::int64_t k = 0; k < 4; ++k) {
    const std::int64_t target = std::max(j, ((2 * k + 1) * n + 4) / 8);
    for (; j < target; ++j) faces.push_back(Face::make(outer(k), inner(j), inner(j + 1)));
    faces.push_back(Face::make(outer(k), outer(k + 1), inner(j)));
  }
  for (; j < n; ++j) faces.push_back(Face::make(outer(0), inner(j), inner(j + 1)));
  for (std::int64_t i = 0; i < n; ++i) faces.push_back(Face::make(center, inner(i), inner(i + 1)));
  return Complex2::from_faces(faces);
}

Complex2 closed_surface(SurfaceKind kind) {
  std::vector<Face> faces;
  switch (kind) {
    case SurfaceKind::Sphere4:
      faces = {Face{1, 2, 3}, Face{1, 2, 4}, Face{1, 3, 4}, Face{2, 3, 4}};
      break;
    case SurfaceKind::Torus7:
      // Translates of {0,1,3} and {0,2,3} in Z/7.
      for (VertexId i = 0; i < 7; ++i) {
        faces.push_back(Face::make(i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1));
        faces.push_back(Face::make(i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1));
      }
      break;
    case SurfaceKind::Rp2_6:
      // Antipodal quotient of the icosahedron: a 5-wheel around 1 plus its
      // pentagram closure.
      faces = {Face{1, 2, 3}, Face{1, 3, 4}, Face{1, 4, 5}, Face{1, 5, 6}, Face{1, 2, 6},
               Face{2, 3, 5}, Face{3, 4, 6}, Face{2, 4, 5}, Face{3, 5, 6}, Face{2, 4, 6}};
      break;
    case SurfaceKind::Klein8:
      // A 3x4 twisted grid with four link-condition edge contractions applied.
      faces = {Face{1, 2, 6}, Face{1, 2, 8}, Face{1, 3, 5}, Face{1, 3, 7},
               Face{1, 4, 5}, Face{1, 4, 8}, Face{1, 6, 7}, Face{2, 3, 4},
               Face{2, 3, 8}, Face{2, 4, 5}, Face{2, 5, 6}, Face{3, 4, 6},
               Face{3, 5, 6}, Face{3, 7, 8}, Face{4, 6, 7}, Face{4, 7, 8}};
      break;
  }
  return Complex2::from_faces(faces);
}

Complex2 triod(std::int64_t k) {
  require(k >= 0, "triod needs k >= 0");
  std::vector<VertexId> spine{1};
  for (std::int64_t i = 0; i < k; ++i) spine.push_back(label(6 + i));
  spine.push_back(2);
  std::vector<Face> faces;
  for (VertexId apex : {3u, 4u, 5u})
    for (std::size_t i = 0; i + 1 < spine.size(); ++i)
      faces.push_back(Face::make(spine[i], spine[i + 1], apex));
  return Complex2::from_faces(faces);
}

Complex2 attach_triangle(const Complex2& s, const Edge& e) {
  if (!s.edge_index(e))
    throw Error(ErrorCode::UnknownSimplex, "edge {" + std::to_string(e.a) + "," +
                                               std::to_string(e.b) + "} not in complex");
  std::vector<Face> faces = s.faces();
  faces.push_back(Face::make(e.a, e.b, s.max_label() + 1));
  return Complex2::from_faces(faces, s.edges(), s.vertices());
}

Complex2 triangle() {
  const Face f{1, 2, 3};
  return Complex2::from_faces(std::span<const Face>(&f, 1));
}

Complex2 full_two_skeleton(std::int64_t n) {
  require(n >= 0, "full 2-skeleton needs n >= 0");
  std::vector<Face> faces;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c) faces.push_back(Face{a, b, c});
  return Complex2::with_skeleton(label(n), faces);
}

namespace {

struct Entry {
  std::string_view name;
  std::size_t arity;
  std::string_view params;
};

constexpr Entry kEntries[] = {
    {"triangle", 0, ""},          {"tetrahedron", 0, ""},     {"sphere4", 0, ""},
    {"torus7", 0, ""},            {"rp2_6", 0, ""},           {"klein8", 0, ""},
    {"ngon", 1, "N"},             {"implanted_ngon", 1, "N"}, {"pendant_disk", 1, "N"},
    {"lxy", 2, "X Y"},            {"triod", 1, "K"},          {"cone_gamma", 3, "X Y Z"},
    {"cone_theta", 3, "X Y Z"},   {"gamma", 3, "X Y Z"},      {"theta", 3, "X Y Z"},
    {"full2", 1, "N"},            {"skeleton", 1, "N"},
};

Complex2 graph_complex(const Graph1& g) {
  return Complex2::from_faces({}, g.edges, g.vertices);
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const Entry& e : kEntries) {
    std::string line(e.name);
    if (!e.params.empty()) line += " " + std::string(e.params);
    out.push_back(line);
  }
  return out;
}

Complex2 by_name(std::string_view name, std::span<const std::int64_t> p) {
  const Entry* entry = nullptr;
  for (const Entry& e : kEntries)
    if (e.name == name) entry = &e;
  require(entry != nullptr, "unknown catalog name '" + std::string(name) + "'");
  require(p.size() == entry->arity, "catalog '" + std::string(name) + "' expects " +
                                        std::to_string(entry->arity) + " parameter(s)");
  if (name == "triangle") return triangle();
  if (name == "tetrahedron" || name == "sphere4") return closed_surface(SurfaceKind::Sphere4);
  if (name == "torus7") return closed_surface(SurfaceKind::Torus7);
  if (name == "rp2_6") return closed_surface(SurfaceKind::Rp2_6);
  if (name == "klein8") return closed_surface(SurfaceKind::Klein8);
  if (name == "ngon") return disk(DiskKind::Ngon, p[0]);
  if (name == "implanted_ngon") return disk(DiskKind::ImplantedNgon, p[0]);
  if (name == "pendant_disk") {
    Complex2 base = disk(DiskKind::ImplantedNgon, p[0]);
    return attach_triangle(base, free_edges(base).front());
  }
  if (name == "lxy") return l_xy(p[0], p[1]);
  if (name == "triod") return triod(p[0]);
  if (name == "cone_gamma")
    return cone_over_graph(gamma_graph(GammaKind::TwoCircles, p[0], p[1], p[2]));
  if (name == "cone_theta")
    return cone_over_graph(gamma_graph(GammaKind::Theta, p[0], p[1], p[2]));
  if (name == "gamma") return graph_complex(gamma_graph(GammaKind::TwoCircles, p[0], p[1], p[2]));
  if (name == "theta") return graph_complex(gamma_graph(GammaKind::Theta, p[0], p[1], p[2]));
  if (name == "full2") return full_two_skeleton(p[0]);
  require(p[0] >= 0, "skeleton needs n >= 0");
  return Complex2::with_skeleton(label(p[0]), {});
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, Complex2 c) { out.push_back({std::move(name), std::move(c)}); };
  add("triangle", triangle());
  add("sphere4", closed_surface(SurfaceKind::Sphere4));
  add("torus7", closed_surface(SurfaceKind::Torus7));
  add("rp2_6", closed_surface(SurfaceKind::Rp2_6));
  add("klein8", closed_surface(SurfaceKind::Klein8));
  for (std::int64_t n : {3, 4, 5, 6, 8})
    add("ngon " + std::to_string(n), disk(DiskKind::Ngon, n));
  for (std::int64_t n : {3, 4, 6, 8})
    add("implanted_ngon " + std::to_string(n), disk(DiskKind::ImplantedNgon, n));
  {
    Complex2 base = disk(DiskKind::ImplantedNgon, 8);
    add("pendant_disk 8", attach_triangle(base, free_edges(base).front()));
  }
  add("lxy 3 3", l_xy(3, 3));
  add("lxy 4 3", l_xy(4, 3));
  add("lxy 4 4", l_xy(4, 4));
  add("lxy 5 4", l_xy(5, 4));
  for (std::int64_t k : {0, 1, 2, 8, 10}) add("triod " + std::to_string(k), triod(k));
  add("cone_gamma 3 3 0", cone_over_graph(gamma_graph(GammaKind::TwoCircles, 3, 3, 0)));
  add("cone_gamma 3 3 1", cone_over_graph(gamma_graph(GammaKind::TwoCircles, 3, 3, 1)));
  add("cone_theta 3 3 3", cone_over_graph(gamma_graph(GammaKind::Theta, 3, 3, 3)));
  {
    const Face two[] = {Face{1, 2, 3}, Face{2, 3, 4}};
    add("two_triangles_shared_edge", Complex2::from_faces(two));
    const Face apart[] = {Face{1, 2, 3}, Face{4, 5, 6}};
    add("two_triangles_disjoint", Complex2::from_faces(apart));
  }
  add("full2 5", full_two_skeleton(5));
  return out;
}

}  // namespace rcx::catalog

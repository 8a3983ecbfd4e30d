#include "rcx/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "rcx/error.hpp"

namespace rcx {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
std::optional<std::size_t> find_sorted(const std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
  std::vector<std::size_t> parent;
};

}  // namespace

Edge Edge::make(VertexId x, VertexId y) {
  if (x == y)
    throw Error(ErrorCode::DegenerateFace,
                "degenerate edge {" + std::to_string(x) + "," + std::to_string(y) + "}");
  return x < y ? Edge{x, y} : Edge{y, x};
}

Face Face::make(VertexId x, VertexId y, VertexId z) {
  std::array<VertexId, 3> c{x, y, z};
  std::sort(c.begin(), c.end());
  if (c[0] == c[1] || c[1] == c[2])
    throw Error(ErrorCode::DegenerateFace,
                "degenerate face {" + std::to_string(x) + "," + std::to_string(y) +
                    "," + std::to_string(z) + "}");
  return Face{c[0], c[1], c[2]};
}

Graph1 Graph1::from_edges(std::vector<Edge> edges, std::vector<VertexId> extra_vertices) {
  Graph1 g;
  sort_unique(edges);
  g.vertices = std::move(extra_vertices);
  for (const Edge& e : edges) {
    if (e.a >= e.b) throw Error(ErrorCode::DegenerateFace, "edge not normalized");
    g.vertices.push_back(e.a);
    g.vertices.push_back(e.b);
  }
  sort_unique(g.vertices);
  g.edges = std::move(edges);
  return g;
}

std::size_t Graph1::component_count() const {
  DisjointSets ds(vertices.size());
  auto idx = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  std::size_t count = vertices.size();
  for (const Edge& e : edges) {
    std::size_t x = ds.find(idx(e.a));
    std::size_t y = ds.find(idx(e.b));
    if (x != y) {
      ds.unite(x, y);
      --count;
    }
  }
  return count;
}

Complex2::Complex2(std::vector<VertexId> vertices, std::vector<Edge> edges,
                   std::vector<Face> faces)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
  face_edges_.resize(faces_.size());
  std::vector<std::uint32_t> degree(edges_.size(), 0);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    auto fe = faces_[i].edges();
    for (int k = 0; k < 3; ++k) {
      auto idx = find_sorted(edges_, fe[k]);
      if (!idx) throw Error(ErrorCode::UnknownSimplex, "face edge missing from complex");
      face_edges_[i][k] = static_cast<std::uint32_t>(*idx);
      ++degree[*idx];
    }
  }
  edge_face_start_.assign(edges_.size() + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    edge_face_start_[i + 1] = edge_face_start_[i] + degree[i];
  edge_faces_.resize(edge_face_start_.back());
  std::vector<std::uint32_t> fill(edge_face_start_.begin(), edge_face_start_.end() - 1);
  for (std::size_t i = 0; i < faces_.size(); ++i)
    for (std::uint32_t e : face_edges_[i]) edge_faces_[fill[e]++] = static_cast<std::uint32_t>(i);
}

Complex2 Complex2::from_faces(std::span<const Face> faces, std::span<const Edge> extra_edges,
                              std::span<const VertexId> extra_vertices) {
  std::vector<Face> fs;
  fs.reserve(faces.size());
  for (const Face& f : faces) fs.push_back(Face::make(f.a, f.b, f.c));
  std::sort(fs.begin(), fs.end());
  auto dup = std::adjacent_find(fs.begin(), fs.end());
  if (dup != fs.end())
    throw Error(ErrorCode::DuplicateFace,
                "duplicate face {" + std::to_string(dup->a) + "," + std::to_string(dup->b) +
                    "," + std::to_string(dup->c) + "}");

  std::vector<Edge> es;
  es.reserve(3 * fs.size() + extra_edges.size());
  for (const Edge& e : extra_edges) es.push_back(Edge::make(e.a, e.b));
  for (const Face& f : fs)
    for (const Edge& e : f.edges()) es.push_back(e);
  sort_unique(es);

  std::vector<VertexId> vs(extra_vertices.begin(), extra_vertices.end());
  for (const Edge& e : es) {
    vs.push_back(e.a);
    vs.push_back(e.b);
  }
  sort_unique(vs);
  return Complex2(std::move(vs), std::move(es), std::move(fs));
}

Complex2 Complex2::with_skeleton(std::uint32_t n, std::span<const Face> faces) {
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(n) * (n - (n > 0)) / 2);
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = i + 1; j <= n; ++j) es.push_back(Edge{i, j});
  std::vector<VertexId> vs(n);
  std::iota(vs.begin(), vs.end(), VertexId{1});
  for (const Face& f : faces)
    if (f.c > n || f.a == 0)
      throw Error(ErrorCode::UnknownSimplex, "face outside the skeleton vertex range");
  return from_faces(faces, es, vs);
}

Complex2 Complex2::restrict(const std::vector<bool>& keep_face,
                            const std::vector<bool>& drop_edge) const {
  std::vector<Face> fs;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (keep_face[i]) fs.push_back(faces_[i]);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!drop_edge[i]) es.push_back(edges_[i]);
  return Complex2(vertices_, std::move(es), std::move(fs));
}

Complex2 Complex2::pure_part() const { return from_faces(faces_); }

bool Complex2::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> Complex2::vertex_index(VertexId v) const {
  return find_sorted(vertices_, v);
}

std::optional<std::size_t> Complex2::edge_index(const Edge& e) const {
  return find_sorted(edges_, e);
}

std::optional<std::size_t> Complex2::face_index(const Face& f) const {
  return find_sorted(faces_, f);
}

std::int64_t euler_characteristic(const Complex2& s) noexcept {
  return static_cast<std::int64_t>(s.num_vertices()) -
         static_cast<std::int64_t>(s.num_edges()) + static_cast<std::int64_t>(s.num_faces());
}

std::vector<Edge> free_edges(const Complex2& s) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < s.num_edges(); ++i)
    if (s.edge_degree(i) == 1) out.push_back(s.edges()[i]);
  return out;
}

DegreeProfile degree_profile(const Complex2& s) {
  if (s.num_vertices() == 0 || s.num_edges() == 0)
    throw Error(ErrorCode::EmptyComplex, "degree profile needs at least one edge");
  DegreeProfile p;
  p.vertex_degrees.assign(s.num_vertices(), 0);
  for (const Edge& e : s.edges()) {
    ++p.vertex_degrees[*s.vertex_index(e.a)];
    ++p.vertex_degrees[*s.vertex_index(e.b)];
  }
  p.edge_degrees.resize(s.num_edges());
  std::int64_t edge_sum = 0;
  for (std::size_t i = 0; i < s.num_edges(); ++i) {
    p.edge_degrees[i] = s.edge_degree(i);
    edge_sum += p.edge_degrees[i];
  }
  std::int64_t vertex_sum =
      std::accumulate(p.vertex_degrees.begin(), p.vertex_degrees.end(), std::int64_t{0});
  p.mean_vertex_degree = Rational(vertex_sum, static_cast<std::int64_t>(s.num_vertices()));
  p.mean_edge_degree = Rational(edge_sum, static_cast<std::int64_t>(s.num_edges()));
  return p;
}

Graph1 link_graph(const Complex2& s, VertexId u) {
  if (!s.has_vertex(u))
    throw Error(ErrorCode::UnknownSimplex, "vertex " + std::to_string(u) + " not in complex");
  std::vector<VertexId> nbrs;
  for (const Edge& e : s.edges()) {
    if (e.a == u) nbrs.push_back(e.b);
    if (e.b == u) nbrs.push_back(e.a);
  }
  std::vector<Edge> es;
  for (const Face& f : s.faces()) {
    if (!f.contains(u)) continue;
    if (f.a == u) es.push_back(Edge{f.b, f.c});
    else if (f.b == u) es.push_back(Edge{f.a, f.c});
    else es.push_back(Edge{f.a, f.b});
  }
  return Graph1::from_edges(std::move(es), std::move(nbrs));
}

std::vector<std::int64_t> dual_distances(const Complex2& s, std::size_t from) {
  std::vector<std::int64_t> dist(s.num_faces(), -1);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    std::size_t f = queue.front();
    queue.pop_front();
    for (std::uint32_t e : s.edges_of_face(f))
      for (std::uint32_t g : s.faces_of_edge(e))
        if (dist[g] < 0) {
          dist[g] = dist[f] + 1;
          queue.push_back(g);
        }
  }
  return dist;
}

StrongComponents strong_components_and_diameter(const Complex2& s) {
  StrongComponents out;
  const std::size_t nf = s.num_faces();
  DisjointSets ds(nf);
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    auto fs = s.faces_of_edge(e);
    for (std::size_t k = 1; k < fs.size(); ++k) ds.unite(fs[0], fs[k]);
  }
  std::vector<std::size_t> slot(nf, SIZE_MAX);
  for (std::size_t f = 0; f < nf; ++f) {
    std::size_t root = ds.find(f);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.components.size();
      out.components.emplace_back();
    }
    out.components[slot[root]].push_back(f);
  }
  for (const auto& comp : out.components) {
    std::int64_t diam = 0;
    for (std::size_t f : comp) {
      auto dist = dual_distances(s, f);
      for (std::size_t g : comp) diam = std::max(diam, dist[g]);
    }
    out.diameters.push_back(static_cast<std::uint32_t>(diam));
  }
  out.strongly_connected = out.components.size() == 1;
  return out;
}

ClassifyFlags classify(const Complex2& s) {
  ClassifyFlags flags;
  if (s.num_faces() == 0) {
    flags.pure = s.empty();
    flags.closed = true;
    flags.diameter = 0;
    return flags;
  }
  bool every_edge_covered = true;
  bool degree_at_most_two = true;
  bool closed = true;
  for (std::size_t i = 0; i < s.num_edges(); ++i) {
    std::uint32_t d = s.edge_degree(i);
    every_edge_covered = every_edge_covered && d > 0;
    degree_at_most_two = degree_at_most_two && d <= 2;
    closed = closed && d != 1;
  }
  // Every vertex lies on an edge once edges are covered iff no isolated vertex.
  std::vector<bool> on_edge(s.num_vertices(), false);
  for (const Edge& e : s.edges()) {
    on_edge[*s.vertex_index(e.a)] = true;
    on_edge[*s.vertex_index(e.b)] = true;
  }
  bool no_isolated = std::all_of(on_edge.begin(), on_edge.end(), [](bool b) { return b; });

  auto comps = strong_components_and_diameter(s);
  flags.pure = every_edge_covered && no_isolated;
  flags.closed = closed;
  flags.strongly_connected = comps.strongly_connected;
  if (comps.strongly_connected) flags.diameter = comps.diameters.front();
  flags.pseudo_surface = flags.pure && flags.strongly_connected && degree_at_most_two;
  return flags;
}

bool is_closed_surface_combinatorially(const Complex2& s) {
  if (s.num_faces() == 0) return false;
  for (std::size_t i = 0; i < s.num_edges(); ++i)
    if (s.edge_degree(i) != 2) return false;
  for (VertexId v : s.vertices()) {
    Graph1 link = link_graph(s, v);
    if (link.edges.empty() || link.edges.size() != link.vertices.size()) return false;
    // Every link vertex must have degree exactly 2 and the link must be connected.
    std::vector<int> deg(link.vertices.size(), 0);
    for (const Edge& e : link.edges) {
      ++deg[std::lower_bound(link.vertices.begin(), link.vertices.end(), e.a) -
            link.vertices.begin()];
      ++deg[std::lower_bound(link.vertices.begin(), link.vertices.end(), e.b) -
            link.vertices.begin()];
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; })) return false;
    if (link.component_count() != 1) return false;
  }
  return strong_components_and_diameter(s).strongly_connected;
}

}  // namespace rcx

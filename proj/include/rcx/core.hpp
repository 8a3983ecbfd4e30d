#pragma once

// Finite 2-dimensional simplicial complexes and their basic combinatorics.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rcx/rational.hpp"

namespace rcx {

using VertexId = std::uint32_t;

/// 1-simplex stored with a < b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  /// Normalizes the endpoint order; throws DegenerateFace when x == y.
  static Edge make(VertexId x, VertexId y);

  bool contains(VertexId v) const noexcept { return a == v || b == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// 2-simplex stored with a < b < c.
struct Face {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  /// Sorts the corners; throws DegenerateFace on a repeated vertex.
  static Face make(VertexId x, VertexId y, VertexId z);

  std::array<VertexId, 3> corners() const noexcept { return {a, b, c}; }
  /// Sub-edges in sorted order: {a,b}, {a,c}, {b,c}.
  std::array<Edge, 3> edges() const noexcept {
    return {Edge{a, b}, Edge{a, c}, Edge{b, c}};
  }
  bool contains(VertexId v) const noexcept { return a == v || b == v || c == v; }

  friend auto operator<=>(const Face&, const Face&) = default;
};

/// Simple graph; vertices and edges sorted.
struct Graph1 {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;

  /// Builds a graph from edges, adding endpoints to the vertex set.
  static Graph1 from_edges(std::vector<Edge> edges,
                           std::vector<VertexId> extra_vertices = {});

  std::int64_t euler_characteristic() const noexcept {
    return static_cast<std::int64_t>(vertices.size()) -
           static_cast<std::int64_t>(edges.size());
  }
  std::size_t component_count() const;

  friend bool operator==(const Graph1&, const Graph1&) = default;
};

/// Immutable finite 2-complex closed under taking faces.
///
/// Vertices, edges and faces are kept in sorted order; every query on the
/// complex is a const function, so instances can be shared across threads.
class Complex2 {
 public:
  Complex2() = default;

  /// Closure of the given simplexes. Rejects a face listed twice.
  static Complex2 from_faces(std::span<const Face> faces,
                             std::span<const Edge> extra_edges = {},
                             std::span<const VertexId> extra_vertices = {});

  /// Full 1-skeleton on {1..n} plus the given faces.
  static Complex2 with_skeleton(std::uint32_t n, std::span<const Face> faces);

  /// Subcomplex keeping the faces flagged in `keep_face` and all edges not
  /// flagged in `drop_edge`. The caller guarantees that no kept face loses
  /// one of its edges; vertices are always kept.
  Complex2 restrict(const std::vector<bool>& keep_face,
                    const std::vector<bool>& drop_edge) const;

  /// The union of all faces (the pure part).
  Complex2 pure_part() const;

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_faces() const noexcept { return faces_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  bool has_vertex(VertexId v) const;
  std::optional<std::size_t> vertex_index(VertexId v) const;
  std::optional<std::size_t> edge_index(const Edge& e) const;
  std::optional<std::size_t> face_index(const Face& f) const;

  /// Largest vertex label, 0 for the empty complex.
  VertexId max_label() const noexcept {
    return vertices_.empty() ? 0 : vertices_.back();
  }

  /// Number of faces containing edge i.
  std::uint32_t edge_degree(std::size_t i) const noexcept {
    return edge_face_start_[i + 1] - edge_face_start_[i];
  }
  /// Indices of faces containing edge i.
  std::span<const std::uint32_t> faces_of_edge(std::size_t i) const noexcept {
    return {edge_faces_.data() + edge_face_start_[i], edge_degree(i)};
  }
  /// Edge indices of face i, in the order of Face::edges().
  const std::array<std::uint32_t, 3>& edges_of_face(std::size_t i) const noexcept {
    return face_edges_[i];
  }

  friend bool operator==(const Complex2& x, const Complex2& y) noexcept {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_ &&
           x.faces_ == y.faces_;
  }

 private:
  // Takes sorted, deduplicated, closed parts.
  Complex2(std::vector<VertexId> vertices, std::vector<Edge> edges,
           std::vector<Face> faces);

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::array<std::uint32_t, 3>> face_edges_;
  std::vector<std::uint32_t> edge_face_start_{0};
  std::vector<std::uint32_t> edge_faces_;
};

std::int64_t euler_characteristic(const Complex2& s) noexcept;

/// Edges contained in exactly one face.
std::vector<Edge> free_edges(const Complex2& s);

struct DegreeProfile {
  std::vector<std::uint32_t> vertex_degrees;  // incident edges, per vertex index
  std::vector<std::uint32_t> edge_degrees;    // incident faces, per edge index
  Rational mean_vertex_degree;                // D_v
  Rational mean_edge_degree;                  // D_e
};

/// Throws EmptyComplex when the complex has no vertices or no edges.
DegreeProfile degree_profile(const Complex2& s);

/// Link of u: vertices are the neighbours of u, edges {a,b} for faces {u,a,b}.
/// Throws UnknownSimplex if u is not a vertex.
Graph1 link_graph(const Complex2& s, VertexId u);

/// Strong components of the face adjacency (shared edge) relation.
struct StrongComponents {
  std::vector<std::vector<std::size_t>> components;  // face indices, sorted
  std::vector<std::uint32_t> diameters;              // per component
  bool strongly_connected = false;                   // one component with f >= 1
};

StrongComponents strong_components_and_diameter(const Complex2& s);

/// Distances from face `from` in the dual graph; -1 marks unreachable faces.
std::vector<std::int64_t> dual_distances(const Complex2& s, std::size_t from);

struct ClassifyFlags {
  bool pure = false;
  bool closed = false;
  bool strongly_connected = false;
  bool pseudo_surface = false;
  std::optional<std::uint32_t> diameter;  // nullopt means infinite
};

ClassifyFlags classify(const Complex2& s);

/// True when every vertex link is a single cycle and every edge has degree 2.
bool is_closed_surface_combinatorially(const Complex2& s);

}  // namespace rcx

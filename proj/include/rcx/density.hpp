#pragma once

// Vertex-per-face density mu(S) = v/f, its minimum over subcomplexes, and the
// closed-form density bounds for special classes of complexes.

#include <cstdint>
#include <functional>
#include <vector>

#include "rcx/core.hpp"
#include "rcx/rational.hpp"

namespace rcx {

/// Exhaustive enumeration limit, in faces, for mu_tilde_oracle.
inline constexpr std::size_t kOracleMaxFaces = 22;

/// v/f. Throws NoFaces when f == 0.
Rational mu(const Complex2& s);

struct MuTilde {
  Rational value;
  std::vector<Face> witness;  // a face set attaining the minimum
};

/// Minimum of |V(F')|/|F'| over all nonempty face subsets F', by Gray-code
/// enumeration. Throws NoFaces or TooLargeForOracle (f > kOracleMaxFaces).
MuTilde mu_tilde_oracle(const Complex2& s);

/// Same minimum computed by Dinkelbach iteration; each round solves a
/// project-selection min cut in exact integer capacities.
MuTilde mu_tilde_flow(const Complex2& s);

/// mu_tilde(S) == mu(S). Throws NoFaces when f == 0.
bool is_balanced(const Complex2& s);

struct DensityReport {
  Rational mu;
  Rational mu_tilde;
  std::vector<Face> witness_faces;
  bool balanced = false;
  int sign = 0;  // sign(mu_tilde - 1/2)
};

DensityReport density_report(const Complex2& s);

/// Calls visit(vertex_count, face_count, mask) for every nonempty subset of
/// faces; bit i of mask selects s.faces()[i]. Throws TooLargeForOracle when
/// f > kOracleMaxFaces.
void for_each_face_subset(
    const Complex2& s,
    const std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)>& visit);

std::vector<Face> faces_from_mask(const Complex2& s, std::uint32_t mask);

namespace bounds {

/// mu(S) * D_v(S) * D_e(S); equals 6 whenever v, e, f >= 1.
Rational degree_identity_product(const Complex2& s);

/// Upper bound 1 + 2/f for strongly connected complexes with f faces.
Rational strongly_connected_mu_bound(std::int64_t faces);

/// 1 + (4 - v0)/(f1 + f2): bound on mu(S1 u S2) for strongly connected S1, S2
/// meeting in at most a graph with v0 vertices.
Rational union_mu_bound(std::int64_t shared_vertices, std::int64_t f1, std::int64_t f2);

/// 1/2 - 1/(2f): bound for connected pure closed complexes with chi = 1 and at
/// least three edges of degree >= 3.
Rational closed_euler_one_mu_bound(std::int64_t faces);

/// Closed orientable surface of genus g with f faces: 1/2 + (2 - 2g)/f.
Rational orientable_surface_mu(std::int64_t genus, std::int64_t faces);

/// Closed nonorientable surface of genus g with f faces: 1/2 + (2 - g)/f.
Rational nonorientable_surface_mu(std::int64_t genus, std::int64_t faces);

/// Triangulated disk with e0 boundary edges: 1/2 + e0/(2f) + 1/f.
Rational disk_mu(std::int64_t boundary_edges, std::int64_t faces);

/// Connected pure subcomplex with b2 = 0: 1/2 + (1 - b1)/f + e0/(2f).
Rational acyclic_top_mu(std::int64_t b1, std::int64_t boundary_edges, std::int64_t faces);

/// Cone over a graph: (v + 1)/e. Throws NoFaces for an edgeless graph.
Rational cone_mu(const Graph1& g);

}  // namespace bounds

}  // namespace rcx

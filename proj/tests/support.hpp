#pragma once

// Helpers shared by the test binaries. Oracles here are written against the
// raw face lists so they do not depend on the code under test.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "rcx/catalog.hpp"
#include "rcx/core.hpp"
#include "rcx/rational.hpp"

namespace rcx::test {

inline Complex2 complex_of(std::initializer_list<std::array<VertexId, 3>> triples) {
  std::vector<Face> faces;
  for (const auto& t : triples) faces.push_back(Face::make(t[0], t[1], t[2]));
  return Complex2::from_faces(faces);
}

inline Complex2 tetrahedron() { return complex_of({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}); }

inline Complex2 two_triangles_sharing_edge() { return complex_of({{1, 2, 3}, {2, 3, 4}}); }

inline Complex2 two_disjoint_triangles() { return complex_of({{1, 2, 3}, {4, 5, 6}}); }

inline Complex2 fan(VertexId n) {
  std::vector<Face> faces;
  for (VertexId i = 1; i <= n; ++i) faces.push_back(Face::make(n + 1, i, i % n + 1));
  return Complex2::from_faces(faces);
}

// Minimum of |V(F')| / |F'| by direct enumeration of face bitmasks.
inline Rational brute_mu_tilde(const std::vector<Face>& faces) {
  const std::size_t f = faces.size();
  Rational best(1000000);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f); ++mask) {
    std::set<VertexId> vs;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < f; ++i) {
      if (!(mask >> i & 1)) continue;
      ++count;
      vs.insert({faces[i].a, faces[i].b, faces[i].c});
    }
    best = std::min(best, Rational(static_cast<std::int64_t>(vs.size()), count));
  }
  return best;
}

// Rank over the rationals by Gauss-Jordan elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == Rational(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == Rational(0)) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Rank over GF(2) of a 0/1 matrix.
inline std::size_t gf2_rank(std::vector<std::vector<int>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && (m[piv][c] & 1) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && (m[r][c] & 1))
        for (std::size_t k = c; k < cols; ++k) m[r][k] ^= m[rank][k] & 1;
    ++rank;
  }
  return rank;
}

}  // namespace rcx::test

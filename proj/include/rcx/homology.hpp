#pragma once

// Simplicial chain complex of a 2-complex and its homology over Z, Q and Z/2.

#include <cstdint>
#include <vector>

#include "rcx/core.hpp"

namespace rcx {

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct BoundaryMatrices {
  IntMatrix d2;  // edges x faces
  IntMatrix d1;  // vertices x edges
};

/// Rows and columns follow the sorted simplex order of the complex; simplexes
/// carry the increasing-vertex orientation.
BoundaryMatrices boundary_matrices(const Complex2& s);

struct SmithForm {
  std::vector<std::int64_t> invariant_factors;  // nonzero diagonal, d1 | d2 | ...
  std::size_t rank = 0;
};

/// Smith normal form by integer elimination, pivoting on the entry of smallest
/// absolute value. Runs in 64-bit arithmetic and transparently retries with
/// arbitrary precision if an intermediate entry overflows.
SmithForm smith_normal_form(const IntMatrix& m);

/// Rank over the two-element field (bitset elimination).
std::size_t rank_mod2(const IntMatrix& m);

struct HomologyProfile {
  std::int64_t b0 = 0, b1 = 0, b2 = 0;        // rational Betti numbers
  std::int64_t b0_mod2 = 0, b1_mod2 = 0, b2_mod2 = 0;
  std::vector<std::int64_t> torsion_h1;       // invariant factors >= 2
  std::int64_t chi = 0;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology_profile(const Complex2& s);

/// Requires a connected closed surface (pseudo-surface, all edge degrees 2,
/// every vertex link one cycle); throws NotAClosedSurface otherwise.
bool is_orientable_closed_surface(const Complex2& s);

}  // namespace rcx

#pragma once

// Simplicial collapse: repeated removal of free faces together with one free
// edge each, until a graph or a closed 2-dimensional core remains.

#include <cstdint>
#include <vector>

#include "rcx/core.hpp"

namespace rcx {

/// Faces with at least one edge of face-degree 1.
std::vector<Face> free_faces(const Complex2& s);

/// One simultaneous collapse of every free face. Faces are visited in sorted
/// order and each takes its smallest free edge that no earlier face in the
/// same sweep has taken; a face left without one waits for the next sweep.
/// Throws NothingToCollapse when there is no free face.
Complex2 collapse_step(const Complex2& s);

enum class CollapseKind { Graph, ClosedCore };

const char* collapse_kind_name(CollapseKind kind) noexcept;

struct CollapseOutcome {
  CollapseKind kind = CollapseKind::Graph;
  std::uint32_t steps = 0;
  Complex2 core;
  std::vector<std::uint32_t> face_counts_per_step;  // starts with the input f
  std::vector<std::int64_t> euler_per_step;         // chi after each entry above
};

CollapseOutcome collapse_to_core(const Complex2& s);

}  // namespace rcx

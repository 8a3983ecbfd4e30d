#pragma once

#include <cstdint>

#include "rcx/core.hpp"

namespace rcx {

/// Center-point subdivision applied `rounds` times. Each round replaces face
/// {a,b,c} by {a,b,m}, {a,c,m}, {b,c,m} where m is a new vertex labelled
/// max_label + (1-based rank of the face in sorted order). All simplexes of
/// dimension <= 1 are kept. Throws InvalidParameter when rounds == 0.
Complex2 center_subdivide(const Complex2& s, std::uint32_t rounds = 1);

}  // namespace rcx

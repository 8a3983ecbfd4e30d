#pragma once

// Plain-text complex format, one simplex per line:
//
//   skeleton n     full 1-skeleton on {1..n}
//   f a b c        face
//   e a b          edge
//   v a            vertex
//   # ...          comment
//
// Closure is recomputed on load.

#include <iosfwd>
#include <string>

#include "rcx/core.hpp"

namespace rcx {

/// Throws ParseError ("line N: ...") on malformed input and on duplicate or
/// degenerate faces.
Complex2 read_complex(std::istream& in);
Complex2 read_complex_file(const std::string& path);
Complex2 parse_complex(const std::string& text);

/// Canonical form: a `skeleton n` header when the vertices are {1..n}, every
/// pair is an edge and some edge lies in no face; then `v` lines for
/// vertices in no edge, `e` lines for edges in no face, and `f` lines, all
/// sorted.
void write_complex(std::ostream& out, const Complex2& s);
void write_complex_file(const std::string& path, const Complex2& s);
std::string format_complex(const Complex2& s);

}  // namespace rcx

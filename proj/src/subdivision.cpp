#include "rcx/subdivision.hpp"

#include "rcx/error.hpp"

namespace rcx {

namespace {

Complex2 subdivide_once(const Complex2& s) {
  if (s.num_faces() == 0) return s;
  const VertexId base = s.max_label();
  std::vector<Face> faces;
  faces.reserve(3 * s.num_faces());
  for (std::size_t i = 0; i < s.num_faces(); ++i) {
    const Face& f = s.faces()[i];
    const VertexId m = base + static_cast<VertexId>(i) + 1;
    faces.push_back(Face::make(f.a, f.b, m));
    faces.push_back(Face::make(f.a, f.c, m));
    faces.push_back(Face::make(f.b, f.c, m));
  }
  return Complex2::from_faces(faces, s.edges(), s.vertices());
}

}  // namespace

Complex2 center_subdivide(const Complex2& s, std::uint32_t rounds) {
  if (rounds == 0) throw Error(ErrorCode::InvalidParameter, "subdivision rounds must be >= 1");
  Complex2 out = subdivide_once(s);
  for (std::uint32_t r = 1; r < rounds; ++r) out = subdivide_once(out);
  return out;
}

}  // namespace rcx

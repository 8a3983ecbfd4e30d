#include "rcx/density.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "maxflow.hpp"
#include "rcx/error.hpp"

namespace rcx {

namespace {

void require_faces(const Complex2& s) {
  if (s.num_faces() == 0) throw Error(ErrorCode::NoFaces, "complex has no faces");
}

// Faces re-expressed over dense local vertex indices of the pure part.
struct LocalFaces {
  std::vector<std::array<std::uint32_t, 3>> corners;
  std::size_t vertex_count = 0;
};

LocalFaces localize(const Complex2& s) {
  std::vector<VertexId> used;
  for (const Face& f : s.faces())
    for (VertexId v : f.corners()) used.push_back(v);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  LocalFaces out;
  out.vertex_count = used.size();
  for (const Face& f : s.faces()) {
    std::array<std::uint32_t, 3> c{};
    auto corners = f.corners();
    for (int k = 0; k < 3; ++k)
      c[k] = static_cast<std::uint32_t>(
          std::lower_bound(used.begin(), used.end(), corners[k]) - used.begin());
    out.corners.push_back(c);
  }
  return out;
}

std::uint32_t covered_vertices(const LocalFaces& lf, const std::vector<bool>& chosen) {
  std::vector<bool> hit(lf.vertex_count, false);
  std::uint32_t n = 0;
  for (std::size_t i = 0; i < lf.corners.size(); ++i) {
    if (!chosen[i]) continue;
    for (std::uint32_t v : lf.corners[i])
      if (!hit[v]) {
        hit[v] = true;
        ++n;
      }
  }
  return n;
}

}  // namespace

Rational mu(const Complex2& s) {
  require_faces(s);
  return Rational(static_cast<std::int64_t>(s.num_vertices()),
                  static_cast<std::int64_t>(s.num_faces()));
}

void for_each_face_subset(
    const Complex2& s,
    const std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)>& visit) {
  const std::size_t f = s.num_faces();
  if (f > kOracleMaxFaces)
    throw Error(ErrorCode::TooLargeForOracle,
                "subset enumeration is limited to " + std::to_string(kOracleMaxFaces) +
                    " faces, got " + std::to_string(f));
  if (f == 0) return;
  const LocalFaces lf = localize(s);
  std::vector<std::uint32_t> cover(lf.vertex_count, 0);
  std::uint32_t vertices = 0;
  std::uint32_t faces = 0;
  std::uint32_t mask = 0;
  const std::uint32_t total = std::uint32_t{1} << f;
  for (std::uint32_t i = 1; i < total; ++i) {
    // Gray code: step i flips face ctz(i).
    const int bit = __builtin_ctz(i);
    mask ^= std::uint32_t{1} << bit;
    if (mask & (std::uint32_t{1} << bit)) {
      ++faces;
      for (std::uint32_t v : lf.corners[bit])
        if (cover[v]++ == 0) ++vertices;
    } else {
      --faces;
      for (std::uint32_t v : lf.corners[bit])
        if (--cover[v] == 0) --vertices;
    }
    visit(vertices, faces, mask);
  }
}

std::vector<Face> faces_from_mask(const Complex2& s, std::uint32_t mask) {
  std::vector<Face> out;
  for (std::size_t i = 0; i < s.num_faces(); ++i)
    if (mask & (std::uint32_t{1} << i)) out.push_back(s.faces()[i]);
  return out;
}

MuTilde mu_tilde_oracle(const Complex2& s) {
  require_faces(s);
  std::uint32_t best_v = 0, best_f = 0, best_mask = 0;
  for_each_face_subset(s, [&](std::uint32_t v, std::uint32_t f, std::uint32_t mask) {
    // v/f < best_v/best_f
    if (best_f == 0 || static_cast<std::uint64_t>(v) * best_f <
                           static_cast<std::uint64_t>(best_v) * f) {
      best_v = v;
      best_f = f;
      best_mask = mask;
    }
  });
  return {Rational(best_v, best_f), faces_from_mask(s, best_mask)};
}

MuTilde mu_tilde_flow(const Complex2& s) {
  require_faces(s);
  const LocalFaces lf = localize(s);
  const std::size_t nf = lf.corners.size();
  const std::size_t nv = lf.vertex_count;
  const std::size_t source = nf + nv;
  const std::size_t sink = source + 1;

  Rational lambda = mu(s);
  std::vector<bool> witness(nf, true);

  for (;;) {
    const std::int64_t face_gain = lambda.num();   // per selected face
    const std::int64_t vertex_cost = lambda.den();  // per covered vertex
    const std::int64_t infinite = 1 + vertex_cost * static_cast<std::int64_t>(nv);

    detail::MaxFlow net(nf + nv + 2);
    for (std::size_t i = 0; i < nf; ++i) {
      net.add_arc(source, i, face_gain);
      for (std::uint32_t v : lf.corners[i]) net.add_arc(i, nf + v, infinite);
    }
    for (std::size_t v = 0; v < nv; ++v) net.add_arc(nf + v, sink, vertex_cost);

    const std::int64_t cut = net.run(source, sink);
    // max over F' of gain*|F'| - cost*|V(F')|
    const std::int64_t best = face_gain * static_cast<std::int64_t>(nf) - cut;
    if (best <= 0) break;

    const auto side = net.source_side(source);
    std::vector<bool> chosen(side.begin(), side.begin() + static_cast<std::ptrdiff_t>(nf));
    const auto f = static_cast<std::int64_t>(std::count(chosen.begin(), chosen.end(), true));
    const Rational next(covered_vertices(lf, chosen), f);
    if (!(next < lambda)) break;  // unreachable with exact capacities
    lambda = next;
    witness = std::move(chosen);
  }

  std::vector<Face> faces;
  for (std::size_t i = 0; i < nf; ++i)
    if (witness[i]) faces.push_back(s.faces()[i]);
  // The starting value mu(S) may count isolated vertices; report the witness ratio.
  Rational value(covered_vertices(lf, witness), static_cast<std::int64_t>(faces.size()));
  return {std::min(value, lambda), std::move(faces)};
}

bool is_balanced(const Complex2& s) { return mu_tilde_flow(s).value == mu(s); }

DensityReport density_report(const Complex2& s) {
  DensityReport r;
  r.mu = mu(s);
  auto mt = mu_tilde_flow(s);
  r.mu_tilde = mt.value;
  r.witness_faces = std::move(mt.witness);
  r.balanced = r.mu_tilde == r.mu;
  r.sign = (r.mu_tilde - Rational(1, 2)).sign();
  return r;
}

namespace bounds {

Rational degree_identity_product(const Complex2& s) {
  const auto profile = degree_profile(s);
  return mu(s) * profile.mean_vertex_degree * profile.mean_edge_degree;
}

Rational strongly_connected_mu_bound(std::int64_t faces) {
  return Rational(1) + Rational(2, faces);
}

Rational union_mu_bound(std::int64_t shared_vertices, std::int64_t f1, std::int64_t f2) {
  return Rational(1) + Rational(4 - shared_vertices, f1 + f2);
}

Rational closed_euler_one_mu_bound(std::int64_t faces) {
  return Rational(1, 2) - Rational(1, 2 * faces);
}

Rational orientable_surface_mu(std::int64_t genus, std::int64_t faces) {
  return Rational(1, 2) + Rational(2 - 2 * genus, faces);
}

Rational nonorientable_surface_mu(std::int64_t genus, std::int64_t faces) {
  return Rational(1, 2) + Rational(2 - genus, faces);
}

Rational disk_mu(std::int64_t boundary_edges, std::int64_t faces) {
  return Rational(1, 2) + Rational(boundary_edges, 2 * faces) + Rational(1, faces);
}

Rational acyclic_top_mu(std::int64_t b1, std::int64_t boundary_edges, std::int64_t faces) {
  return Rational(1, 2) + Rational(1 - b1, faces) + Rational(boundary_edges, 2 * faces);
}

Rational cone_mu(const Graph1& g) {
  if (g.edges.empty()) throw Error(ErrorCode::NoFaces, "cone over an edgeless graph");
  return Rational(static_cast<std::int64_t>(g.vertices.size()) + 1,
                  static_cast<std::int64_t>(g.edges.size()));
}

}  // namespace bounds

}  // namespace rcx

#include <doctest.h>

#include <cmath>

#include "rcx/catalog.hpp"
#include "rcx/error.hpp"
#include "rcx/patterns.hpp"
#include "rcx/sampler.hpp"
#include "support.hpp"

using namespace rcx;
using catalog::SurfaceKind;

namespace {

// All maps pattern -> host (injective when `injective`), checked against the
// definitions directly from the face lists.
struct Brute {
  std::uint64_t embeddings = 0;
  bool immersion = false;
};

Brute brute_force(const Complex2& pattern, const Complex2& host) {
  const auto& pv = pattern.vertices();
  const auto& hv = host.vertices();
  std::set<Face> host_faces(host.faces().begin(), host.faces().end());
  Brute out;
  std::vector<std::size_t> pick(pv.size(), 0);
  while (true) {
    std::map<VertexId, VertexId> g;
    for (std::size_t i = 0; i < pv.size(); ++i) g[pv[i]] = hv[pick[i]];
    std::set<VertexId> images;
    for (auto& [k, v] : g) images.insert(v);
    bool faces_ok = true;
    std::set<Face> targets;
    for (const Face& f : pattern.faces()) {
      const VertexId x = g[f.a], y = g[f.b], z = g[f.c];
      if (x == y || y == z || x == z) {
        faces_ok = false;
        break;
      }
      const Face t = Face::make(x, y, z);
      if (!host_faces.count(t) || !targets.insert(t).second) {
        faces_ok = false;
        break;
      }
    }
    if (faces_ok) {
      out.immersion = true;
      if (images.size() == pv.size()) ++out.embeddings;
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == hv.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("immersion examples") {
  const auto tri = catalog::triangle();
  const auto host = Complex2::with_skeleton(6, std::vector<Face>{{2, 4, 6}});
  const auto m = find_immersion(tri, host);
  REQUIRE(m.has_value());
  CHECK(is_valid_map(tri, host, *m));

  const auto three = test::complex_of({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  CHECK_FALSE(find_immersion(test::tetrahedron(), three).has_value());

  // Each vertex link in the 7-vertex torus is a 6-cycle, so the fans of
  // L(x, y) close up only for x = y = 6.
  const auto torus = catalog::closed_surface(SurfaceKind::Torus7);
  const auto l66 = catalog::l_xy(6, 6);
  const auto w = find_immersion(l66, torus);
  REQUIRE(w.has_value());
  CHECK(is_valid_map(l66, torus, *w));
  CHECK_FALSE(find_embedding(l66, torus).has_value());
  CHECK_FALSE(find_immersion(catalog::l_xy(4, 4), torus).has_value());
  CHECK_FALSE(find_immersion(catalog::l_xy(5, 6), torus).has_value());

  const auto rp2 = catalog::closed_surface(SurfaceKind::Rp2_6);
  CHECK(find_immersion(catalog::l_xy(5, 5), rp2).has_value());
}

TEST_CASE("embedding examples") {
  const auto tet = test::tetrahedron();
  const auto full5 = catalog::full_two_skeleton(5);
  const auto e = find_embedding(tet, full5);
  REQUIRE(e.has_value());
  CHECK(is_valid_map(tet, full5, *e));
  CHECK(find_embedding(tet, tet).has_value());
  CHECK(count_embeddings(tet, tet) == 24);
  const auto torus = catalog::closed_surface(SurfaceKind::Torus7);
  CHECK_FALSE(find_embedding(torus, full5).has_value());
  CHECK_FALSE(find_embedding(torus, tet).has_value());
  CHECK(find_embedding(torus, torus).has_value());
}

TEST_CASE("counting embeddings") {
  const auto tri = catalog::triangle();
  CHECK(count_embeddings(tri, tri) == 6);
  for (std::int64_t n = 4; n <= 8; ++n)
    CHECK(count_embeddings(test::tetrahedron(), catalog::full_two_skeleton(n)) ==
          static_cast<std::uint64_t>(n * (n - 1) * (n - 2) * (n - 3)));
  CHECK(count_embeddings(test::tetrahedron(), catalog::full_two_skeleton(5)) == 120);
  CHECK(count_embeddings(test::tetrahedron(), Complex2::with_skeleton(8, {})) == 0);

  const auto torus = catalog::closed_surface(SurfaceKind::Torus7);
  CHECK(count_embeddings(torus, torus) == 42);

  // A vertex outside every face can go to any unused host vertex.
  const auto lonely = Complex2::from_faces(std::vector<Face>{{1, 2, 3}}, {}, std::vector<VertexId>{4});
  CHECK(count_embeddings(lonely, catalog::full_two_skeleton(6)) == 120 * 3);
}

TEST_CASE("patterns without faces are refused") {
  const auto graph = Complex2::with_skeleton(3, {});
  CHECK_THROWS_AS(find_embedding(graph, catalog::triangle()), Error);
  CHECK_THROWS_AS(find_immersion(graph, catalog::triangle()), Error);
  CHECK_THROWS_AS(count_embeddings(graph, catalog::triangle()), Error);
}

TEST_CASE("first moment formulas") {
  const auto tet = test::tetrahedron();
  CHECK(expected_embedding_count(tet, 5, 1.0).embeddings == doctest::Approx(120));
  CHECK(expected_embedding_count(tet, 30, 0.1).embeddings == doctest::Approx(65.772));
  CHECK(expected_embedding_count(tet, 30, 0.1).immersion_bound == doctest::Approx(81.0));
  CHECK(expected_embedding_count(tet, 30, 0.0).embeddings == 0.0);
  CHECK(expected_embedding_count(tet, 3, 0.5).embeddings == 0.0);
  const auto tri = catalog::triangle();
  CHECK(non_embedding_curve(tri, 10.0, 0.5) == doctest::Approx(1.0 / (1000 * 0.5)));
  // Two faces sharing an edge: subsets {a}, {b}, {a, b}.
  const auto two = test::two_triangles_sharing_edge();
  const double expect = 2.0 / (1000 * 0.5) + 1.0 / (10000 * 0.25);
  CHECK(non_embedding_curve(two, 10.0, 0.5) == doctest::Approx(expect));
}

TEST_CASE("search agrees with brute force on small patterns and hosts") {
  std::vector<Complex2> patterns{catalog::triangle(), test::two_triangles_sharing_edge(),
                                 test::tetrahedron(), test::complex_of({{1, 2, 3}, {1, 3, 4}, {1, 2, 4}}),
                                 test::complex_of({{1, 2, 3}, {1, 2, 4}}),
                                 Complex2::from_faces(std::vector<Face>{{1, 2, 3}}, {}, std::vector<VertexId>{4})};
  for (std::uint64_t i = 0; i < 30; ++i) {
    const std::uint32_t n = 4 + static_cast<std::uint32_t>(i % 3);
    const auto host = sample_complex({n, 0.3 + 0.1 * static_cast<double>(i % 5), trial_seed(3, i)});
    for (const auto& pattern : patterns) {
      CAPTURE(i);
      const auto truth = brute_force(pattern, host);
      CHECK(count_embeddings(pattern, host) == truth.embeddings);
      const auto e = find_embedding(pattern, host);
      CHECK(e.has_value() == (truth.embeddings > 0));
      if (e) CHECK(is_valid_map(pattern, host, *e));
      const auto m = find_immersion(pattern, host);
      CHECK(m.has_value() == truth.immersion);
      if (m) CHECK(is_valid_map(pattern, host, *m));
    }
  }
}

TEST_CASE("pinched patterns immerse without embedding") {
  // Two triangles meeting only in vertex 1; the host has four vertices, so
  // any image must reuse one.
  const auto bowtie = test::complex_of({{1, 2, 3}, {1, 4, 5}});
  const auto host = test::complex_of({{1, 2, 3}, {1, 3, 4}});
  const auto truth = brute_force(bowtie, host);
  CHECK(truth.immersion);
  CHECK(truth.embeddings == 0);
  CHECK(find_immersion(bowtie, host).has_value());
  CHECK_FALSE(find_embedding(bowtie, host).has_value());
}

TEST_CASE("embeddings are immersions and restrictions stay immersions") {
  auto check_restrictions = [](const Complex2& pattern, const Complex2& host, const VertexMap& g) {
    const std::size_t f = pattern.num_faces();
    for (std::size_t drop = 0; drop < f; ++drop) {
      std::vector<Face> kept;
      for (std::size_t i = 0; i < f; ++i)
        if (i != drop) kept.push_back(pattern.faces()[i]);
      if (kept.empty()) continue;
      const auto sub = Complex2::from_faces(kept);
      VertexMap r{{}, MapKind::Immersion};
      for (VertexId v : sub.vertices()) r.assignment[v] = g.assignment.at(v);
      CHECK(is_valid_map(sub, host, r));
    }
  };
  for (const auto& [name, s] : catalog::fixtures()) {
    if (s.num_faces() == 0 || s.num_faces() > 30) continue;
    CAPTURE(name);
    auto e = find_embedding(s, s);
    REQUIRE(e.has_value());
    VertexMap as_immersion{e->assignment, MapKind::Immersion};
    CHECK(is_valid_map(s, s, as_immersion));
    CHECK(find_immersion(s, s).has_value());
    check_restrictions(s, s, *e);
  }
  const auto torus = catalog::closed_surface(SurfaceKind::Torus7);
  const auto l66 = catalog::l_xy(6, 6);
  check_restrictions(l66, torus, *find_immersion(l66, torus));
}

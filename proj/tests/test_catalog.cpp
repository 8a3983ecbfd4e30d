#include <doctest.h>

#include "rcx/catalog.hpp"
#include "rcx/collapse.hpp"
#include "rcx/density.hpp"
#include "rcx/error.hpp"
#include "rcx/homology.hpp"
#include "support.hpp"

using namespace rcx;
using namespace rcx::catalog;

namespace {

Graph1 cycle(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= n; ++i) edges.push_back(Edge::make(i, i % n + 1));
  return Graph1::from_edges(edges);
}

// A triangulated disk: connected, chi 1, boundary a single cycle, interior
// links cycles and boundary links paths.
void certify_disk(const Complex2& d) {
  CHECK(euler_characteristic(d) == 1);
  CHECK(homology_profile(d).b0 == 1);
  const auto boundary = free_edges(d);
  const auto bgraph = Graph1::from_edges(boundary);
  CHECK(bgraph.component_count() == 1);
  CHECK(bgraph.euler_characteristic() == 0);
  for (std::size_t i = 0; i < d.num_edges(); ++i) CHECK(d.edge_degree(i) <= 2);
  for (VertexId u : d.vertices()) {
    const auto link = link_graph(d, u);
    const bool on_boundary = std::binary_search(bgraph.vertices.begin(), bgraph.vertices.end(), u);
    CHECK(link.component_count() == 1);
    CHECK(link.euler_characteristic() == (on_boundary ? 1 : 0));
  }
}

std::int64_t degree(const Complex2& s, VertexId u) {
  return static_cast<std::int64_t>(
      std::count_if(s.edges().begin(), s.edges().end(), [u](const Edge& e) { return e.contains(u); }));
}

}  // namespace

TEST_CASE("cones") {
  const auto c3 = cone_over_graph(cycle(3));
  CHECK(c3.num_vertices() == 4);
  CHECK(c3.num_faces() == 3);
  CHECK(mu(c3) == Rational(4, 3));
  CHECK(mu(cone_over_graph(cycle(6))) == Rational(7, 6));
  const auto g = gamma_graph(GammaKind::TwoCircles, 3, 3, 0);
  const auto c = cone_over_graph(g);
  CHECK(c.num_faces() == g.edges.size());
  CHECK(c.num_vertices() == g.vertices.size() + 1);
  CHECK(mu(c) == Rational(1));
}

TEST_CASE("gamma graphs") {
  const auto g331 = gamma_graph(GammaKind::TwoCircles, 3, 3, 1);
  CHECK(g331.vertices.size() == 6);
  CHECK(g331.edges.size() == 7);
  CHECK(g331.euler_characteristic() == -1);
  const auto g330 = gamma_graph(GammaKind::TwoCircles, 3, 3, 0);
  CHECK(g330.vertices.size() == 5);
  CHECK(g330.edges.size() == 6);
  const auto theta = gamma_graph(GammaKind::Theta, 3, 3, 3);
  CHECK(theta.vertices.size() == 8);
  CHECK(theta.edges.size() == 9);
  for (auto [x, y, z] : std::vector<std::array<int, 3>>{{3, 4, 0}, {5, 3, 4}, {4, 4, 2}}) {
    const auto gg = gamma_graph(GammaKind::TwoCircles, x, y, z);
    CHECK(gg.euler_characteristic() == -1);
    CHECK(gg.component_count() == 1);
    CHECK(gg.vertices.size() == static_cast<std::size_t>(x + y + z - 1));
    const auto th = gamma_graph(GammaKind::Theta, x, y, z + 1);
    CHECK(th.euler_characteristic() == -1);
    CHECK(th.component_count() == 1);
  }
  CHECK_THROWS_AS(gamma_graph(GammaKind::Theta, 3, 3, 0), Error);
  CHECK_THROWS_AS(gamma_graph(GammaKind::TwoCircles, 2, 3, 1), Error);
}

TEST_CASE("L(x, y)") {
  CHECK(l_xy(3, 3) == test::tetrahedron());
  CHECK(mu(l_xy(3, 3)) == Rational(1));
  const auto l43 = l_xy(4, 3);
  CHECK(l43.num_vertices() == 5);
  CHECK(l43.num_faces() == 5);
  CHECK(mu(l43) == Rational(1));
  const auto l54 = l_xy(5, 4);
  CHECK(l54.num_vertices() == 7);
  CHECK(l54.num_faces() == 7);
  for (int x = 3; x <= 7; ++x) {
    for (int y = 3; y <= 7; ++y) {
      if (std::max(x, y) < 4) continue;
      CAPTURE(x);
      CAPTURE(y);
      const auto l = l_xy(x, y);
      CHECK(l.num_vertices() == static_cast<std::size_t>(x + y - 2));
      CHECK(l.num_faces() == static_cast<std::size_t>(x + y - 2));
      certify_disk(l);
      const auto boundary = Graph1::from_edges(free_edges(l));
      std::vector<std::int64_t> interior;
      for (VertexId u : l.vertices())
        if (!std::binary_search(boundary.vertices.begin(), boundary.vertices.end(), u))
          interior.push_back(degree(l, u));
      std::sort(interior.begin(), interior.end());
      CHECK(interior == std::vector<std::int64_t>{std::min(x, y), std::max(x, y)});
    }
  }
}

TEST_CASE("disks") {
  CHECK(mu(disk(DiskKind::Ngon, 6)) == Rational(7, 6));
  const auto i4 = disk(DiskKind::ImplantedNgon, 4);
  CHECK(i4.num_vertices() == 9);
  CHECK(i4.num_faces() == 12);
  CHECK(mu(i4) == Rational(3, 4));
  CHECK(mu(disk(DiskKind::ImplantedNgon, 8)) == Rational(13, 20));
  for (std::int64_t n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const auto ng = disk(DiskKind::Ngon, n);
    CHECK(mu(ng) == Rational(1) + Rational(1, n));
    certify_disk(ng);
    const auto im = disk(DiskKind::ImplantedNgon, n);
    CHECK(im.num_faces() == static_cast<std::size_t>(2 * n + 4));
    CHECK(im.num_vertices() == static_cast<std::size_t>(n + 5));
    CHECK(free_edges(im).size() == 4);
    CHECK(mu(im) == Rational(1, 2) + Rational(3, 2 * n + 4));
    certify_disk(im);
  }
}

TEST_CASE("closed surfaces are certified") {
  struct Expect {
    SurfaceKind kind;
    std::size_t v, e, f;
    std::int64_t chi;
    bool orientable;
    Rational mu;
  };
  for (const auto& x : std::vector<Expect>{{SurfaceKind::Sphere4, 4, 6, 4, 2, true, Rational(1)},
                                           {SurfaceKind::Torus7, 7, 21, 14, 0, true, Rational(1, 2)},
                                           {SurfaceKind::Rp2_6, 6, 15, 10, 1, false, Rational(3, 5)},
                                           {SurfaceKind::Klein8, 8, 24, 16, 0, false, Rational(1, 2)}}) {
    const auto s = closed_surface(x.kind);
    CAPTURE(x.v);
    CHECK(s.num_vertices() == x.v);
    CHECK(s.num_edges() == x.e);
    CHECK(s.num_faces() == x.f);
    CHECK(euler_characteristic(s) == x.chi);
    CHECK(mu(s) == x.mu);
    const auto flags = classify(s);
    CHECK(flags.pure);
    CHECK(flags.closed);
    CHECK(flags.strongly_connected);
    CHECK(flags.pseudo_surface);
    for (std::size_t i = 0; i < s.num_edges(); ++i) CHECK(s.edge_degree(i) == 2);
    for (VertexId u : s.vertices()) {
      const auto link = link_graph(s, u);
      CHECK(link.component_count() == 1);
      CHECK(link.euler_characteristic() == 0);
      for (VertexId w : link.vertices)
        CHECK(std::count_if(link.edges.begin(), link.edges.end(),
                            [w](const Edge& e) { return e.contains(w); }) == 2);
    }
    CHECK(is_closed_surface_combinatorially(s));
    CHECK(is_orientable_closed_surface(s) == x.orientable);
  }
  CHECK(closed_surface(SurfaceKind::Sphere4) == test::tetrahedron());
}

TEST_CASE("triods") {
  const auto x = triod(0);
  CHECK(x.num_vertices() == 5);
  CHECK(x.num_faces() == 3);
  CHECK(mu(x) == Rational(5, 3));
  CHECK(mu(triod(8)) == Rational(13, 27));
  CHECK(mu(triod(1)) == Rational(1));
  for (std::int64_t k = 0; k <= 12; ++k) {
    const auto y = triod(k);
    CHECK(y.num_vertices() == static_cast<std::size_t>(k + 5));
    CHECK(y.num_faces() == static_cast<std::size_t>(3 * (k + 1)));
    CHECK(mu(y) == Rational(k + 5, 3 * k + 3));
    // Each of the k + 1 spine segments lies in exactly three faces.
    std::size_t thick = 0;
    for (std::size_t i = 0; i < y.num_edges(); ++i) thick += y.edge_degree(i) == 3;
    CHECK(thick == static_cast<std::size_t>(k + 1));
  }
}

TEST_CASE("attaching a triangle") {
  const auto i8 = disk(DiskKind::ImplantedNgon, 8);
  const auto pd = attach_triangle(i8, free_edges(i8).front());
  CHECK(pd.num_vertices() == i8.num_vertices() + 1);
  CHECK(pd.num_faces() == i8.num_faces() + 1);
  CHECK_FALSE(is_balanced(pd));
  CHECK(pd == by_name("pendant_disk", std::vector<std::int64_t>{8}));

  const auto two = attach_triangle(triangle(), Edge{1, 2});
  CHECK(two.num_faces() == 2);
  CHECK(mu(two) == Rational(2));

  for (const auto& [name, s] : fixtures()) {
    if (s.num_faces() == 0 || !(mu(s) < Rational(1))) continue;
    CAPTURE(name);
    const auto bigger = attach_triangle(s, s.edges().front());
    CHECK(mu(bigger) == Rational(static_cast<std::int64_t>(s.num_vertices()) + 1,
                                 static_cast<std::int64_t>(s.num_faces()) + 1));
    CHECK(mu(bigger) > mu(s));
  }

  try {
    attach_triangle(triangle(), Edge{1, 9});
    FAIL("expected UnknownSimplex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSimplex);
  }
}

TEST_CASE("catalog by name") {
  CHECK(by_name("tetrahedron") == test::tetrahedron());
  CHECK(by_name("triangle") == test::complex_of({{1, 2, 3}}));
  CHECK(by_name("torus7") == closed_surface(SurfaceKind::Torus7));
  CHECK(by_name("lxy", std::vector<std::int64_t>{5, 4}) == l_xy(5, 4));
  CHECK(by_name("full2", std::vector<std::int64_t>{5}).num_faces() == 10);
  CHECK(by_name("skeleton", std::vector<std::int64_t>{5}).num_edges() == 10);
  const auto gamma = by_name("gamma", std::vector<std::int64_t>{3, 3, 1});
  CHECK(gamma.num_faces() == 0);
  CHECK(gamma.num_edges() == 7);
  CHECK(by_name("cone_theta", std::vector<std::int64_t>{3, 3, 3}).num_faces() == 9);
  CHECK_THROWS_AS(by_name("dodecahedron"), Error);
  CHECK_THROWS_AS(by_name("ngon"), Error);
  CHECK_THROWS_AS(by_name("ngon", std::vector<std::int64_t>{2}), Error);
  CHECK(names().size() >= 16);
}

TEST_CASE("fixtures have unique names") {
  std::set<std::string> seen;
  for (const auto& fx : fixtures()) CHECK(seen.insert(fx.name).second);
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "rcx/rcx.h"

namespace {

struct Handle {
  rcx_complex* p = nullptr;
  Handle() = default;
  Handle(Handle&& o) noexcept : p(std::exchange(o.p, nullptr)) {}
  Handle& operator=(Handle&&) = delete;
  ~Handle() { rcx_complex_free(p); }
  rcx_complex** out() { return &p; }
  operator const rcx_complex*() const { return p; }
};

struct Text {
  char* p = nullptr;
  ~Text() { rcx_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

Handle catalog(const char* name, std::vector<int64_t> params = {}) {
  Handle h;
  REQUIRE(rcx_catalog(name, params.data(), params.size(), h.out()) == RCX_OK);
  return h;
}

bool equal(rcx_rational r, int64_t num, int64_t den) { return r.num == num && r.den == den; }

}  // namespace

TEST_CASE("construction and queries") {
  const uint32_t corners[] = {1, 2, 3, 2, 3, 4};
  const uint32_t edges[] = {7, 8};
  const uint32_t verts[] = {9};
  Handle s;
  REQUIRE(rcx_complex_from_faces(corners, 2, edges, 1, verts, 1, s.out()) == RCX_OK);
  size_t v = 0, e = 0, f = 0;
  CHECK(rcx_complex_counts(s, &v, &e, &f) == RCX_OK);
  CHECK(v == 7);
  CHECK(e == 6);
  CHECK(f == 2);
  uint32_t out[6] = {};
  CHECK(rcx_complex_faces(s, out, 2) == RCX_OK);
  CHECK(std::memcmp(out, corners, sizeof out) == 0);
  int64_t chi = 0;
  CHECK(rcx_euler_characteristic(s, &chi) == RCX_OK);
  CHECK(chi == 3);
  size_t free_edges = 0;
  CHECK(rcx_free_edge_count(s, &free_edges) == RCX_OK);
  CHECK(free_edges == 4);

  Text text;
  CHECK(rcx_complex_format(s, text.out()) == RCX_OK);
  CHECK(text.str() == "v 9\ne 7 8\nf 1 2 3\nf 2 3 4\n");
  Handle back;
  CHECK(rcx_complex_parse(text.p, back.out()) == RCX_OK);
  int same = 0;
  CHECK(rcx_complex_equal(s, back, &same) == RCX_OK);
  CHECK(same == 1);

  Handle pure;
  CHECK(rcx_pure_part(s, pure.out()) == RCX_OK);
  CHECK(rcx_complex_counts(pure, &v, nullptr, nullptr) == RCX_OK);
  CHECK(v == 4);
}

TEST_CASE("error reporting") {
  const uint32_t bad[] = {1, 1, 2};
  Handle s;
  CHECK(rcx_complex_from_faces(bad, 1, nullptr, 0, nullptr, 0, s.out()) ==
        RCX_ERR_DEGENERATE_FACE);
  CHECK(s.p == nullptr);
  CHECK(std::strlen(rcx_last_error()) > 0);
  CHECK(std::string(rcx_status_name(RCX_ERR_DEGENERATE_FACE)) == "DegenerateFace");

  Handle p;
  CHECK(rcx_complex_parse("f 1 2 2\n", p.out()) == RCX_ERR_PARSE);
  CHECK(std::string(rcx_last_error()).find("line 1") != std::string::npos);
  CHECK(rcx_complex_parse(nullptr, p.out()) == RCX_ERR_NULL_ARGUMENT);
  CHECK(rcx_complex_read_file("/nonexistent/x.cx", p.out()) == RCX_ERR_IO);
  CHECK(rcx_catalog("nosuch", nullptr, 0, p.out()) != RCX_OK);

  Handle none;
  REQUIRE(rcx_complex_parse("skeleton 4\n", none.out()) == RCX_OK);
  rcx_rational r{};
  CHECK(rcx_mu(none, &r) == RCX_ERR_NO_FACES);
  rcx_collapse_result c{};
  CHECK(rcx_collapse(none, &c, nullptr) == RCX_OK);
  CHECK(c.kind == RCX_COLLAPSE_GRAPH);
  CHECK(c.steps == 0);
  int orientable = 0;
  CHECK(rcx_is_orientable_surface(none, &orientable) == RCX_ERR_NOT_A_CLOSED_SURFACE);

  double lambda = 0, mu = 0;
  CHECK(rcx_theoretical_bounds(3.0, &lambda, &mu) == RCX_ERR_CRITICAL_CASE);
  CHECK(rcx_theoretical_bounds(2.0, &lambda, &mu) == RCX_OK);
  CHECK(lambda == doctest::Approx(0.98619).epsilon(1e-5));
  CHECK(std::isnan(mu));

  Handle big;
  REQUIRE(rcx_catalog("full2", std::vector<int64_t>{8}.data(), 1, big.out()) == RCX_OK);
  CHECK(rcx_mu_tilde_oracle(big, &r) == RCX_ERR_TOO_LARGE_FOR_ORACLE);
  uint32_t small[3];
  CHECK(rcx_complex_faces(big, small, 1) == RCX_ERR_BUFFER_TOO_SMALL);
}

TEST_CASE("density, collapse and homology") {
  auto torus = catalog("torus7");
  rcx_density_report report{};
  Handle witness;
  REQUIRE(rcx_density(torus, &report, witness.out()) == RCX_OK);
  CHECK(equal(report.mu, 1, 2));
  CHECK(equal(report.mu_tilde, 1, 2));
  CHECK(report.balanced == 1);
  CHECK(report.sign == 0);
  CHECK(report.witness_faces == 14);
  rcx_rational flow{}, oracle{}, identity{};
  CHECK(rcx_mu_tilde_flow(torus, &flow) == RCX_OK);
  CHECK(rcx_mu_tilde_oracle(torus, &oracle) == RCX_OK);
  CHECK(equal(flow, oracle.num, oracle.den));
  CHECK(rcx_degree_identity(torus, &identity) == RCX_OK);
  CHECK(equal(identity, 6, 1));

  rcx_classify_flags flags{};
  CHECK(rcx_classify(torus, &flags) == RCX_OK);
  CHECK(flags.closed == 1);
  CHECK(flags.pseudo_surface == 1);
  CHECK(flags.diameter > 0);

  rcx_homology h{};
  int64_t torsion[4] = {};
  auto rp2 = catalog("rp2_6");
  CHECK(rcx_homology_profile(rp2, &h, torsion, 4) == RCX_OK);
  CHECK(h.b0 == 1);
  CHECK(h.b1 == 0);
  CHECK(h.b1_mod2 == 1);
  CHECK(h.chi == 1);
  REQUIRE(h.torsion_count == 1);
  CHECK(torsion[0] == 2);
  int orientable = 1;
  CHECK(rcx_is_orientable_surface(rp2, &orientable) == RCX_OK);
  CHECK(orientable == 0);

  auto disk = catalog("ngon", {6});
  rcx_collapse_result c{};
  Handle core;
  CHECK(rcx_collapse(disk, &c, core.out()) == RCX_OK);
  CHECK(c.kind == RCX_COLLAPSE_GRAPH);
  CHECK(c.chi == 1);
  CHECK(c.euler_preserved == 1);
  CHECK(c.core_faces == 0);

  Handle sub;
  CHECK(rcx_subdivide(disk, 2, sub.out()) == RCX_OK);
  size_t f = 0;
  CHECK(rcx_complex_counts(sub, nullptr, nullptr, &f) == RCX_OK);
  CHECK(f == 9 * 6);
}

TEST_CASE("patterns") {
  auto tet = catalog("tetrahedron");
  Handle host;
  REQUIRE(rcx_catalog("full2", std::vector<int64_t>{5}.data(), 1, host.out()) == RCX_OK);
  int found = 0;
  uint32_t pairs[8] = {};
  size_t written = 0;
  CHECK(rcx_find_map(tet, host, RCX_MAP_EMBEDDING, &found, pairs, 4, &written) == RCX_OK);
  CHECK(found == 1);
  CHECK(written == 4);
  CHECK(pairs[0] == 1);
  CHECK(rcx_find_map(tet, host, RCX_MAP_EMBEDDING, &found, pairs, 2, &written) ==
        RCX_ERR_BUFFER_TOO_SMALL);
  uint64_t count = 0;
  CHECK(rcx_count_embeddings(tet, host, &count) == RCX_OK);
  CHECK(count == 5 * 4 * 3 * 2);
  double e = 0, bound = 0;
  CHECK(rcx_expected_embeddings(tet, 30, 0.1, &e, &bound) == RCX_OK);
  CHECK(e == doctest::Approx(65.772));
  CHECK(bound >= e);

  auto torus = catalog("torus7");
  CHECK(rcx_find_map(torus, tet, RCX_MAP_IMMERSION, &found, pairs, 0, &written) == RCX_OK);
  CHECK(found == 0);
  CHECK(written == 0);
}

TEST_CASE("sampling and experiments") {
  Handle a, b;
  CHECK(rcx_sample(12, 0.2, 5, a.out()) == RCX_OK);
  CHECK(rcx_sample(12, 0.2, 5, b.out()) == RCX_OK);
  int same = 0;
  CHECK(rcx_complex_equal(a, b, &same) == RCX_OK);
  CHECK(same == 1);
  CHECK(rcx_sample(2, 0.2, 5, b.out()) == RCX_ERR_INVALID_PARAMETER);
  CHECK(rcx_trial_seed(1, 2) != rcx_trial_seed(1, 3));

  Text names;
  CHECK(rcx_catalog_names(names.out()) == RCX_OK);
  CHECK(names.str().find("torus7") != std::string::npos);

  const char* overrides[] = {"trials=5", "n = 20"};
  Text trials, summary;
  CHECK(rcx_experiment_run("name = euler_regime\nc = 2\ntrials = 100\n", overrides, 2,
                           trials.out(), summary.out()) == RCX_OK);
  CHECK(trials.str().starts_with("experiment,point,grid_value,trial"));
  const std::string rows = trials.str();
  CHECK(std::count(rows.begin(), rows.end(), '\n') == 6);
  CHECK(summary.str().find("euler_regime,0,2,0.1,") != std::string::npos);

  Text none;
  CHECK(rcx_experiment_run("c = 2\n", nullptr, 0, nullptr, none.out()) == RCX_OK);
  const char* bad[] = {"trials"};
  CHECK(rcx_experiment_run("c = 2\n", bad, 1, nullptr, nullptr) == RCX_ERR_INVALID_CONFIG);
  CHECK(rcx_experiment_run("c = 2\nbogus = 1\n", nullptr, 0, nullptr, nullptr) ==
        RCX_ERR_INVALID_CONFIG);
}

#include "rcx/rcx.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "rcx/catalog.hpp"
#include "rcx/collapse.hpp"
#include "rcx/density.hpp"
#include "rcx/error.hpp"
#include "rcx/experiment.hpp"
#include "rcx/homology.hpp"
#include "rcx/io.hpp"
#include "rcx/patterns.hpp"
#include "rcx/sampler.hpp"
#include "rcx/subdivision.hpp"

struct rcx_complex {
  rcx::Complex2 value;
};

namespace {

thread_local std::string last_error;

rcx_status fail(rcx_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

template <typename F>
rcx_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const rcx::Error& e) {
    return fail(static_cast<rcx_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RCX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RCX_ERR_INTERNAL, e.what());
  }
}

#define RCX_REQUIRE(ptr)                                            \
  do {                                                              \
    if ((ptr) == nullptr) return fail(RCX_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rcx_complex* wrap(rcx::Complex2 s) { return new rcx_complex{std::move(s)}; }

rcx_rational to_c(const rcx::Rational& r) { return {r.num(), r.den()}; }

}  // namespace

extern "C" {

const char* rcx_last_error(void) { return last_error.c_str(); }

const char* rcx_status_name(rcx_status status) {
  switch (status) {
    case RCX_OK: return "Ok";
    case RCX_ERR_NULL_ARGUMENT: return "NullArgument";
    case RCX_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case RCX_ERR_INTERNAL: return "Internal";
    default:
      if (status >= RCX_ERR_DEGENERATE_FACE && status <= RCX_ERR_OVERFLOW)
        return rcx::error_code_name(static_cast<rcx::ErrorCode>(status));
      return "Unknown";
  }
}

void rcx_string_free(char* s) { std::free(s); }

void rcx_complex_free(rcx_complex* s) { delete s; }

rcx_status rcx_complex_from_faces(const uint32_t* corners, size_t num_faces, const uint32_t* edges,
                                  size_t num_edges, const uint32_t* vertices, size_t num_vertices,
                                  rcx_complex** out) {
  RCX_REQUIRE(out);
  if (num_faces) RCX_REQUIRE(corners);
  if (num_edges) RCX_REQUIRE(edges);
  if (num_vertices) RCX_REQUIRE(vertices);
  return guarded([&] {
    std::vector<rcx::Face> fs;
    for (size_t i = 0; i < num_faces; ++i)
      fs.push_back(rcx::Face::make(corners[3 * i], corners[3 * i + 1], corners[3 * i + 2]));
    std::vector<rcx::Edge> es;
    for (size_t i = 0; i < num_edges; ++i) es.push_back(rcx::Edge::make(edges[2 * i], edges[2 * i + 1]));
    std::vector<rcx::VertexId> vs(vertices, vertices + num_vertices);
    for (auto v : vs)
      if (v == 0) throw rcx::Error(rcx::ErrorCode::InvalidParameter, "vertex labels are positive");
    *out = wrap(rcx::Complex2::from_faces(fs, es, vs));
    return RCX_OK;
  });
}

rcx_status rcx_complex_parse(const char* text, rcx_complex** out) {
  RCX_REQUIRE(text);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = wrap(rcx::parse_complex(text));
    return RCX_OK;
  });
}

rcx_status rcx_complex_read_file(const char* path, rcx_complex** out) {
  RCX_REQUIRE(path);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = wrap(rcx::read_complex_file(path));
    return RCX_OK;
  });
}

rcx_status rcx_complex_write_file(const rcx_complex* s, const char* path) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(path);
  return guarded([&] {
    rcx::write_complex_file(path, s->value);
    return RCX_OK;
  });
}

rcx_status rcx_complex_format(const rcx_complex* s, char** out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(rcx::format_complex(s->value));
    return RCX_OK;
  });
}

rcx_status rcx_catalog(const char* name, const int64_t* params, size_t num_params,
                       rcx_complex** out) {
  RCX_REQUIRE(name);
  RCX_REQUIRE(out);
  if (num_params) RCX_REQUIRE(params);
  return guarded([&] {
    std::vector<std::int64_t> ps(params, params + num_params);
    *out = wrap(rcx::catalog::by_name(name, ps));
    return RCX_OK;
  });
}

rcx_status rcx_catalog_names(char** out) {
  RCX_REQUIRE(out);
  return guarded([&] {
    std::string joined;
    for (const auto& name : rcx::catalog::names()) joined += name + "\n";
    *out = dup_string(joined);
    return RCX_OK;
  });
}

rcx_status rcx_sample(uint32_t n, double p, uint64_t seed, rcx_complex** out) {
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = wrap(rcx::sample_complex(rcx::SampleSpec{n, p, seed}));
    return RCX_OK;
  });
}

uint64_t rcx_trial_seed(uint64_t master, uint64_t index) { return rcx::trial_seed(master, index); }

rcx_status rcx_subdivide(const rcx_complex* s, uint32_t rounds, rcx_complex** out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = wrap(rcx::center_subdivide(s->value, rounds));
    return RCX_OK;
  });
}

rcx_status rcx_pure_part(const rcx_complex* s, rcx_complex** out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = wrap(s->value.pure_part());
    return RCX_OK;
  });
}

rcx_status rcx_complex_counts(const rcx_complex* s, size_t* v, size_t* e, size_t* f) {
  RCX_REQUIRE(s);
  if (v) *v = s->value.num_vertices();
  if (e) *e = s->value.num_edges();
  if (f) *f = s->value.num_faces();
  return RCX_OK;
}

rcx_status rcx_complex_faces(const rcx_complex* s, uint32_t* corners, size_t capacity) {
  RCX_REQUIRE(s);
  if (capacity) RCX_REQUIRE(corners);
  const auto& faces = s->value.faces();
  for (size_t i = 0; i < faces.size() && i < capacity; ++i) {
    corners[3 * i] = faces[i].a;
    corners[3 * i + 1] = faces[i].b;
    corners[3 * i + 2] = faces[i].c;
  }
  if (capacity < faces.size()) return fail(RCX_ERR_BUFFER_TOO_SMALL, "face buffer too small");
  return RCX_OK;
}

rcx_status rcx_complex_equal(const rcx_complex* a, const rcx_complex* b, int* out) {
  RCX_REQUIRE(a);
  RCX_REQUIRE(b);
  RCX_REQUIRE(out);
  *out = a->value == b->value;
  return RCX_OK;
}

rcx_status rcx_euler_characteristic(const rcx_complex* s, int64_t* out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  *out = rcx::euler_characteristic(s->value);
  return RCX_OK;
}

rcx_status rcx_classify(const rcx_complex* s, rcx_classify_flags* out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    const auto flags = rcx::classify(s->value);
    out->pure = flags.pure;
    out->closed = flags.closed;
    out->strongly_connected = flags.strongly_connected;
    out->pseudo_surface = flags.pseudo_surface;
    out->diameter = flags.diameter ? static_cast<int64_t>(*flags.diameter) : -1;
    return RCX_OK;
  });
}

rcx_status rcx_free_edge_count(const rcx_complex* s, size_t* out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = rcx::free_edges(s->value).size();
    return RCX_OK;
  });
}

rcx_status rcx_mu(const rcx_complex* s, rcx_rational* out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rcx::mu(s->value));
    return RCX_OK;
  });
}

rcx_status rcx_mu_tilde_flow(const rcx_complex* s, rcx_rational* out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rcx::mu_tilde_flow(s->value).value);
    return RCX_OK;
  });
}

rcx_status rcx_mu_tilde_oracle(const rcx_complex* s, rcx_rational* out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rcx::mu_tilde_oracle(s->value).value);
    return RCX_OK;
  });
}

rcx_status rcx_density(const rcx_complex* s, rcx_density_report* out, rcx_complex** witness) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    auto report = rcx::density_report(s->value);
    out->mu = to_c(report.mu);
    out->mu_tilde = to_c(report.mu_tilde);
    out->witness_faces = report.witness_faces.size();
    out->balanced = report.balanced;
    out->sign = report.sign;
    if (witness) *witness = wrap(rcx::Complex2::from_faces(report.witness_faces));
    return RCX_OK;
  });
}

rcx_status rcx_degree_identity(const rcx_complex* s, rcx_rational* out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = to_c(rcx::bounds::degree_identity_product(s->value));
    return RCX_OK;
  });
}

rcx_status rcx_collapse(const rcx_complex* s, rcx_collapse_result* out, rcx_complex** core) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    auto outcome = rcx::collapse_to_core(s->value);
    out->kind = outcome.kind == rcx::CollapseKind::Graph ? RCX_COLLAPSE_GRAPH : RCX_COLLAPSE_CLOSED_CORE;
    out->steps = outcome.steps;
    out->chi = outcome.euler_per_step.front();
    out->euler_preserved = 1;
    for (auto chi : outcome.euler_per_step)
      if (chi != out->chi) out->euler_preserved = 0;
    out->core_faces = outcome.core.num_faces();
    if (core) *core = wrap(std::move(outcome.core));
    return RCX_OK;
  });
}

rcx_status rcx_homology_profile(const rcx_complex* s, rcx_homology* out, int64_t* torsion,
                                size_t capacity) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  if (capacity) RCX_REQUIRE(torsion);
  return guarded([&] {
    const auto h = rcx::homology_profile(s->value);
    out->b0 = h.b0;
    out->b1 = h.b1;
    out->b2 = h.b2;
    out->b0_mod2 = h.b0_mod2;
    out->b1_mod2 = h.b1_mod2;
    out->b2_mod2 = h.b2_mod2;
    out->chi = h.chi;
    out->torsion_count = h.torsion_h1.size();
    for (size_t i = 0; i < h.torsion_h1.size() && i < capacity; ++i) torsion[i] = h.torsion_h1[i];
    return RCX_OK;
  });
}

rcx_status rcx_is_orientable_surface(const rcx_complex* s, int* out) {
  RCX_REQUIRE(s);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = rcx::is_orientable_closed_surface(s->value);
    return RCX_OK;
  });
}

rcx_status rcx_find_map(const rcx_complex* pattern, const rcx_complex* host, rcx_map_kind kind,
                        int* found, uint32_t* assignment, size_t capacity, size_t* pairs_written) {
  RCX_REQUIRE(pattern);
  RCX_REQUIRE(host);
  RCX_REQUIRE(found);
  if (capacity) RCX_REQUIRE(assignment);
  return guarded([&] {
    const auto map = kind == RCX_MAP_EMBEDDING ? rcx::find_embedding(pattern->value, host->value)
                                               : rcx::find_immersion(pattern->value, host->value);
    *found = map.has_value();
    size_t written = 0;
    if (map) {
      for (const auto& [from, to] : map->assignment) {
        if (written == capacity) break;
        assignment[2 * written] = from;
        assignment[2 * written + 1] = to;
        ++written;
      }
    }
    if (pairs_written) *pairs_written = written;
    if (map && written < map->assignment.size())
      return fail(RCX_ERR_BUFFER_TOO_SMALL, "assignment buffer too small");
    return RCX_OK;
  });
}

rcx_status rcx_count_embeddings(const rcx_complex* pattern, const rcx_complex* host, uint64_t* out) {
  RCX_REQUIRE(pattern);
  RCX_REQUIRE(host);
  RCX_REQUIRE(out);
  return guarded([&] {
    *out = rcx::count_embeddings(pattern->value, host->value);
    return RCX_OK;
  });
}

rcx_status rcx_expected_embeddings(const rcx_complex* pattern, int64_t n, double p,
                                   double* embeddings, double* immersion_bound) {
  RCX_REQUIRE(pattern);
  return guarded([&] {
    const auto m = rcx::expected_embedding_count(pattern->value, n, p);
    if (embeddings) *embeddings = m.embeddings;
    if (immersion_bound) *immersion_bound = m.immersion_bound;
    return RCX_OK;
  });
}

rcx_status rcx_theoretical_bounds(double c, double* lambda, double* mu) {
  return guarded([&] {
    const auto b = rcx::theoretical_bounds(c);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (lambda) *lambda = b.lambda.value_or(nan);
    if (mu) *mu = b.mu.value_or(nan);
    return RCX_OK;
  });
}

rcx_status rcx_experiment_run(const char* config_text, const char* const* overrides,
                              size_t num_overrides, char** trials_csv, char** summary_csv) {
  if (num_overrides) RCX_REQUIRE(overrides);
  return guarded([&] {
    auto cfg = rcx::parse_config_text(config_text ? config_text : "");
    for (size_t i = 0; i < num_overrides; ++i) {
      RCX_REQUIRE(overrides[i]);
      const std::string item = overrides[i];
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw rcx::Error(rcx::ErrorCode::InvalidConfig, "override '" + item + "' is not key=value");
      rcx::apply_setting(cfg, item.substr(0, eq), item.substr(eq + 1));
    }
    const auto result = rcx::run_experiment(cfg);
    if (trials_csv) {
      std::ostringstream os;
      rcx::write_trials_csv(os, result);
      *trials_csv = dup_string(os.str());
    }
    if (summary_csv) {
      std::ostringstream os;
      rcx::write_summary_csv(os, result);
      *summary_csv = dup_string(os.str());
    }
    return RCX_OK;
  });
}

}  // extern "C"

#ifndef RCX_RCX_H
#define RCX_RCX_H

/* C interface to the rcx library. Every function returns an rcx_status;
 * on failure rcx_last_error() describes the problem for the calling thread.
 * Complexes are immutable opaque handles released with rcx_complex_free.
 * Strings returned through char** are released with rcx_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RCX_API __declspec(dllexport)
#else
#define RCX_API __attribute__((visibility("default")))
#endif

typedef enum rcx_status {
  RCX_OK = 0,
  RCX_ERR_DEGENERATE_FACE = 1,
  RCX_ERR_DUPLICATE_FACE = 2,
  RCX_ERR_UNKNOWN_SIMPLEX = 3,
  RCX_ERR_EMPTY_COMPLEX = 4,
  RCX_ERR_NO_FACES = 5,
  RCX_ERR_TOO_LARGE_FOR_ORACLE = 6,
  RCX_ERR_NOT_A_CLOSED_SURFACE = 7,
  RCX_ERR_NOTHING_TO_COLLAPSE = 8,
  RCX_ERR_INVALID_PARAMETER = 9,
  RCX_ERR_CRITICAL_CASE = 10,
  RCX_ERR_PARSE = 11,
  RCX_ERR_IO = 12,
  RCX_ERR_INVALID_CONFIG = 13,
  RCX_ERR_OVERFLOW = 14,
  RCX_ERR_NULL_ARGUMENT = 100,
  RCX_ERR_BUFFER_TOO_SMALL = 101,
  RCX_ERR_INTERNAL = 102
} rcx_status;

typedef struct rcx_complex rcx_complex;

typedef struct rcx_rational {
  int64_t num;
  int64_t den;
} rcx_rational;

typedef struct rcx_classify_flags {
  int pure;
  int closed;
  int strongly_connected;
  int pseudo_surface;
  int64_t diameter; /* -1: infinite */
} rcx_classify_flags;

typedef struct rcx_density_report {
  rcx_rational mu;
  rcx_rational mu_tilde;
  size_t witness_faces;
  int balanced;
  int sign; /* sign of mu_tilde - 1/2 */
} rcx_density_report;

typedef enum rcx_collapse_kind { RCX_COLLAPSE_GRAPH = 0, RCX_COLLAPSE_CLOSED_CORE = 1 } rcx_collapse_kind;

typedef struct rcx_collapse_result {
  rcx_collapse_kind kind;
  uint32_t steps;
  int64_t chi;
  int euler_preserved; /* chi equal after every step */
  size_t core_faces;
} rcx_collapse_result;

typedef struct rcx_homology {
  int64_t b0, b1, b2;
  int64_t b0_mod2, b1_mod2, b2_mod2;
  int64_t chi;
  size_t torsion_count;
} rcx_homology;

typedef enum rcx_map_kind { RCX_MAP_IMMERSION = 0, RCX_MAP_EMBEDDING = 1 } rcx_map_kind;

/* Errors and memory */
RCX_API const char* rcx_last_error(void);
RCX_API const char* rcx_status_name(rcx_status status);
RCX_API void rcx_string_free(char* s);
RCX_API void rcx_complex_free(rcx_complex* s);

/* Construction; corners holds 3 labels per face, edges 2 per edge. */
RCX_API rcx_status rcx_complex_from_faces(const uint32_t* corners, size_t num_faces,
                                          const uint32_t* edges, size_t num_edges,
                                          const uint32_t* vertices, size_t num_vertices,
                                          rcx_complex** out);
RCX_API rcx_status rcx_complex_parse(const char* text, rcx_complex** out);
RCX_API rcx_status rcx_complex_read_file(const char* path, rcx_complex** out);
RCX_API rcx_status rcx_complex_write_file(const rcx_complex* s, const char* path);
RCX_API rcx_status rcx_complex_format(const rcx_complex* s, char** out);
RCX_API rcx_status rcx_catalog(const char* name, const int64_t* params, size_t num_params,
                               rcx_complex** out);
/* Newline separated list of catalog names. */
RCX_API rcx_status rcx_catalog_names(char** out);
RCX_API rcx_status rcx_sample(uint32_t n, double p, uint64_t seed, rcx_complex** out);
RCX_API uint64_t rcx_trial_seed(uint64_t master, uint64_t index);
RCX_API rcx_status rcx_subdivide(const rcx_complex* s, uint32_t rounds, rcx_complex** out);
RCX_API rcx_status rcx_pure_part(const rcx_complex* s, rcx_complex** out);

/* Queries */
RCX_API rcx_status rcx_complex_counts(const rcx_complex* s, size_t* v, size_t* e, size_t* f);
/* Copies min(f, capacity) faces (3 labels each) in sorted order;
 * RCX_ERR_BUFFER_TOO_SMALL when capacity < f. */
RCX_API rcx_status rcx_complex_faces(const rcx_complex* s, uint32_t* corners, size_t capacity);
RCX_API rcx_status rcx_complex_equal(const rcx_complex* a, const rcx_complex* b, int* out);
RCX_API rcx_status rcx_euler_characteristic(const rcx_complex* s, int64_t* out);
RCX_API rcx_status rcx_classify(const rcx_complex* s, rcx_classify_flags* out);
RCX_API rcx_status rcx_free_edge_count(const rcx_complex* s, size_t* out);

/* Density */
RCX_API rcx_status rcx_mu(const rcx_complex* s, rcx_rational* out);
RCX_API rcx_status rcx_mu_tilde_flow(const rcx_complex* s, rcx_rational* out);
RCX_API rcx_status rcx_mu_tilde_oracle(const rcx_complex* s, rcx_rational* out);
/* witness may be NULL; otherwise receives the minimizing face set as a complex. */
RCX_API rcx_status rcx_density(const rcx_complex* s, rcx_density_report* out,
                               rcx_complex** witness);
RCX_API rcx_status rcx_degree_identity(const rcx_complex* s, rcx_rational* out);

/* Collapse; core may be NULL. */
RCX_API rcx_status rcx_collapse(const rcx_complex* s, rcx_collapse_result* out,
                                rcx_complex** core);

/* Homology; writes min(torsion_count, capacity) torsion coefficients and
 * always reports the full torsion_count. */
RCX_API rcx_status rcx_homology_profile(const rcx_complex* s, rcx_homology* out,
                                        int64_t* torsion, size_t capacity);
RCX_API rcx_status rcx_is_orientable_surface(const rcx_complex* s, int* out);

/* Patterns. assignment receives (pattern vertex, host vertex) pairs, sorted by
 * pattern vertex; capacity counts pairs. A partial copy is reported as
 * RCX_ERR_BUFFER_TOO_SMALL. */
RCX_API rcx_status rcx_find_map(const rcx_complex* pattern, const rcx_complex* host,
                                rcx_map_kind kind, int* found, uint32_t* assignment,
                                size_t capacity, size_t* pairs_written);
RCX_API rcx_status rcx_count_embeddings(const rcx_complex* pattern, const rcx_complex* host,
                                        uint64_t* out);
RCX_API rcx_status rcx_expected_embeddings(const rcx_complex* pattern, int64_t n, double p,
                                           double* embeddings, double* immersion_bound);

/* Bound constants; the absent one is set to NaN. */
RCX_API rcx_status rcx_theoretical_bounds(double c, double* lambda, double* mu);

/* Runs an experiment from `key = value` config text followed by overrides in
 * the same form. Either output pointer may be NULL. */
RCX_API rcx_status rcx_experiment_run(const char* config_text, const char* const* overrides,
                                      size_t num_overrides, char** trials_csv,
                                      char** summary_csv);

#ifdef __cplusplus
}
#endif

#endif /* RCX_RCX_H */

#pragma once

// Simplicial immersions and embeddings of a pattern complex into a host.

#include <cstdint>
#include <map>
#include <optional>

#include "rcx/core.hpp"

namespace rcx {

enum class MapKind { Immersion, Embedding };

/// Vertex assignment pattern -> host.
///
/// Embedding: injective on vertices and every pattern face spans a host face.
/// Immersion: every pattern face goes to three distinct vertices spanning a
/// host face, and distinct pattern faces go to distinct host faces.
struct VertexMap {
  std::map<VertexId, VertexId> assignment;
  MapKind kind = MapKind::Embedding;
};

/// Checks a map against the definition of its kind.
bool is_valid_map(const Complex2& pattern, const Complex2& host, const VertexMap& map);

/// Backtracking search. Throws NoFaces if the pattern has no face.
std::optional<VertexMap> find_immersion(const Complex2& pattern, const Complex2& host);
std::optional<VertexMap> find_embedding(const Complex2& pattern, const Complex2& host);

/// Number of labelled embeddings (no symmetry reduction).
std::uint64_t count_embeddings(const Complex2& pattern, const Complex2& host);

struct FirstMoment {
  double embeddings = 0;       // C(n, v) v! p^f
  double immersion_bound = 0;  // n^v p^f
};

/// Expected number of embeddings into a random complex on n vertices; zero
/// when n < v.
FirstMoment expected_embedding_count(const Complex2& pattern, std::int64_t n, double p);

/// Sum over pure subcomplexes H of the pattern (nonempty face subsets) of
/// 1 / (n^{v_H} p^{f_H}); the shape of the non-embeddability bound, up to its
/// constant factor. Limited to patterns with at most kOracleMaxFaces faces.
double non_embedding_curve(const Complex2& pattern, double n, double p);

}  // namespace rcx

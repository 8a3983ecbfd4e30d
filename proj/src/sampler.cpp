#include "rcx/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "rcx/error.hpp"

namespace rcx {

namespace {

std::uint64_t choose2(std::uint64_t x) { return x * (x - 1) / 2; }
std::uint64_t choose3(std::uint64_t x) { return x * (x - 1) * (x - 2) / 6; }

// Largest x with f(x) <= r, where f is increasing on [lo, ...).
template <typename F>
std::uint64_t largest_at_most(std::uint64_t r, std::uint64_t lo, F f) {
  std::uint64_t hi = lo + 1;
  while (f(hi) <= r) hi *= 2;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    (f(mid) <= r ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the result exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = 0;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

Face unrank_triple(std::uint64_t rank) {
  const std::uint64_t c = largest_at_most(rank, 2, choose3);
  rank -= choose3(c);
  const std::uint64_t b = largest_at_most(rank, 1, choose2);
  rank -= choose2(b);
  return Face{static_cast<VertexId>(rank + 1), static_cast<VertexId>(b + 1),
              static_cast<VertexId>(c + 1)};
}

std::vector<Face> sample_faces(const SampleSpec& spec) {
  if (spec.n < 3) throw Error(ErrorCode::InvalidParameter, "sample needs n >= 3");
  if (!(spec.p >= 0.0 && spec.p <= 1.0))
    throw Error(ErrorCode::InvalidParameter, "p must lie in [0, 1]");
  const std::uint32_t n = spec.n;
  Rng rng(spec.seed);
  std::vector<Face> faces;

  if (spec.p >= kDenseThreshold) {
    for (VertexId a = 1; a <= n; ++a)
      for (VertexId b = a + 1; b <= n; ++b)
        for (VertexId c = b + 1; c <= n; ++c)
          if (rng.uniform() < spec.p) faces.push_back(Face{a, b, c});
    return faces;
  }
  if (spec.p == 0.0) return faces;

  // Sparse: gaps between included triples (in colex order) are geometric.
  const std::uint64_t total = choose3(n);
  const double log_q = std::log1p(-spec.p);
  std::uint64_t index = 0;
  for (;;) {
    const double u = 1.0 - rng.uniform();  // (0, 1]
    const double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(total - index)) break;
    index += static_cast<std::uint64_t>(gap);
    faces.push_back(unrank_triple(index));
    if (++index >= total) break;
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

Complex2 sample_complex(const SampleSpec& spec) {
  return Complex2::with_skeleton(spec.n, sample_faces(spec));
}

}  // namespace rcx

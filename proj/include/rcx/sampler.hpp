#pragma once

// Seeded sampler for the Linial-Meshulam space: the full 1-skeleton on
// {1..n} with every triangle included independently with probability p.

#include <cstdint>
#include <random>
#include <vector>

#include "rcx/core.hpp"

namespace rcx {

struct SampleSpec {
  std::uint32_t n = 3;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Probability at and above which every triple gets its own uniform draw.
inline constexpr double kDenseThreshold = 0.05;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of trial `index` under `master`; independent of trial order.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// mt19937_64 with a fixed mapping to doubles, so streams are identical on
/// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Triangles of a sample, sorted. Throws InvalidParameter when n < 3 or p is
/// outside [0, 1].
std::vector<Face> sample_faces(const SampleSpec& spec);

/// The sampled complex including the full 1-skeleton.
Complex2 sample_complex(const SampleSpec& spec);

/// Triple of colex rank r among the 3-subsets of {1..n}.
Face unrank_triple(std::uint64_t rank);

}  // namespace rcx

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "rcx/error.hpp"
#include "rcx/io.hpp"
#include "rcx/sampler.hpp"

using namespace rcx;

namespace {

double choose3(double n) { return n * (n - 1) * (n - 2) / 6.0; }

void check_binomial_moments(std::uint32_t n, double p, std::uint64_t trials, std::uint64_t seed) {
  double sum = 0, sum_sq = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double f = static_cast<double>(sample_faces({n, p, trial_seed(seed, t)}).size());
    sum += f;
    sum_sq += f * f;
  }
  const double T = static_cast<double>(trials);
  const double mean = sum / T;
  const double var = (sum_sq - T * mean * mean) / (T - 1);
  const double N = choose3(n);
  const double true_mean = N * p;
  const double true_var = N * p * (1 - p);
  CAPTURE(n);
  CAPTURE(p);
  CHECK(std::abs(mean - true_mean) <= 3 * std::sqrt(true_var / T));
  // Standard error of the sample variance, from the binomial fourth central moment.
  const double mu4 = true_var * (1 + 3 * (N - 2) * p * (1 - p));
  CHECK(std::abs(var - true_var) <= 3 * std::sqrt((mu4 - true_var * true_var) / T));
}

}  // namespace

TEST_CASE("boundary probabilities") {
  const auto full = sample_complex({4, 1.0, 9});
  CHECK(full.num_faces() == 4);
  const auto empty = sample_complex({10, 0.0, 9});
  CHECK(empty.num_faces() == 0);
  CHECK(empty.num_edges() == 45);
  CHECK(euler_characteristic(empty) == -35);
  CHECK(sample_faces({30, 0.0, 1}).empty());
  CHECK(sample_faces({12, 1.0, 1}).size() == 220);
}

TEST_CASE("sample mean of a dense sample") {
  double sum = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) sum += sample_faces({20, 0.5, trial_seed(1, t)}).size();
  CHECK(std::abs(sum / 1000 - 570) <= 3 * std::sqrt(1140 * 0.25));
}

TEST_CASE("f2 is binomial in both regimes") {
  check_binomial_moments(20, 0.5, 1000, 2);
  check_binomial_moments(15, 0.1, 1500, 3);
  check_binomial_moments(40, 0.01, 1500, 4);
  check_binomial_moments(60, 0.002, 1500, 5);
}

TEST_CASE("sparse sampler includes each triple with probability p") {
  const std::uint32_t n = 6;
  const double p = 0.02;
  const std::uint64_t trials = 20000;
  std::map<Face, std::uint64_t> hits;
  for (std::uint64_t t = 0; t < trials; ++t)
    for (const Face& f : sample_faces({n, p, trial_seed(6, t)})) ++hits[f];
  CHECK(hits.size() == 20);
  const double expect = trials * p;
  const double sd = std::sqrt(trials * p * (1 - p));
  for (const auto& [face, count] : hits) CHECK(std::abs(count - expect) <= 5 * sd);
}

TEST_CASE("faces are sorted, distinct and in range") {
  for (double p : {0.003, 0.04, 0.3}) {
    const auto faces = sample_faces({25, p, 77});
    CHECK(std::is_sorted(faces.begin(), faces.end()));
    CHECK(std::adjacent_find(faces.begin(), faces.end()) == faces.end());
    for (const Face& f : faces) CHECK((1 <= f.a && f.a < f.b && f.b < f.c && f.c <= 25));
  }
}

TEST_CASE("determinism") {
  for (double p : {0.01, 0.2}) {
    const SampleSpec spec{30, p, 12345};
    CHECK(format_complex(sample_complex(spec)) == format_complex(sample_complex(spec)));
    CHECK(sample_faces(spec) != sample_faces({30, p, 12346}));
  }
  CHECK(trial_seed(1, 2) == trial_seed(1, 2));
  CHECK(trial_seed(1, 2) != trial_seed(2, 1));
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(trial_seed(42, i));
  CHECK(seeds.size() == 1000);
}

TEST_CASE("fixed reference stream") {
  // Pins the generator so that seeds stay meaningful across releases.
  Rng a(5489);
  CHECK(a.next() == 14514284786278117030ULL);
  Rng b(0);
  const double u = b.uniform();
  CHECK((u >= 0.0 && u < 1.0));
}

TEST_CASE("colex unranking is a bijection") {
  std::set<Face> seen;
  const std::uint64_t total = 8 * 7 * 6 / 6;
  for (std::uint64_t r = 0; r < total; ++r) {
    const Face f = unrank_triple(r);
    CHECK((1 <= f.a && f.a < f.b && f.b < f.c && f.c <= 8));
    seen.insert(f);
  }
  CHECK(seen.size() == total);
  CHECK(unrank_triple(0) == Face{1, 2, 3});
  CHECK(unrank_triple(1) == Face{1, 2, 4});
  CHECK(unrank_triple(total - 1) == Face{6, 7, 8});
  CHECK(unrank_triple(static_cast<std::uint64_t>(choose3(300)) - 1) == Face{298, 299, 300});
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(sample_faces({2, 0.5, 1}), Error);
  CHECK_THROWS_AS(sample_faces({5, -0.1, 1}), Error);
  CHECK_THROWS_AS(sample_faces({5, 1.5, 1}), Error);
  CHECK_THROWS_AS(sample_faces({5, std::nan(""), 1}), Error);
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qduality/errors.hpp"
#include "qduality/pochhammer.hpp"
#include "qduality/rational.hpp"

namespace qduality {

// Counter-based seeding: every cell of a run grid draws from its own
// substream, so cells are reproducible independently and in parallel.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

uint64_t substream_seed(uint64_t seed, uint64_t cell_index);

inline constexpr int kMaxResampleAttempts = 100;
inline constexpr long kCoordinateBound = 1000000;  // numerators/denominators in [1, 10^6]

class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  uint64_t raw() { return rng_.next(); }
  long uniform_int(long lo, long hi);  // inclusive, rejection-sampled

  // Positive rational with numerator and denominator uniform in [1, 10^6].
  Rational rational();
  // Same, excluding the value 1 (degenerate for q and t coordinates).
  Rational rational_ne1();

  SqrtPoint sqrt_point(int n);

  std::vector<Rational> rationals(int count);

 private:
  SplitMix64 rng_;
};

// Runs body() up to kMaxResampleAttempts times, retrying while it throws
// pole_error; rethrows resample_exhausted once attempts run out. body takes
// the attempt's Sampler.
template <class F>
auto with_resampling(uint64_t seed, F&& body) {
  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    Sampler sampler(substream_seed(seed, static_cast<uint64_t>(attempt)));
    try {
      return body(sampler);
    } catch (const pole_error&) {
      // resample
    }
  }
  throw resample_exhausted("no pole-free point found in " + std::to_string(kMaxResampleAttempts) +
                           " attempts");
}

}  // namespace qduality

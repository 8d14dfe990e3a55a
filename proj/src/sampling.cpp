#include "qduality/sampling.hpp"

#include <stdexcept>

namespace qduality {

uint64_t substream_seed(uint64_t seed, uint64_t cell_index) {
  SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (cell_index + 1)));
  return mix.next();
}

long Sampler::uniform_int(long lo, long hi) {
  if (lo > hi) throw std::domain_error("empty sampling range");
  uint64_t width = static_cast<uint64_t>(hi - lo) + 1;
  uint64_t limit = UINT64_MAX - UINT64_MAX % width;
  uint64_t x;
  do {
    x = rng_.next();
  } while (x >= limit);
  return lo + static_cast<long>(x % width);
}

Rational Sampler::rational() {
  long num = uniform_int(1, kCoordinateBound);
  long den = uniform_int(1, kCoordinateBound);
  return make_rational(num, den);
}

Rational Sampler::rational_ne1() {
  for (;;) {
    Rational r = rational();
    if (r != 1) return r;
  }
}

SqrtPoint Sampler::sqrt_point(int n) {
  SqrtPoint pt;
  pt.q_sqrt = rational_ne1();
  pt.t_sqrt = rational_ne1();
  pt.u_sqrts.reserve(n);
  pt.v_sqrts.reserve(n);
  for (int i = 0; i < n; ++i) pt.u_sqrts.push_back(rational());
  for (int i = 0; i < n; ++i) pt.v_sqrts.push_back(rational());
  validate_point(pt);
  return pt;
}

std::vector<Rational> Sampler::rationals(int count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(rational());
  return out;
}

}  // namespace qduality

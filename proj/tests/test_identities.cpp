#include <doctest.h>

#include "qduality/identities.hpp"
#include "qduality/sampling.hpp"

using namespace qduality;

TEST_CASE("weight-zero sums are 1 on both sides") {
  Sampler sampler(3);
  SqrtPoint pt = sampler.sqrt_point(2);
  CHECK(side_sym_trig(Side::LHS, pt, 0) == 1);
  CHECK(side_sym_trig(Side::RHS, pt, 0) == 1);
}

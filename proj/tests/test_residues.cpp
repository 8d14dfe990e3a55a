#include <doctest.h>

#include "qduality/residues.hpp"
#include "qduality/sampling.hpp"

using namespace qduality;

TEST_CASE("zero-weight summand factors to the empty product") {
  FactoredSummand f = factorize_summand(IdentityId::SymTrigDuality, Side::LHS, {0, 0}, 2);
  CHECK(f.factors.empty());
}

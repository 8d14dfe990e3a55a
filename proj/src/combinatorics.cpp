#include "qduality/combinatorics.hpp"

#include <cassert>

namespace qduality {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class composition_count(int n, int K) {
  if (n < 1 || K < 0) throw std::domain_error("composition_count needs n >= 1, K >= 0");
  return binomial(static_cast<unsigned long>(K + n - 1), static_cast<unsigned long>(n - 1));
}

PoleSetMembership pole_set_membership(const Composition& k, int p) {
  if (k.size() < 2) throw std::domain_error("pole-set membership needs at least two parts");
  bool in_first = k[0] >= k[1] + 1 - p && k[1] >= p;
  bool in_second = k[0] >= -p && k[1] >= k[0] + 1 + p;
  assert(!(in_first && in_second));
  if (in_first) return PoleSetMembership::InFirst;
  if (in_second) return PoleSetMembership::InSecond;
  return PoleSetMembership::Neither;
}

Composition pole_pair_map(const Composition& k, int p) {
  if (pole_set_membership(k, p) == PoleSetMembership::Neither)
    throw std::domain_error("pole_pair_map applies only to indices in one of the pole families");
  Composition out = k;
  out[0] = k[1] - p;
  out[1] = k[0] + p;
  return out;
}

}  // namespace qduality

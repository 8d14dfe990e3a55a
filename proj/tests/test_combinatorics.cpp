#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qduality/combinatorics.hpp"

using namespace qduality;

namespace {

std::vector<Composition> collect(int n, int K) {
  std::vector<Composition> out;
  for (const Composition& k : CompositionRange(n, K)) out.push_back(k);
  return out;
}

// Recursive reference enumeration.
void compositions_recursive(int n, int K, Composition& prefix, std::set<Composition>& out) {
  if (n == 1) {
    prefix.push_back(K);
    out.insert(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= K; ++first) {
    prefix.push_back(first);
    compositions_recursive(n - 1, K - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("composition stream small cases") {
  CHECK(collect(2, 2) == std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(collect(3, 0) == std::vector<Composition>{{0, 0, 0}});
  CHECK(collect(1, 5) == std::vector<Composition>{{5}});
  CHECK_THROWS_AS(CompositionRange(0, 1), std::domain_error);
}

TEST_CASE("composition stream is complete, duplicate-free and counted") {
  for (int n = 1; n <= 4; ++n)
    for (int K = 0; K <= 6; ++K) {
      std::vector<Composition> got = collect(n, K);
      std::set<Composition> seen(got.begin(), got.end());
      CHECK(seen.size() == got.size());  // duplicate-free
      std::set<Composition> expect;
      Composition prefix;
      compositions_recursive(n, K, prefix, expect);
      CHECK(seen == expect);
      CHECK(composition_count(n, K) == static_cast<long>(got.size()));
      for (const Composition& k : got) CHECK(composition_sum(k) == K);
    }
  CHECK(composition_count(3, 4) == 15);  // stars and bars: C(6,2)
}

TEST_CASE("subset stream") {
  std::vector<IndexSubset> got;
  for (const IndexSubset& s : SubsetRange(4, 2)) got.push_back(s);
  CHECK(got.size() == 6);
  CHECK(binomial(4, 2) == 6);
  CHECK(got.front() == IndexSubset{0, 1});
  CHECK(got.back() == IndexSubset{2, 3});

  std::vector<IndexSubset> empty_only;
  for (const IndexSubset& s : SubsetRange(3, 0)) empty_only.push_back(s);
  CHECK(empty_only == std::vector<IndexSubset>{{}});

  std::vector<IndexSubset> full_only;
  for (const IndexSubset& s : SubsetRange(3, 3)) full_only.push_back(s);
  CHECK(full_only == std::vector<IndexSubset>{{0, 1, 2}});

  CHECK_THROWS_AS(SubsetRange(2, 3), std::domain_error);
}

TEST_CASE("pole-set membership examples") {
  CHECK(pole_set_membership({2, 1, 0}, 1) == PoleSetMembership::InFirst);
  CHECK(pole_set_membership({0, 3, 1}, 1) == PoleSetMembership::InSecond);
  CHECK(pole_set_membership({1, 1}, 5) == PoleSetMembership::Neither);
  CHECK_THROWS_AS(pole_set_membership({3}, 1), std::domain_error);
}

TEST_CASE("pair map examples") {
  CHECK(pole_pair_map({2, 1}, 1) == Composition{0, 3});
  CHECK(pole_set_membership({0, 3}, 1) == PoleSetMembership::InSecond);
  CHECK(pole_pair_map({3, 1}, 0) == Composition{1, 3});
  CHECK(pole_set_membership({3, 1}, 0) == PoleSetMembership::InFirst);
  CHECK(pole_set_membership({1, 3}, 0) == PoleSetMembership::InSecond);
  CHECK_THROWS_AS(pole_pair_map({1, 1}, 5), std::domain_error);
}

TEST_CASE("pair map is a sum-preserving bijection between the families") {
  for (int n = 2; n <= 4; ++n)
    for (int K = 0; K <= 6; ++K)
      for (int p = -3; p <= 3; ++p) {
        std::vector<Composition> first, second;
        for (const Composition& k : CompositionRange(n, K)) {
          PoleSetMembership ms = pole_set_membership(k, p);
          if (ms == PoleSetMembership::InFirst) first.push_back(k);
          if (ms == PoleSetMembership::InSecond) second.push_back(k);
        }
        std::vector<Composition> image;
        for (const Composition& k : first) {
          Composition fk = pole_pair_map(k, p);
          CHECK(composition_sum(fk) == K);
          CHECK(pole_set_membership(fk, p) == PoleSetMembership::InSecond);
          CHECK(pole_pair_map(fk, p) == k);  // applying the map twice is the identity
          image.push_back(fk);
        }
        std::sort(image.begin(), image.end());
        std::sort(second.begin(), second.end());
        CHECK(image == second);  // image-exact
      }
}

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace qduality {

// Ordered tuple of non-negative integers with a prescribed sum.
using Composition = std::vector<int>;

inline int composition_sum(const Composition& k) {
  int s = 0;
  for (int part : k) s += part;
  return s;
}

// Lazily enumerates the compositions of K into n parts, starting from
// (K,0,...,0) and descending lexicographically to (0,...,0,K).
class CompositionRange {
 public:
  CompositionRange(int n, int K) : n_(n), K_(K) {
    if (n < 1) throw std::domain_error("compositions need n >= 1");
    if (K < 0) throw std::domain_error("compositions need K >= 0");
  }

  class iterator {
   public:
    iterator() = default;  // end
    iterator(int n, int K) : cur_(n, 0), done_(false) { cur_[0] = K; }
    const Composition& operator*() const { return cur_; }
    const Composition* operator->() const { return &cur_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || cur_ == o.cur_); }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    void advance() {
      int n = static_cast<int>(cur_.size());
      int i = n - 2;
      while (i >= 0 && cur_[i] == 0) --i;
      if (i < 0) {
        done_ = true;
        return;
      }
      int tail = 0;
      for (int j = i + 1; j < n; ++j) {
        tail += cur_[j];
        cur_[j] = 0;
      }
      cur_[i] -= 1;
      cur_[i + 1] = tail + 1;
    }

    Composition cur_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, K_); }
  iterator end() const { return iterator(); }

 private:
  int n_, K_;
};

// Sorted r-element subsets of {0,...,n-1}, lexicographic.
using IndexSubset = std::vector<int>;

class SubsetRange {
 public:
  SubsetRange(int n, int r) : n_(n), r_(r) {
    if (n < 1) throw std::domain_error("subsets need n >= 1");
    if (r < 0 || r > n) throw std::domain_error("subset size out of range");
  }

  class iterator {
   public:
    iterator() = default;
    iterator(int n, int r) : n_(n), cur_(r), done_(false) {
      for (int i = 0; i < r; ++i) cur_[i] = i;
    }
    const IndexSubset& operator*() const { return cur_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || cur_ == o.cur_); }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    void advance() {
      int r = static_cast<int>(cur_.size());
      int i = r - 1;
      while (i >= 0 && cur_[i] == n_ - r + i) --i;
      if (i < 0) {
        done_ = true;
        return;
      }
      ++cur_[i];
      for (int j = i + 1; j < r; ++j) cur_[j] = cur_[j - 1] + 1;
    }

    int n_ = 0;
    IndexSubset cur_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, r_); }
  iterator end() const { return iterator(); }

 private:
  int n_, r_;
};

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class composition_count(int n, int K);  // C(K+n-1, n-1)

// Classification of a summand index against the two families of summands
// whose denominators vanish on the diagonal u_1 = q^p u_2. Membership is
// decided by the first two parts:
//   first family:  k_1 >= k_2 + 1 - p and k_2 >= p
//   second family: k_1 >= -p         and k_2 >= k_1 + 1 + p
// The conditions are mutually exclusive (asserted, not assumed).
enum class PoleSetMembership { InFirst, InSecond, Neither };

PoleSetMembership pole_set_membership(const Composition& k, int p);

// (k_1, k_2, rest) -> (k_2 - p, k_1 + p, rest): a sum-preserving involution
// exchanging the two families. Throws for indices in neither family.
Composition pole_pair_map(const Composition& k, int p);

}  // namespace qduality

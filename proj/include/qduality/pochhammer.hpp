#pragma once

#include <stdexcept>
#include <vector>

#include "qduality/errors.hpp"
#include "qduality/mp.hpp"
#include "qduality/rational.hpp"
#include "qduality/theta.hpp"

namespace qduality {

// Evaluation point for the symmetric-family identities, given by the square
// roots of all variables: q = q_sqrt^2, t = t_sqrt^2, u_i = u_sqrts[i]^2,
// v_a = v_sqrts[a]^2. Every half-integer power in the symmetric Pochhammer
// symbols is then an exact monomial in these coordinates.
template <class T>
struct SqrtPointT {
  T q_sqrt;
  T t_sqrt;
  std::vector<T> u_sqrts;
  std::vector<T> v_sqrts;

  int n() const { return static_cast<int>(u_sqrts.size()); }
};

using SqrtPoint = SqrtPointT<Rational>;

template <class T>
void validate_point(const SqrtPointT<T>& pt) {
  if (pt.u_sqrts.empty() || pt.u_sqrts.size() != pt.v_sqrts.size())
    throw std::domain_error("point needs n >= 1 and equally many u and v entries");
  if (is_zero(pt.q_sqrt) || is_zero(pt.t_sqrt)) throw std::domain_error("zero coordinate");
  for (const T& w : pt.u_sqrts)
    if (is_zero(w)) throw std::domain_error("zero coordinate");
  for (const T& w : pt.v_sqrts)
    if (is_zero(w)) throw std::domain_error("zero coordinate");
}

// Rising factorial x(x+1)...(x+n-1); empty product is 1.
Rational poch_rational(const Rational& x, int n);

// q-Pochhammer (z;q)_n = (1-z)(1-qz)...(1-q^{n-1}z).
template <class T>
T poch_q(const T& z, const T& q, int n) {
  if (n < 0) throw std::domain_error("q-Pochhammer needs a non-negative index");
  T one = scalar_one(z);
  T acc = one;
  T qmz = z;  // q^m z
  for (int m = 0; m < n; ++m) {
    acc = acc * (one - qmz);
    qmz = qmz * q;
  }
  return acc;
}

// Symmetric q-Pochhammer in square-root coordinates:
//   [z;q]_n = prod_{m=0}^{n-1} (q^{m/2} z^{1/2} - q^{-m/2} z^{-1/2}),
// and for n < 0 the reciprocal product
//   [z;q]_{-n} = prod_{m=1}^{n} (q^{m/2} z^{1/2} - q^{-m/2} z^{-1/2})^{-1}.
// A vanishing factor under a negative index is a pole.
template <class T>
T poch_sym(const T& z_sqrt, const T& q_sqrt, int n) {
  if (is_zero(z_sqrt) || is_zero(q_sqrt))
    throw std::domain_error("symmetric Pochhammer needs nonzero square roots");
  T one = scalar_one(z_sqrt);
  T acc = one;
  if (n >= 0) {
    T a = z_sqrt;  // (q^m z)^{1/2}
    for (int m = 0; m < n; ++m) {
      acc = acc * (a - one / a);
      a = a * q_sqrt;
    }
  } else {
    T a = z_sqrt * q_sqrt;  // (q^m z)^{1/2}, m from 1
    for (int m = 1; m <= -n; ++m) {
      T f = a - one / a;
      if (is_zero(f)) throw pole_error("vanishing factor in negative-index symmetric Pochhammer");
      acc = acc / f;
      a = a * q_sqrt;
    }
  }
  return acc;
}

// Elliptic Pochhammer (z;p,q)_k = theta(z;p) theta(qz;p) ... theta(q^{k-1}z;p).
MPComplex poch_elliptic(const MPComplex& z, const MPComplex& nome, const MPComplex& q, int k,
                        const PrecisionPolicy& policy);

}  // namespace qduality

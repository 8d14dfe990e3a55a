#include "qduality/pochhammer.hpp"

namespace qduality {

Rational poch_rational(const Rational& x, int n) {
  if (n < 0) throw std::domain_error("rising factorial needs a non-negative index");
  Rational acc(1);
  Rational term = x;
  for (int m = 0; m < n; ++m) {
    acc *= term;
    term += 1;
  }
  return acc;
}

MPComplex poch_elliptic(const MPComplex& z, const MPComplex& nome, const MPComplex& q, int k,
                        const PrecisionPolicy& policy) {
  if (k < 0) throw std::domain_error("elliptic Pochhammer needs a non-negative index");
  MPComplex acc = scalar_one(z);
  MPComplex zq = z;  // q^m z
  for (int m = 0; m < k; ++m) {
    acc = acc * theta_eval(zq, nome, policy);
    zq = zq * q;
  }
  return acc;
}

}  // namespace qduality

#include "qduality/theta.hpp"

#include <stdexcept>

namespace qduality {

long theta_truncation_index(const MPComplex& z, const MPComplex& nome,
                            const PrecisionPolicy& policy) {
  policy.validate();
  const mpfr_prec_t scratch = 64;
  MPFloat pa = nome.abs().to_precision(scratch);
  MPFloat one(1, scratch);
  if (!(pa < one)) throw std::domain_error("theta nome must satisfy |p| < 1");
  if (z.is_zero()) throw std::domain_error("theta argument must be nonzero");
  if (pa.is_zero()) return 1;

  MPFloat za = z.abs().to_precision(scratch);
  MPFloat zmax = std::max(za, one / za, [](const MPFloat& a, const MPFloat& b) { return a < b; });
  // N > (truncation_bits + log2 max(|z|,1/|z|)) / -log2|p|
  MPFloat need = MPFloat(static_cast<long>(policy.truncation_bits()), scratch) + log2(zmax);
  MPFloat denom = -log2(pa);
  double n = (need / denom).to_double();
  long N = n <= 0 ? 1 : static_cast<long>(n) + 1;
  return N < 1 ? 1 : N;
}

MPComplex theta_eval(const MPComplex& z, const MPComplex& nome, const PrecisionPolicy& policy) {
  long N = theta_truncation_index(z, nome, policy);  // validates domain
  mpfr_prec_t prec = policy.working_bits;
  MPComplex zw = z.to_precision(prec);
  MPComplex p = nome.to_precision(prec);
  MPComplex one = scalar_one(zw);
  MPComplex zinv = one / zw;

  MPComplex acc = one - zw;         // n = 0 factor
  MPComplex pn = p;                 // p^n, n from 1
  for (long n = 1; n < N; ++n) {
    acc = acc * (one - pn * zw);
    pn = pn * p;
  }
  MPComplex pm = p;                 // p^m, m from 1
  for (long m = 1; m <= N; ++m) {
    acc = acc * (one - pm * zinv);
    pm = pm * p;
  }
  return acc;
}

}  // namespace qduality

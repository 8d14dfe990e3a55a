// Test-side oracles, kept independent of the library code paths they check.
#pragma once

#include <vector>

#include "qduality/mp.hpp"
#include "qduality/rational.hpp"

namespace qduality::oracles {

// Truncated theta product computed directly at high precision with its own
// stopping rule: stop once |p|^n max(|z|,1/|z|) < 2^-(prec + 64).
inline MPComplex theta_direct(const MPComplex& z, const MPComplex& nome, mpfr_prec_t prec) {
  MPComplex zz = z.to_precision(prec);
  MPComplex p = nome.to_precision(prec);
  MPComplex one(1L, prec);
  MPComplex acc = one - zz;
  MPComplex zinv = one / zz;
  MPFloat pa = p.abs();
  MPFloat za = zz.abs();
  MPFloat zmax = std::max(za, (one / zz).abs(),
                          [](const MPFloat& a, const MPFloat& b) { return a < b; });
  MPFloat cutoff = MPFloat::pow2(-(static_cast<long>(prec) + 64), prec);
  MPFloat tail = pa * zmax;
  MPComplex pn = p;
  for (long n = 1; cutoff < tail; ++n) {
    acc = acc * (one - pn * zz) * (one - pn * zinv);
    pn = pn * p;
    tail = tail * pa;
  }
  return acc;
}

// Number of bits to which two values agree, relative to their magnitude:
// floor(-log2(|a-b| / max|.|)), capped at the working precision.
inline long agreement_bits_between(const MPComplex& a, const MPComplex& b) {
  mpfr_prec_t prec = std::max(a.precision(), b.precision());
  MPFloat diff = (a.to_precision(prec) - b.to_precision(prec)).abs();
  MPFloat scale = std::max(a.abs(), b.abs(),
                           [](const MPFloat& x, const MPFloat& y) { return x < y; });
  if (diff.is_zero()) return static_cast<long>(prec);
  MPFloat bits = -log2(diff / scale);
  return static_cast<long>(bits.to_double());
}

}  // namespace qduality::oracles

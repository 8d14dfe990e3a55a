#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "qduality/rational.hpp"

namespace qduality {

// Multiprecision real with explicit mantissa width, round-to-nearest.
class MPFloat {
 public:
  explicit MPFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  MPFloat(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  MPFloat(const Rational& value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }
  MPFloat(const MPFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MPFloat(MPFloat&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
  }
  MPFloat& operator=(MPFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MPFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  MPFloat to_precision(mpfr_prec_t prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation; deterministic for a given mantissa.
  std::string str(int digits = 30) const;

  MPFloat operator-() const;
  friend MPFloat operator+(const MPFloat& a, const MPFloat& b);
  friend MPFloat operator-(const MPFloat& a, const MPFloat& b);
  friend MPFloat operator*(const MPFloat& a, const MPFloat& b);
  friend MPFloat operator/(const MPFloat& a, const MPFloat& b);
  friend bool operator==(const MPFloat& a, const MPFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const MPFloat& a, const MPFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const MPFloat& a, const MPFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

  friend MPFloat abs(const MPFloat& a);
  friend MPFloat sqrt(const MPFloat& a);
  friend MPFloat hypot(const MPFloat& a, const MPFloat& b);
  friend MPFloat log2(const MPFloat& a);
  // 2^e at the given precision.
  static MPFloat pow2(long e, mpfr_prec_t prec);

  const mpfr_t& raw() const { return v_; }

 private:
  mpfr_t v_;
};

MPFloat pow_int(const MPFloat& base, long exp);
inline bool is_zero(const MPFloat& f) { return f.is_zero(); }
inline MPFloat scalar_one(const MPFloat& like) { return MPFloat(1, like.precision()); }

// Multiprecision complex; both components carry the same mantissa width.
// No interval arithmetic: accuracy is validated by recomputation at doubled
// precision (see agreement_check).
class MPComplex {
 public:
  static constexpr mpfr_prec_t kMinPrecision = 64;

  explicit MPComplex(mpfr_prec_t prec = kMinPrecision);
  MPComplex(MPFloat re, MPFloat im);
  MPComplex(long re, mpfr_prec_t prec) : MPComplex(MPFloat(re, prec), MPFloat(0, prec)) {}
  MPComplex(const Rational& re, mpfr_prec_t prec)
      : MPComplex(MPFloat(re, prec), MPFloat(0, prec)) {}
  MPComplex(const Rational& re, const Rational& im, mpfr_prec_t prec)
      : MPComplex(MPFloat(re, prec), MPFloat(im, prec)) {}

  const MPFloat& real() const { return re_; }
  const MPFloat& imag() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }
  MPComplex to_precision(mpfr_prec_t prec) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  MPFloat abs() const { return hypot(re_, im_); }
  std::string str(int digits = 30) const;

  MPComplex operator-() const { return MPComplex(-re_, -im_); }
  friend MPComplex operator+(const MPComplex& a, const MPComplex& b);
  friend MPComplex operator-(const MPComplex& a, const MPComplex& b);
  friend MPComplex operator*(const MPComplex& a, const MPComplex& b);
  friend MPComplex operator/(const MPComplex& a, const MPComplex& b);
  friend bool operator==(const MPComplex& a, const MPComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  MPFloat re_, im_;
};

MPComplex pow_int(const MPComplex& base, long exp);
inline bool is_zero(const MPComplex& z) { return z.is_zero(); }
inline MPComplex scalar_one(const MPComplex& like) { return MPComplex(1, like.precision()); }

// Controls series truncation and the two-precision agreement test.
struct PrecisionPolicy {
  int working_bits = 256;
  int guard_bits = 32;
  int agreement_bits = 150;

  void validate() const;  // throws std::domain_error if inconsistent
  int truncation_bits() const { return working_bits + guard_bits; }
  PrecisionPolicy doubled() const { return {2 * working_bits, guard_bits, agreement_bits}; }
};

// True iff lo and hi agree to agreement_bits: relative difference at or below
// 2^-agreement_bits, measured absolutely when both magnitudes are below 1.
bool agreement_check(const MPComplex& value_lo, const MPComplex& value_hi,
                     const PrecisionPolicy& policy);
bool agreement_check(const MPFloat& value_lo, const MPFloat& value_hi,
                     const PrecisionPolicy& policy);

}  // namespace qduality

#include "qduality/mp.hpp"

#include <algorithm>
#include <stdexcept>

namespace qduality {

namespace {
mpfr_prec_t join(const MPFloat& a, const MPFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

MPFloat MPFloat::to_precision(mpfr_prec_t prec) const {
  MPFloat r(prec);
  mpfr_set(const_cast<mpfr_ptr>(r.raw()), v_, MPFR_RNDN);
  return r;
}

std::string MPFloat::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

MPFloat MPFloat::operator-() const {
  MPFloat r(precision());
  mpfr_neg(const_cast<mpfr_ptr>(r.raw()), v_, MPFR_RNDN);
  return r;
}

#define QD_MPF_BINOP(op, fn)                                            \
  MPFloat operator op(const MPFloat& a, const MPFloat& b) {            \
    MPFloat r(join(a, b));                                             \
    fn(const_cast<mpfr_ptr>(r.raw()), a.v_, b.v_, MPFR_RNDN);          \
    return r;                                                          \
  }

QD_MPF_BINOP(+, mpfr_add)
QD_MPF_BINOP(-, mpfr_sub)
QD_MPF_BINOP(*, mpfr_mul)
QD_MPF_BINOP(/, mpfr_div)
#undef QD_MPF_BINOP

MPFloat abs(const MPFloat& a) {
  MPFloat r(a.precision());
  mpfr_abs(const_cast<mpfr_ptr>(r.raw()), a.raw(), MPFR_RNDN);
  return r;
}

MPFloat sqrt(const MPFloat& a) {
  MPFloat r(a.precision());
  mpfr_sqrt(const_cast<mpfr_ptr>(r.raw()), a.raw(), MPFR_RNDN);
  return r;
}

MPFloat hypot(const MPFloat& a, const MPFloat& b) {
  MPFloat r(join(a, b));
  mpfr_hypot(const_cast<mpfr_ptr>(r.raw()), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

MPFloat log2(const MPFloat& a) {
  MPFloat r(a.precision());
  mpfr_log2(const_cast<mpfr_ptr>(r.raw()), a.raw(), MPFR_RNDN);
  return r;
}

MPFloat MPFloat::pow2(long e, mpfr_prec_t prec) {
  MPFloat r(prec);
  mpfr_set_si_2exp(const_cast<mpfr_ptr>(r.raw()), 1, e, MPFR_RNDN);
  return r;
}

MPFloat pow_int(const MPFloat& base, long exp) {
  MPFloat r(base.precision());
  if (exp >= 0) {
    mpfr_pow_ui(const_cast<mpfr_ptr>(r.raw()), base.raw(), static_cast<unsigned long>(exp),
                MPFR_RNDN);
  } else {
    if (base.is_zero()) throw std::domain_error("zero raised to negative power");
    mpfr_pow_ui(const_cast<mpfr_ptr>(r.raw()), base.raw(), static_cast<unsigned long>(-exp),
                MPFR_RNDN);
    mpfr_si_div(const_cast<mpfr_ptr>(r.raw()), 1, r.raw(), MPFR_RNDN);
  }
  return r;
}

MPComplex::MPComplex(mpfr_prec_t prec) : re_(0L, prec), im_(0L, prec) {
  if (prec < kMinPrecision) throw std::domain_error("MPComplex precision below 64 bits");
}

MPComplex::MPComplex(MPFloat re, MPFloat im) : re_(std::move(re)), im_(std::move(im)) {
  mpfr_prec_t p = std::max(re_.precision(), im_.precision());
  if (p < kMinPrecision) throw std::domain_error("MPComplex precision below 64 bits");
  if (re_.precision() != p) re_ = re_.to_precision(p);
  if (im_.precision() != p) im_ = im_.to_precision(p);
}

MPComplex MPComplex::to_precision(mpfr_prec_t prec) const {
  return MPComplex(re_.to_precision(prec), im_.to_precision(prec));
}

std::string MPComplex::str(int digits) const {
  return "(" + re_.str(digits) + ", " + im_.str(digits) + ")";
}

MPComplex operator+(const MPComplex& a, const MPComplex& b) {
  return MPComplex(a.re_ + b.re_, a.im_ + b.im_);
}

MPComplex operator-(const MPComplex& a, const MPComplex& b) {
  return MPComplex(a.re_ - b.re_, a.im_ - b.im_);
}

MPComplex operator*(const MPComplex& a, const MPComplex& b) {
  return MPComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

MPComplex operator/(const MPComplex& a, const MPComplex& b) {
  if (b.is_zero()) throw std::domain_error("complex division by zero");
  MPFloat n = b.re_ * b.re_ + b.im_ * b.im_;
  return MPComplex((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
}

MPComplex pow_int(const MPComplex& base, long exp) {
  if (exp < 0) return scalar_one(base) / pow_int(base, -exp);
  MPComplex acc = scalar_one(base);
  MPComplex sq = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1UL) acc = acc * sq;
    e >>= 1UL;
    if (e > 0) sq = sq * sq;
  }
  return acc;
}

void PrecisionPolicy::validate() const {
  if (working_bits <= 0 || guard_bits <= 0 || agreement_bits <= 0)
    throw std::domain_error("precision policy fields must be positive");
  if (agreement_bits > working_bits - guard_bits)
    throw std::domain_error("agreement_bits must not exceed working_bits - guard_bits");
}

namespace {
bool agree(const MPFloat& diff, const MPFloat& scale, int agreement_bits) {
  MPFloat tol = MPFloat::pow2(-agreement_bits, std::max(diff.precision(), scale.precision()));
  MPFloat one(1, tol.precision());
  if (scale < one) return diff <= tol;  // absolute when both magnitudes < 1
  return diff <= scale * tol;
}
}  // namespace

bool agreement_check(const MPComplex& value_lo, const MPComplex& value_hi,
                     const PrecisionPolicy& policy) {
  mpfr_prec_t p = std::max(value_lo.precision(), value_hi.precision());
  MPComplex lo = value_lo.to_precision(p);
  MPComplex hi = value_hi.to_precision(p);
  MPFloat diff = (lo - hi).abs();
  MPFloat scale = std::max(lo.abs(), hi.abs(), [](const MPFloat& a, const MPFloat& b) { return a < b; });
  return agree(diff, scale, policy.agreement_bits);
}

bool agreement_check(const MPFloat& value_lo, const MPFloat& value_hi,
                     const PrecisionPolicy& policy) {
  MPFloat diff = abs(value_lo - value_hi);
  MPFloat scale = std::max(abs(value_lo), abs(value_hi),
                           [](const MPFloat& a, const MPFloat& b) { return a < b; });
  return agree(diff, scale, policy.agreement_bits);
}

}  // namespace qduality

#include <doctest.h>

#include "oracles.hpp"
#include "qduality/mp.hpp"
#include "qduality/rational.hpp"
#include "qduality/sampling.hpp"
#include "qduality/theta.hpp"

using namespace qduality;

TEST_CASE("rational construction and canonical form") {
  Rational r = make_rational(6, -4);
  CHECK(r == make_rational(-3, 2));
  CHECK(r.get_den() == 2);  // denominator stays positive
  CHECK(to_string(r) == "-3/2");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);

  CHECK(rational_from_string("0.25") == make_rational(1, 4));
  CHECK(rational_from_string("-7/5") == make_rational(-7, 5));
  CHECK(rational_from_string("3") == 3);
  CHECK_THROWS_AS(rational_from_string("abc"), std::domain_error);
}

TEST_CASE("rational arithmetic is exact on random big values") {
  Sampler sampler(7);
  for (int i = 0; i < 50; ++i) {
    Rational a = sampler.rational() - sampler.rational();
    Rational b = sampler.rational();
    Rational c = sampler.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!is_zero(a)) CHECK(a * (Rational(1) / a) == 1);
    CHECK((a - b) + b == a);
    CHECK((a * b) / b == a);
  }
}

TEST_CASE("integer powers of rationals") {
  CHECK(pow_int(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(pow_int(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow_int(make_rational(-5, 7), 0) == 1);
  CHECK_THROWS_AS(pow_int(Rational(0), -1), std::domain_error);
}

TEST_CASE("precision policy invariants") {
  PrecisionPolicy ok{256, 32, 150};
  ok.validate();
  PrecisionPolicy bad{128, 32, 100};
  CHECK_THROWS_AS(bad.validate(), std::domain_error);  // 100 > 128 - 32
  CHECK_THROWS_AS(MPComplex(mpfr_prec_t{32}), std::domain_error);
}

TEST_CASE("complex arithmetic basics") {
  MPComplex a(make_rational(3, 2), make_rational(-1, 4), 128);
  MPComplex b(make_rational(-2, 5), make_rational(7, 3), 128);
  MPComplex prod = a * b;
  MPComplex back = prod / b;
  PrecisionPolicy policy{128, 16, 100};
  CHECK(agreement_check(back, a, policy));
  CHECK(pow_int(b, 3) == b * b * b);
  MPComplex inv = pow_int(b, -2);
  CHECK(agreement_check(inv * b * b, MPComplex(1L, 128), policy));
  CHECK_THROWS_AS(MPComplex(1L, 128) / MPComplex(mpfr_prec_t{128}), std::domain_error);
}

TEST_CASE("theta at zero nome is 1 - z") {
  PrecisionPolicy policy{128, 32, 64};
  for (long num : {3L, -2L, 17L}) {
    MPComplex z(make_rational(num, 7), 128);
    MPComplex expect = MPComplex(1L, 128) - z;
    CHECK(theta_eval(z, MPComplex(mpfr_prec_t{128}), policy) == expect);
  }
}

TEST_CASE("theta vanishes exactly at z = 1") {
  PrecisionPolicy policy{128, 32, 64};
  MPComplex z(1L, 128);
  MPComplex p(make_rational(1, 10), 128);
  CHECK(theta_eval(z, p, policy).is_zero());
}

TEST_CASE("theta domain errors") {
  PrecisionPolicy policy{128, 32, 64};
  CHECK_THROWS_AS(theta_eval(MPComplex(1L, 128), MPComplex(2L, 128), policy), std::domain_error);
  CHECK_THROWS_AS(theta_eval(MPComplex(mpfr_prec_t{128}), MPComplex(make_rational(1, 10), 128), policy),
                  std::domain_error);
}

TEST_CASE("theta at 128 bits matches the 512-bit direct-product oracle") {
  PrecisionPolicy policy{128, 32, 96};
  MPComplex z(make_rational(1, 2), 128);
  MPComplex p(make_rational(1, 10), 128);
  MPComplex fast = theta_eval(z, p, policy);
  MPComplex slow = oracles::theta_direct(MPComplex(make_rational(1, 2), 512),
                                         MPComplex(make_rational(1, 10), 512), 512);
  CHECK(oracles::agreement_bits_between(fast, slow) >= 96);
}

TEST_CASE("agreement check thresholds") {
  PrecisionPolicy policy{256, 32, 96};
  MPComplex a(make_rational(5, 3), 256);
  CHECK(agreement_check(a, a, policy));
  MPComplex b = a + MPComplex(MPFloat::pow2(-8, 256), MPFloat(0, 256));
  CHECK_FALSE(agreement_check(a, b, policy));

  // theta at 128 vs 256 bits agrees through the policy's window
  PrecisionPolicy lo{128, 16, 96};
  PrecisionPolicy hi{256, 16, 96};
  MPComplex z(make_rational(1, 2), 128);
  MPComplex p(make_rational(1, 10), 128);
  MPComplex t_lo = theta_eval(z, p, lo);
  MPComplex t_hi = theta_eval(z.to_precision(256), p.to_precision(256), hi);
  CHECK(agreement_check(t_lo, t_hi, lo));
}

TEST_CASE("theta truncation is stable under adding 64 working bits") {
  Sampler sampler(99);
  PrecisionPolicy policy{192, 32, 96};
  for (int trial = 0; trial < 10; ++trial) {
    // |p| <= 1/2, |z| spread over [1e-3, 1e3]
    Rational pr = sampler.rational() / (2 * (1 + abs(sampler.rational())));
    if (is_zero(pr)) continue;
    while (abs(pr) > make_rational(1, 2)) pr /= 2;
    Rational zr = sampler.rational() * make_rational(sampler.uniform_int(1, 1000), 1) /
                  Rational(sampler.uniform_int(1, 1000));
    if (is_zero(zr)) continue;
    MPComplex z(zr, 192);
    MPComplex p(pr, 192);
    MPComplex base = theta_eval(z, p, policy);
    PrecisionPolicy wider{policy.working_bits + 64, policy.guard_bits, policy.agreement_bits};
    MPComplex refined = theta_eval(z.to_precision(256), p.to_precision(256), wider);
    CHECK(agreement_check(base, refined, policy));
  }
}

TEST_CASE("theta truncation index grows with precision and stays finite") {
  MPComplex z(make_rational(3, 2), 128);
  MPComplex p(make_rational(2, 5), 128);
  long last = 0;
  for (int bits : {64, 128, 256, 512}) {
    PrecisionPolicy policy{bits, 32, 16};
    long n = theta_truncation_index(z, p, policy);
    CHECK(n > last);
    CHECK(n < 100000);
    last = n;
  }
}

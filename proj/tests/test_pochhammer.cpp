#include <doctest.h>

#include "oracles.hpp"
#include "qduality/pochhammer.hpp"
#include "qduality/sampling.hpp"

using namespace qduality;

TEST_CASE("rising factorial") {
  CHECK(poch_rational(Rational(1), 3) == 6);
  CHECK(poch_rational(make_rational(22, 7), 0) == 1);
  CHECK(poch_rational(Rational(-2), 4) == 0);  // hits the factor (-2+2)
  CHECK(poch_rational(make_rational(1, 2), 2) == make_rational(3, 4));
  CHECK_THROWS_AS(poch_rational(Rational(1), -1), std::domain_error);
}

TEST_CASE("q-Pochhammer") {
  Rational z = make_rational(2, 1), q = make_rational(3, 1);
  CHECK(poch_q(z, q, 0) == 1);
  CHECK(poch_q(z, q, 1) == -1);                    // 1 - z
  CHECK(poch_q(z, q, 2) == 5);                     // (1-2)(1-6)
  CHECK_THROWS_AS(poch_q(z, q, -1), std::domain_error);
}

TEST_CASE("symmetric q-Pochhammer, non-negative index") {
  // z = 4 via z_sqrt = 2
  Rational zs(2), qs(2);
  CHECK(poch_sym(zs, qs, 0) == 1);
  CHECK(poch_sym(zs, qs, 1) == make_rational(3, 2));  // 2 - 1/2
  CHECK_THROWS_AS(poch_sym(Rational(0), qs, 1), std::domain_error);
}

TEST_CASE("symmetric q-Pochhammer, negative index") {
  // z = q = 4: [z;q]_{-1} = 1 / (2*2 - (1/2)(1/2)) = 4/15
  Rational zs(2), qs(2);
  CHECK(poch_sym(zs, qs, -1) == make_rational(4, 15));
  // a vanishing factor under a negative index is a pole: q z = 1
  Rational zs2 = make_rational(1, 2);
  CHECK_THROWS_AS(poch_sym(zs2, zs2, -1), pole_error);
}

TEST_CASE("negative-index inversion against the defining product") {
  Sampler sampler(11);
  for (int trial = 0; trial < 20; ++trial) {
    Rational zs = sampler.rational();
    Rational qs = sampler.rational_ne1();
    for (int n = 1; n <= 4; ++n) {
      Rational product(1);
      bool vanished = false;
      for (int m = 1; m <= n; ++m) {
        Rational a = pow_int(qs, m) * zs;
        Rational f = a - Rational(1) / a;
        if (is_zero(f)) {
          vanished = true;
          break;
        }
        product *= f;
      }
      if (vanished) continue;
      CHECK(poch_sym(zs, qs, -n) * product == 1);
    }
  }
}

TEST_CASE("composition of symmetric symbols: [z]_n [q^n z]_m = [z]_{n+m}") {
  Sampler sampler(13);
  for (int trial = 0; trial < 20; ++trial) {
    Rational zs = sampler.rational();
    Rational qs = sampler.rational_ne1();
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        Rational lhs = poch_sym(zs, qs, n) * poch_sym(pow_int(qs, n) * zs, qs, m);
        CHECK(lhs == poch_sym(zs, qs, n + m));
      }
  }
}

// Shift and reflection properties of the symmetric symbols, on the index
// ranges where all four displayed symbols carry non-negative indices.
TEST_CASE("shift property of symmetric symbols") {
  Sampler sampler(17);
  for (int trial = 0; trial < 10; ++trial) {
    Rational us = sampler.rational();
    Rational qs = sampler.rational_ne1();
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        for (int p = -3; p <= 3; ++p) {
          if (n - p < 0 || m + p < 0) continue;
          Rational qpu = pow_int(qs, p) * us;
          Rational lhs = poch_sym(qpu, qs, m) * poch_sym(us, qs, n);
          Rational rhs = poch_sym(qpu, qs, n - p) * poch_sym(us, qs, m + p);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("reflection property of symmetric symbols") {
  Sampler sampler(19);
  for (int trial = 0; trial < 10; ++trial) {
    Rational us = sampler.rational();
    Rational qs = sampler.rational_ne1();
    Rational usinv = Rational(1) / us;
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        for (int p = -3; p <= 3; ++p) {
          if (n - p < 0 || m + p < 0) continue;
          Rational lhs =
              poch_sym(qs * us, qs, m) * poch_sym(pow_int(qs, -(m + p)) * usinv, qs, n);
          Rational rhs =
              poch_sym(qs * us, qs, m + p) * poch_sym(pow_int(qs, -m) * usinv, qs, n - p);
          if (p % 2 != 0) rhs = -rhs;
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("elliptic Pochhammer") {
  PrecisionPolicy policy{256, 32, 150};
  MPComplex z(make_rational(1, 2), 256);
  MPComplex p(make_rational(1, 10), 256);
  MPComplex q(make_rational(1, 3), 256);
  CHECK(poch_elliptic(z, p, q, 0, policy) == MPComplex(1L, 256));
  CHECK(poch_elliptic(z, p, q, 1, policy) == theta_eval(z, p, policy));

  // (1/2; 1/10, 1/3)_2 = theta(1/2) * theta(1/6), against the direct oracle
  MPComplex two = poch_elliptic(z, p, q, 2, policy);
  MPComplex expect = oracles::theta_direct(MPComplex(make_rational(1, 2), 512),
                                           MPComplex(make_rational(1, 10), 512), 512) *
                     oracles::theta_direct(MPComplex(make_rational(1, 6), 512),
                                           MPComplex(make_rational(1, 10), 512), 512);
  CHECK(oracles::agreement_bits_between(two, expect) >= 150);
  CHECK_THROWS_AS(poch_elliptic(z, p, q, -1, policy), std::domain_error);
}

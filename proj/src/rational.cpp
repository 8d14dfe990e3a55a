#include "qduality/rational.hpp"

#include <stdexcept>

namespace qduality {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::domain_error("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // mantissa / 10^(digits after dot)
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::domain_error("bad rational literal: " + s);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::domain_error("bad rational literal: " + s);
  if (sgn(r.get_den()) == 0) throw std::domain_error("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

Rational pow_int(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (is_zero(base)) {
    if (exp < 0) throw std::domain_error("zero raised to negative power");
    return Rational(0);
  }
  mpz_class num, den;
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r = (exp > 0) ? Rational(num, den) : Rational(den, num);
  r.canonicalize();  // sign may sit in the denominator after inversion
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qduality

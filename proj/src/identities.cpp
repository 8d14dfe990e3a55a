#include "qduality/identities.hpp"

namespace qduality {

const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::RationalDuality: return "rational";
    case IdentityId::TrigDuality: return "trig";
    case IdentityId::SymTrigDuality: return "sym-trig";
    case IdentityId::EllipticDuality: return "elliptic";
    case IdentityId::KernelFunction: return "kernel";
    case IdentityId::OperatorCommutativity: return "commutativity";
    case IdentityId::RationalLimit: return "rational-limit";
    case IdentityId::RationalKernel: return "rational-kernel";
  }
  return "?";
}

RationalPoint sample_rational_point(Sampler& sampler, int n) {
  RationalPoint pt;
  pt.x = sampler.rationals(n);
  pt.y = sampler.rationals(n);
  pt.alpha = sampler.rational_ne1();
  return pt;
}

SqrtPoint involution(const SqrtPoint& pt) {
  SqrtPoint out = pt;
  for (int i = 0; i < pt.n(); ++i) {
    out.u_sqrts[i] = Rational(1) / pt.v_sqrts[i];
    out.v_sqrts[i] = Rational(1) / pt.u_sqrts[i];
  }
  return out;
}

SqrtPoint plane_point(const SqrtPoint& base) {
  SqrtPoint out = base;
  for (int i = 0; i < base.n(); ++i) out.u_sqrts[i] = base.v_sqrts[i] / base.t_sqrt;
  return out;
}

// ---- plain q-Pochhammer form ----

namespace {

Rational poch_q_ratio(const Rational& num_z, const Rational& den_z, const Rational& q, int idx) {
  Rational den = poch_q(den_z, q, idx);
  if (is_zero(den)) throw pole_error("vanishing denominator Pochhammer");
  return poch_q(num_z, q, idx) / den;
}

}  // namespace

Rational summand_trig_plain(Side side, const Rational& q, const Rational& t,
                            const std::vector<Rational>& u, const std::vector<Rational>& v,
                            const Composition& k) {
  const int n = static_cast<int>(u.size());
  if (static_cast<int>(k.size()) != n || static_cast<int>(v.size()) != n)
    throw std::domain_error("composition length != n");
  Rational acc(1);
  Rational tinv = Rational(1) / t;
  if (side == Side::LHS) {
    for (int i = 0; i < n; ++i) acc *= poch_q_ratio(q * t, q, q, k[i]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational w = pow_int(q, -k[j]) * u[i] / u[j];
        acc *= poch_q_ratio(tinv * w, w, q, k[i]);
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        Rational w = u[j] / v[a];
        acc *= poch_q_ratio(t * w, w, q, k[j]);
      }
  } else {
    for (int a = 0; a < n; ++a) acc *= poch_q_ratio(q * t, q, q, k[a]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        Rational w = pow_int(q, -k[a]) * v[a] / v[b];
        acc *= poch_q_ratio(tinv * w, w, q, k[b]);
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        Rational w = u[j] / v[a];
        acc *= poch_q_ratio(t * w, w, q, k[a]);
      }
  }
  return acc;
}

Rational side_trig_plain(Side side, const Rational& q, const Rational& t,
                         const std::vector<Rational>& u, const std::vector<Rational>& v, int K) {
  Rational acc(0);
  for (const Composition& k : CompositionRange(static_cast<int>(u.size()), K))
    acc += summand_trig_plain(side, q, t, u, v, k);
  return acc;
}

// ---- rational form ----

namespace {

Rational poch_rational_ratio(const Rational& num_x, const Rational& den_x, int idx) {
  Rational den = poch_rational(den_x, idx);
  if (is_zero(den)) throw pole_error("vanishing denominator Pochhammer");
  return poch_rational(num_x, idx) / den;
}

}  // namespace

Rational summand_rational_duality(Side side, const RationalPoint& pt, const Composition& k) {
  const int n = pt.n();
  if (static_cast<int>(k.size()) != n) throw std::domain_error("composition length != n");
  const Rational& al = pt.alpha;
  Rational acc(1);
  if (side == Side::LHS) {
    for (int i = 0; i < n; ++i) acc *= poch_rational_ratio(1 + al, Rational(1), k[i]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational base = pt.x[i] - pt.x[j] - k[j];
        acc *= poch_rational_ratio(base - al, base, k[i]);
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        Rational base = pt.x[j] - pt.y[a];
        acc *= poch_rational_ratio(base + al, base, k[j]);
      }
  } else {
    for (int a = 0; a < n; ++a) acc *= poch_rational_ratio(1 + al, Rational(1), k[a]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        Rational base = pt.y[a] - pt.y[b] - k[a];
        acc *= poch_rational_ratio(base - al, base, k[b]);
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        Rational base = pt.x[j] - pt.y[a];
        acc *= poch_rational_ratio(base + al, base, k[a]);
      }
  }
  return acc;
}

Rational side_rational_duality(Side side, const RationalPoint& pt, int K) {
  Rational acc(0);
  for (const Composition& k : CompositionRange(pt.n(), K))
    acc += summand_rational_duality(side, pt, k);
  return acc;
}

Rational wk_rational_duality(const RationalPoint& pt, int K) {
  return side_rational_duality(Side::LHS, pt, K) - side_rational_duality(Side::RHS, pt, K);
}

// ---- elliptic form ----

namespace {

MPComplex poch_elliptic_ratio(const MPComplex& num_z, const MPComplex& den_z, const MPComplex& q,
                              int idx, const MPComplex& nome, const PrecisionPolicy& policy) {
  MPComplex den = poch_elliptic(den_z, nome, q, idx, policy);
  if (den.is_zero()) throw pole_error("vanishing denominator Pochhammer");
  return poch_elliptic(num_z, nome, q, idx, policy) / den;
}

}  // namespace

MPComplex summand_elliptic(Side side, const MPComplex& q, const MPComplex& t,
                           const std::vector<MPComplex>& u, const std::vector<MPComplex>& v,
                           const Composition& k, const MPComplex& nome,
                           const PrecisionPolicy& policy) {
  const int n = static_cast<int>(u.size());
  if (static_cast<int>(k.size()) != n || static_cast<int>(v.size()) != n)
    throw std::domain_error("composition length != n");
  MPComplex acc = scalar_one(q);
  MPComplex tinv = scalar_one(t) / t;
  if (side == Side::LHS) {
    for (int i = 0; i < n; ++i) acc = acc * poch_elliptic_ratio(q * t, q, q, k[i], nome, policy);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        MPComplex w = pow_int(q, -k[j]) * u[i] / u[j];
        acc = acc * poch_elliptic_ratio(tinv * w, w, q, k[i], nome, policy);
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        MPComplex w = u[j] / v[a];
        acc = acc * poch_elliptic_ratio(t * w, w, q, k[j], nome, policy);
      }
  } else {
    for (int a = 0; a < n; ++a) acc = acc * poch_elliptic_ratio(q * t, q, q, k[a], nome, policy);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        MPComplex w = pow_int(q, -k[a]) * v[a] / v[b];
        acc = acc * poch_elliptic_ratio(tinv * w, w, q, k[b], nome, policy);
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        MPComplex w = u[j] / v[a];
        acc = acc * poch_elliptic_ratio(t * w, w, q, k[a], nome, policy);
      }
  }
  return acc;
}

MPComplex side_elliptic(Side side, const MPComplex& q, const MPComplex& t,
                        const std::vector<MPComplex>& u, const std::vector<MPComplex>& v, int K,
                        const MPComplex& nome, const PrecisionPolicy& policy) {
  MPComplex acc(0L, static_cast<mpfr_prec_t>(policy.working_bits));
  for (const Composition& k : CompositionRange(static_cast<int>(u.size()), K))
    acc = acc + summand_elliptic(side, q, t, u, v, k, nome, policy);
  return acc;
}

// ---- kernel identities ----

namespace {

// s(A - B + c*shift); for TrigExp the arguments are exponentials and the
// value is E - 1/E with E = (A/B) * shift^c.
Rational s_val(OddKind kind, const Rational& a, const Rational& b, int c, const Rational& shift) {
  if (kind == OddKind::Linear) return a - b + c * shift;
  Rational e = (a / b) * pow_int(shift, c);
  return e - Rational(1) / e;
}

Rational s_ratio(OddKind kind, const Rational& a, const Rational& b, int c,
                 const Rational& shift) {
  Rational den = s_val(kind, a, b, 0, shift);
  if (is_zero(den)) throw pole_error("vanishing s-denominator");
  return s_val(kind, a, b, c, shift) / den;
}

// s(A - B + ca*alpha + cb*beta) / s(A - B + db*beta) building block of the
// single-tuple identity.
Rational s_val2(OddKind kind, const Rational& a, const Rational& b, int ca, int cb,
                const Rational& alpha, const Rational& beta) {
  if (kind == OddKind::Linear) return a - b + ca * alpha + cb * beta;
  Rational e = (a / b) * pow_int(alpha, ca) * pow_int(beta, cb);
  return e - Rational(1) / e;
}

}  // namespace

Rational kernel_two_tuple_side(Side side, OddKind kind, const std::vector<Rational>& z,
                               const std::vector<Rational>& y, const Rational& alpha, int r) {
  const int n = static_cast<int>(z.size());
  if (static_cast<int>(y.size()) != n) throw std::domain_error("tuple sizes differ");
  if (r < 0 || r > n) throw std::domain_error("subset size out of range");
  Rational total(0);
  for (const IndexSubset& sel : SubsetRange(n, r)) {
    std::vector<bool> in(n, false);
    for (int i : sel) in[i] = true;
    Rational term(1);
    if (side == Side::LHS) {
      for (int i : sel) {
        for (int j = 0; j < n; ++j)
          if (!in[j]) term *= s_ratio(kind, z[i], z[j], -1, alpha);
        for (int a = 0; a < n; ++a) term *= s_ratio(kind, z[i], y[a], +1, alpha);
      }
    } else {
      for (int a : sel) {
        for (int b = 0; b < n; ++b)
          if (!in[b]) term *= s_ratio(kind, y[a], y[b], +1, alpha);
        for (int i = 0; i < n; ++i) term *= s_ratio(kind, z[i], y[a], +1, alpha);
      }
    }
    total += term;
  }
  return total;
}

Rational kernel_single_tuple_side(Side side, OddKind kind, const std::vector<Rational>& x,
                                  const Rational& alpha, const Rational& beta, int r) {
  const int n = static_cast<int>(x.size());
  if (r < 0 || r > n) throw std::domain_error("subset size out of range");
  Rational total(0);
  for (const IndexSubset& sel : SubsetRange(n, r)) {
    std::vector<bool> in(n, false);
    for (int i : sel) in[i] = true;
    Rational term(1);
    for (int i : sel)
      for (int j = 0; j < n; ++j) {
        if (in[j]) continue;
        // the right side carries all s-arguments negated
        const Rational& a = side == Side::LHS ? x[i] : x[j];
        const Rational& b = side == Side::LHS ? x[j] : x[i];
        Rational den1 = s_val2(kind, a, b, 0, 0, alpha, beta);
        Rational den2 = s_val2(kind, a, b, 0, -1, alpha, beta);
        if (is_zero(den1) || is_zero(den2)) throw pole_error("vanishing s-denominator");
        term *= s_val2(kind, a, b, -1, 0, alpha, beta) * s_val2(kind, a, b, +1, -1, alpha, beta) /
                (den1 * den2);
      }
    total += term;
  }
  return total;
}

bool riemann_check(OddKind kind, const Rational& x, const Rational& y, const Rational& u,
                   const Rational& v) {
  // s of a sum / difference of two coordinates
  auto sp = [&](const Rational& a, const Rational& b) {
    if (kind == OddKind::Linear) return Rational(a + b);
    Rational e = a * b;
    return Rational(e - Rational(1) / e);
  };
  auto sm = [&](const Rational& a, const Rational& b) {
    if (kind == OddKind::Linear) return Rational(a - b);
    Rational e = a / b;
    return Rational(e - Rational(1) / e);
  };
  Rational lhs = sp(x, y) * sm(x, y) * sp(u, v) * sm(u, v);
  Rational rhs = sp(x, u) * sm(x, u) * sp(y, v) * sm(y, v) -
                 sp(x, v) * sm(x, v) * sp(y, u) * sm(y, u);
  return lhs == rhs;
}

// ---- rational limit identities ----

Rational support_sum_side(Side side, int n, int K, const RationalPoint& pt) {
  if (pt.n() != n) throw std::domain_error("point size != n");
  const Rational& al = pt.alpha;
  auto ratio = [&](const Rational& num, const Rational& den) {
    if (is_zero(den)) throw pole_error("vanishing denominator");
    return Rational(num / den);
  };
  Rational total(0);
  for (const Composition& k : CompositionRange(n, K)) {
    Rational term(1);
    if (side == Side::LHS) {
      for (int i = 0; i < n; ++i) {
        if (k[i] == 0) continue;
        for (int j = 0; j < n; ++j)
          if (k[j] == 0) term *= ratio(pt.x[i] - pt.x[j] - al, pt.x[i] - pt.x[j]);
        for (int a = 0; a < n; ++a) term *= ratio(pt.x[i] - pt.y[a] + al, pt.x[i] - pt.y[a]);
      }
    } else {
      for (int a = 0; a < n; ++a) {
        if (k[a] != 0) continue;
        for (int b = 0; b < n; ++b)
          if (k[b] != 0) term *= ratio(pt.y[a] - pt.y[b] - al, pt.y[a] - pt.y[b]);
      }
      for (int a = 0; a < n; ++a) {
        if (k[a] == 0) continue;
        for (int j = 0; j < n; ++j) term *= ratio(pt.x[j] - pt.y[a] + al, pt.x[j] - pt.y[a]);
      }
    }
    total += term;
  }
  return total;
}

bool limit_relation_check(int n, const RationalPoint& pt) {
  auto kernel_side = [&](Side side, int r) {
    if (r > n) return Rational(0);  // empty subset sum
    return kernel_two_tuple_side(side, OddKind::Linear, pt.x, pt.y, pt.alpha, r);
  };
  for (Side side : {Side::LHS, Side::RHS}) {
    Rational h1 = support_sum_side(side, n, 1, pt);
    Rational h2 = support_sum_side(side, n, 2, pt);
    Rational k1 = kernel_side(side, 1);
    Rational k2 = kernel_side(side, 2);
    if (h1 != k1) return false;
    if (h2 != k2 + k1) return false;
  }
  return true;
}

// ---- asymptotic zone ----

SqrtPointT<MPFloat> asymptotic_point(long lambda, const Rational& q, const Rational& t, int n,
                                     mpfr_prec_t prec) {
  SqrtPointT<MPFloat> pt{MPFloat(prec), MPFloat(prec), {}, {}};
  pt.q_sqrt = sqrt(MPFloat(q, prec));
  pt.t_sqrt = sqrt(MPFloat(t, prec));
  MPFloat lam(lambda, prec);
  for (int i = 1; i <= n; ++i) pt.u_sqrts.push_back(sqrt(pow_int(lam, i)));
  for (int a = 1; a <= n; ++a) pt.v_sqrts.push_back(sqrt(pow_int(lam, 2 * n + 1 - a)));
  return pt;
}

MPFloat asymptotic_limit_sum(const MPFloat& q_sqrt, const MPFloat& t_sqrt, int n, int K) {
  MPFloat total(0, q_sqrt.precision());
  for (const Composition& k : CompositionRange(n, K)) {
    MPFloat term(1, q_sqrt.precision());
    for (int i = 0; i < n; ++i)
      term = term * poch_sym_ratio(q_sqrt * t_sqrt, q_sqrt, q_sqrt, k[i]);
    long e = 0;  // exponent of t^{1/2}: sum (n+1-2i) k_i - n K  (i from 1)
    for (int i = 0; i < n; ++i) e += static_cast<long>(n - 1 - 2 * i) * k[i];
    e -= static_cast<long>(n) * K;
    term = term * pow_int(t_sqrt, e);
    total = total + term;
  }
  return total;
}

MPFloat asymptotic_relative_deviation(Side side, int n, int K, long lambda, const Rational& q,
                                      const Rational& t, mpfr_prec_t prec) {
  SqrtPointT<MPFloat> pt = asymptotic_point(lambda, q, t, n, prec);
  MPFloat value = side_sym_trig(side, pt, K);
  MPFloat limit = asymptotic_limit_sum(pt.q_sqrt, pt.t_sqrt, n, K);
  MPFloat one(1, prec);
  return abs(value / limit - one);
}

}  // namespace qduality

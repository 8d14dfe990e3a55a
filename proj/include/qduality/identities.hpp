#pragma once

#include <vector>

#include "qduality/combinatorics.hpp"
#include "qduality/errors.hpp"
#include "qduality/mp.hpp"
#include "qduality/pochhammer.hpp"
#include "qduality/rational.hpp"
#include "qduality/sampling.hpp"

namespace qduality {

enum class Side { LHS, RHS };

// The identity catalog. The first four are duality transformations between
// multiple hypergeometric sums in u- and v-variables; the kernel entries are
// the subset-sum identities for an odd function satisfying the Riemann
// relation; the limit entries are their degenerate rational forms.
enum class IdentityId {
  RationalDuality,      // rational Pochhammer form
  TrigDuality,          // q-Pochhammer form
  SymTrigDuality,       // symmetric q-Pochhammer form (square-root coordinates)
  EllipticDuality,      // elliptic Pochhammer form (multiprecision)
  KernelFunction,       // two-tuple kernel function identity
  OperatorCommutativity,// single-tuple identity behind commuting Macdonald operators
  RationalLimit,        // support-sum identity, the scaling limit of the rational duality
  RationalKernel,       // rational kernel function identity
};

const char* identity_name(IdentityId id);

// Evaluation point of the rational duality: variables x_j, y_a and shift alpha.
struct RationalPoint {
  std::vector<Rational> x;
  std::vector<Rational> y;
  Rational alpha;

  int n() const { return static_cast<int>(x.size()); }
};

RationalPoint sample_rational_point(Sampler& sampler, int n);

// ---- symmetric q-Pochhammer form (square-root coordinates) ----

template <class T>
T poch_sym_ratio(const T& num_z_sqrt, const T& den_z_sqrt, const T& q_sqrt, int idx) {
  T den = poch_sym(den_z_sqrt, q_sqrt, idx);
  if (is_zero(den)) throw pole_error("vanishing denominator Pochhammer");
  return poch_sym(num_z_sqrt, q_sqrt, idx) / den;
}

// One summand of the chosen side: the triple product of Pochhammer ratios
// over single indices, ordered pairs within one variable group, and all
// mixed pairs.
template <class T>
T summand_sym_trig(Side side, const SqrtPointT<T>& pt, const Composition& k) {
  const int n = pt.n();
  if (static_cast<int>(k.size()) != n) throw std::domain_error("composition length != n");
  const T& qs = pt.q_sqrt;
  const T& ts = pt.t_sqrt;
  T qt = qs * ts;
  T acc = scalar_one(qs);
  if (side == Side::LHS) {
    for (int i = 0; i < n; ++i) acc = acc * poch_sym_ratio(qt, qs, qs, k[i]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        T w = pow_int(qs, -k[j]) * pt.u_sqrts[i] / pt.u_sqrts[j];
        T wn = w / ts;
        acc = acc * poch_sym_ratio(wn, w, qs, k[i]);
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        T w = pt.u_sqrts[j] / pt.v_sqrts[a];
        T wn = ts * w;
        acc = acc * poch_sym_ratio(wn, w, qs, k[j]);
      }
  } else {
    for (int a = 0; a < n; ++a) acc = acc * poch_sym_ratio(qt, qs, qs, k[a]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        T w = pow_int(qs, -k[a]) * pt.v_sqrts[a] / pt.v_sqrts[b];
        T wn = w / ts;
        acc = acc * poch_sym_ratio(wn, w, qs, k[b]);
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        T w = pt.u_sqrts[j] / pt.v_sqrts[a];
        T wn = ts * w;
        acc = acc * poch_sym_ratio(wn, w, qs, k[a]);
      }
  }
  return acc;
}

template <class T>
T side_sym_trig(Side side, const SqrtPointT<T>& pt, int K) {
  T acc = scalar_one(pt.q_sqrt) - scalar_one(pt.q_sqrt);  // zero in T
  for (const Composition& k : CompositionRange(pt.n(), K))
    acc = acc + summand_sym_trig(side, pt, k);
  return acc;
}

template <class T>
T wk_sym_trig(const SqrtPointT<T>& pt, int K) {
  return side_sym_trig(Side::LHS, pt, K) - side_sym_trig(Side::RHS, pt, K);
}

// u_i -> 1/v_i, v_i -> 1/u_i on square roots; exchanges the two sides
// summand by summand.
SqrtPoint involution(const SqrtPoint& pt);

// Point on the plane u_i = v_i / t, where every summand of weight >= 1
// vanishes through its mixed products.
SqrtPoint plane_point(const SqrtPoint& base);

// ---- plain q-Pochhammer form ----

Rational summand_trig_plain(Side side, const Rational& q, const Rational& t,
                            const std::vector<Rational>& u, const std::vector<Rational>& v,
                            const Composition& k);
Rational side_trig_plain(Side side, const Rational& q, const Rational& t,
                         const std::vector<Rational>& u, const std::vector<Rational>& v, int K);

// ---- rational form ----

Rational summand_rational_duality(Side side, const RationalPoint& pt, const Composition& k);
Rational side_rational_duality(Side side, const RationalPoint& pt, int K);
Rational wk_rational_duality(const RationalPoint& pt, int K);

// ---- elliptic form ----

MPComplex summand_elliptic(Side side, const MPComplex& q, const MPComplex& t,
                           const std::vector<MPComplex>& u, const std::vector<MPComplex>& v,
                           const Composition& k, const MPComplex& nome,
                           const PrecisionPolicy& policy);
MPComplex side_elliptic(Side side, const MPComplex& q, const MPComplex& t,
                        const std::vector<MPComplex>& u, const std::vector<MPComplex>& v, int K,
                        const MPComplex& nome, const PrecisionPolicy& policy);

// ---- kernel identities ----

enum class OddKind {
  Linear,   // s(z) = z on rational arguments
  TrigExp,  // s evaluated in exponential coordinates: each variable enters as
            // w = e^{i beta z}, s(A - B) ~ w_A/w_B - w_B/w_A; the common
            // proportionality factor cancels in every ratio of the identities
};

// Two-tuple kernel function identity, one side. For TrigExp the vectors hold
// the exponential coordinates and alpha holds the exponential of the shift.
Rational kernel_two_tuple_side(Side side, OddKind kind, const std::vector<Rational>& z,
                               const std::vector<Rational>& y, const Rational& alpha, int r);

// Single-tuple identity with two shifts; the right side is the same sum with
// all s-arguments negated.
Rational kernel_single_tuple_side(Side side, OddKind kind, const std::vector<Rational>& x,
                                  const Rational& alpha, const Rational& beta, int r);

// Riemann relation for the odd function: coordinates follow the OddKind
// convention above (values for Linear, exponentials for TrigExp).
bool riemann_check(OddKind kind, const Rational& x, const Rational& y, const Rational& u,
                   const Rational& v);

// ---- rational limit identities ----

// K-th support sum, one side: products run over positions with nonzero and
// zero parts of each composition, so each support is weighted by the number
// of compositions carrying it.
Rational support_sum_side(Side side, int n, int K, const RationalPoint& pt);

// First and second support sums decompose into the rational kernel sums:
// equality is checked per side at the given point.
bool limit_relation_check(int n, const RationalPoint& pt);

// ---- asymptotic zone ----

// Point with u_i = Lambda^i and v_a = Lambda^{2n+1-a} in square-root
// coordinates at the given float precision.
SqrtPointT<MPFloat> asymptotic_point(long lambda, const Rational& q, const Rational& t, int n,
                                     mpfr_prec_t prec);

// The limit both sides approach deep in the ordered zone u_1 << ... << v_1.
MPFloat asymptotic_limit_sum(const MPFloat& q_sqrt, const MPFloat& t_sqrt, int n, int K);

// |side/limit - 1| at the asymptotic point.
MPFloat asymptotic_relative_deviation(Side side, int n, int K, long lambda, const Rational& q,
                                      const Rational& t, mpfr_prec_t prec);

}  // namespace qduality

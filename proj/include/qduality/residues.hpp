#pragma once

#include <vector>

#include "qduality/identities.hpp"

namespace qduality {

// Laurent monomial in the square-root coordinates (t_sqrt, q_sqrt, u_sqrts,
// v_sqrts). Each linear factor of a symmetric Pochhammer symbol is M - 1/M
// for such a monomial M, which makes values, zeros and derivatives exact.
struct SqrtMonomial {
  int t_e = 0;
  int q_e = 0;
  std::vector<int> u_e;  // length n
  std::vector<int> v_e;  // length n

  explicit SqrtMonomial(int n = 0) : u_e(n, 0), v_e(n, 0) {}

  template <class T>
  T eval(const SqrtPointT<T>& pt) const {
    T m = pow_int(pt.t_sqrt, t_e) * pow_int(pt.q_sqrt, q_e);
    for (size_t i = 0; i < u_e.size(); ++i)
      if (u_e[i] != 0) m = m * pow_int(pt.u_sqrts[i], u_e[i]);
    for (size_t a = 0; a < v_e.size(); ++a)
      if (v_e[a] != 0) m = m * pow_int(pt.v_sqrts[a], v_e[a]);
    return m;
  }

  std::vector<int> key() const;
  bool operator==(const SqrtMonomial& o) const = default;
};

enum class VarKind { U, V };

struct VarRef {
  VarKind kind;
  int index;
};

// Value of the linear factor M - 1/M at a point.
template <class T>
T factor_value(const SqrtMonomial& m, const SqrtPointT<T>& pt) {
  T val = m.eval(pt);
  return val - scalar_one(val) / val;
}

// d/d(var) of (M - 1/M) as a function of the squared variable: with e the
// exponent of the variable's square root in M, this is e (M + 1/M) / (2 var).
Rational factor_derivative(const SqrtMonomial& m, VarRef var, const SqrtPoint& pt);

// A summand represented as an explicit product of linear Pochhammer factors
// with integer exponents (negative for denominators). Exactly reproduces the
// direct evaluator wherever that is pole-free.
struct FactoredSummand {
  int n = 0;
  std::vector<std::pair<SqrtMonomial, int>> factors;

  template <class T>
  T eval(const SqrtPointT<T>& pt) const {
    T acc = scalar_one(pt.q_sqrt);
    for (const auto& [m, e] : factors) {
      T f = factor_value(m, pt);
      if (e < 0 && is_zero(f)) throw pole_error("vanishing denominator factor");
      acc = acc * pow_int(f, e);
    }
    return acc;
  }
};

// Factored form of one summand of the symmetric-form duality (the only
// family the residue machinery applies to). With validate set, the factored
// form is compared against the direct evaluator at 5 fixed random pole-free
// points on construction.
FactoredSummand factorize_summand(IdentityId id, Side side, const Composition& k, int n,
                                  bool validate = true);

// Numerator polynomial of one left-hand summand: the same triple product
// without the denominator symbols. set_unit_t replaces t by 1.
FactoredSummand factorize_numerator(Side side, const Composition& k, int n,
                                    bool set_unit_t = false);

// Simple-pole loci of the duality sums. The shift parameter p means:
//   UU: u_1 = q^p u_2   (residue in u_1)
//   VV: v_2 = q^p v_1   (residue in v_2)
//   UV: v_1 = q^{p-1} u_1  (residue in v_1, integrand carries 1/v_1)
enum class PoleKind { UU, VV, UV };

struct PoleLocus {
  PoleKind kind;
  int shift;
};

// Copy of base with the locus constraint imposed on one square root; the
// choice of branch does not affect any residue statement.
SqrtPoint locus_point(const SqrtPoint& base, const PoleLocus& locus);

bool on_locus(const SqrtPoint& pt, const PoleLocus& locus);

// Exact residue of the factored summand at the locus: cofactor product over
// the derivative of the unique vanishing denominator factor. Zero when no
// factor vanishes or when the zero sits in the numerator. Throws
// non_simple_pole_error when more than one factor vanishes.
Rational residue_at(const FactoredSummand& summand, const PoleLocus& locus, const SqrtPoint& pt);

// Residue pairing across the two pole families on the equal-group diagonals
// u_1 = q^p u_2 and v_2 = q^p v_1: numerator equality at the locus plus
// exact cancellation of paired residues, for every index of the first
// family with weight K. The locus constraints are imposed on generic_point.
bool diagonal_residue_check(int n, int K, int p, const SqrtPoint& generic_point);

// Prefactor of the mixed-diagonal residue factorization.
Rational mixed_residue_prefactor(int p, const SqrtPoint& pt);

// Mixed-diagonal residue factorization for one summand index: the residue of
// summand/v_1 at v_1 = q^{p-1} u_1 equals the prefactor times the summand of
// weight k_1 - p at the point (q v_1, u'; q^{-1} u_1, v'), on both sides.
bool mixed_residue_check(int n, const Composition& k, int p, const SqrtPoint& generic_point);

// Residue recursion for the full difference W_K = LHS - RHS: the residue of
// W_K / v_1 on the mixed diagonal equals prefactor * W_{K-p} at the shifted
// point, and both vanish exactly.
bool difference_residue_recursion(int n, int K, int p, const SqrtPoint& generic_point);

}  // namespace qduality

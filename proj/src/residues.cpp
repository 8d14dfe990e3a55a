#include "qduality/residues.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qduality {

std::vector<int> SqrtMonomial::key() const {
  std::vector<int> k;
  k.reserve(2 + u_e.size() + v_e.size());
  k.push_back(t_e);
  k.push_back(q_e);
  k.insert(k.end(), u_e.begin(), u_e.end());
  k.insert(k.end(), v_e.begin(), v_e.end());
  return k;
}

Rational factor_derivative(const SqrtMonomial& m, VarRef var, const SqrtPoint& pt) {
  int e = var.kind == VarKind::U ? m.u_e[var.index] : m.v_e[var.index];
  if (e == 0) return Rational(0);
  Rational mv = m.eval(pt);
  const Rational& ws = var.kind == VarKind::U ? pt.u_sqrts[var.index] : pt.v_sqrts[var.index];
  Rational var_value = ws * ws;
  return Rational(e) * (mv + Rational(1) / mv) / (2 * var_value);
}

namespace {

class FactorBuilder {
 public:
  explicit FactorBuilder(int n) : n_(n) {}

  // All factors of [z; q]_idx for the monomial square root of z, idx >= 0.
  void add_poch(const SqrtMonomial& z_sqrt, int idx, int exponent) {
    SqrtMonomial m = z_sqrt;
    for (int step = 0; step < idx; ++step) {
      merged_[m.key()] = {m, exponent + exponent_of(m)};
      m.q_e += 1;
    }
  }

  FactoredSummand build() const {
    FactoredSummand out;
    out.n = n_;
    for (const auto& [key, entry] : merged_)
      if (entry.second != 0) out.factors.push_back(entry);
    return out;
  }

 private:
  int exponent_of(const SqrtMonomial& m) const {
    auto it = merged_.find(m.key());
    return it == merged_.end() ? 0 : it->second.second;
  }

  int n_;
  std::map<std::vector<int>, std::pair<SqrtMonomial, int>> merged_;
};

SqrtMonomial mono(int n, int t_e, int q_e) {
  SqrtMonomial m(n);
  m.t_e = t_e;
  m.q_e = q_e;
  return m;
}

// 5 fixed pseudo-random points used to cross-check factored forms on
// construction.
constexpr uint64_t kValidationSeed = 0x51ab3fb2c90210ULL;

void validate_factorization(const FactoredSummand& fact, Side side, const Composition& k) {
  int checked = 0;
  for (uint64_t attempt = 0; checked < 5 && attempt < 64; ++attempt) {
    Sampler sampler(substream_seed(kValidationSeed, attempt));
    SqrtPoint pt = sampler.sqrt_point(fact.n);
    try {
      Rational direct = summand_sym_trig(side, pt, k);
      Rational factored = fact.eval(pt);
      if (direct != factored)
        throw std::logic_error("factored summand disagrees with direct evaluator");
      ++checked;
    } catch (const pole_error&) {
      // try the next point
    }
  }
  if (checked < 5) throw std::logic_error("could not find 5 pole-free validation points");
}

}  // namespace

FactoredSummand factorize_summand(IdentityId id, Side side, const Composition& k, int n,
                                  bool validate) {
  if (id != IdentityId::SymTrigDuality)
    throw std::domain_error("factorization applies to the symmetric-form duality only");
  if (static_cast<int>(k.size()) != n) throw std::domain_error("composition length != n");
  FactorBuilder b(n);
  if (side == Side::LHS) {
    for (int i = 0; i < n; ++i) {
      b.add_poch(mono(n, 1, 1), k[i], +1);   // [qt;q]_{k_i}
      b.add_poch(mono(n, 0, 1), k[i], -1);   // [q;q]_{k_i}
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        SqrtMonomial w = mono(n, 0, -k[j]);
        w.u_e[i] = 1;
        w.u_e[j] = -1;
        SqrtMonomial wt = w;
        wt.t_e = -1;
        b.add_poch(wt, k[i], +1);            // [t^{-1} q^{-k_j} u_i/u_j]_{k_i}
        b.add_poch(w, k[i], -1);             // [q^{-k_j} u_i/u_j]_{k_i}
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        SqrtMonomial w(n);
        w.u_e[j] = 1;
        w.v_e[a] = -1;
        SqrtMonomial wt = w;
        wt.t_e = 1;
        b.add_poch(wt, k[j], +1);            // [t u_j/v_a]_{k_j}
        b.add_poch(w, k[j], -1);             // [u_j/v_a]_{k_j}
      }
  } else {
    for (int a = 0; a < n; ++a) {
      b.add_poch(mono(n, 1, 1), k[a], +1);
      b.add_poch(mono(n, 0, 1), k[a], -1);
    }
    for (int a = 0; a < n; ++a)
      for (int bb = 0; bb < n; ++bb) {
        if (a == bb) continue;
        SqrtMonomial w = mono(n, 0, -k[a]);
        w.v_e[a] = 1;
        w.v_e[bb] = -1;
        SqrtMonomial wt = w;
        wt.t_e = -1;
        b.add_poch(wt, k[bb], +1);           // [t^{-1} q^{-k_a} v_a/v_b]_{k_b}
        b.add_poch(w, k[bb], -1);            // [q^{-k_a} v_a/v_b]_{k_b}
      }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) {
        SqrtMonomial w(n);
        w.u_e[j] = 1;
        w.v_e[a] = -1;
        SqrtMonomial wt = w;
        wt.t_e = 1;
        b.add_poch(wt, k[a], +1);            // [t u_j/v_a]_{k_a}
        b.add_poch(w, k[a], -1);             // [u_j/v_a]_{k_a}
      }
  }
  FactoredSummand out = b.build();
  if (validate) validate_factorization(out, side, k);
  return out;
}

FactoredSummand factorize_numerator(Side side, const Composition& k, int n, bool set_unit_t) {
  FactoredSummand full = factorize_summand(IdentityId::SymTrigDuality, side, k, n, false);
  FactorBuilder b(n);
  for (const auto& [m, e] : full.factors) {
    if (e <= 0) continue;  // numerator symbols only
    SqrtMonomial mm = m;
    if (set_unit_t) mm.t_e = 0;
    b.add_poch(mm, 1, e);  // single factor, kept as-is
  }
  return b.build();
}

SqrtPoint locus_point(const SqrtPoint& base, const PoleLocus& locus) {
  SqrtPoint pt = base;
  switch (locus.kind) {
    case PoleKind::UU:
      pt.u_sqrts[0] = pow_int(base.q_sqrt, locus.shift) * base.u_sqrts[1];
      break;
    case PoleKind::VV:
      pt.v_sqrts[1] = pow_int(base.q_sqrt, locus.shift) * base.v_sqrts[0];
      break;
    case PoleKind::UV:
      pt.v_sqrts[0] = pow_int(base.q_sqrt, locus.shift - 1) * base.u_sqrts[0];
      break;
  }
  return pt;
}

bool on_locus(const SqrtPoint& pt, const PoleLocus& locus) {
  switch (locus.kind) {
    case PoleKind::UU:
      return pt.u_sqrts[0] == pow_int(pt.q_sqrt, locus.shift) * pt.u_sqrts[1];
    case PoleKind::VV:
      return pt.v_sqrts[1] == pow_int(pt.q_sqrt, locus.shift) * pt.v_sqrts[0];
    case PoleKind::UV:
      return pt.v_sqrts[0] == pow_int(pt.q_sqrt, locus.shift - 1) * pt.u_sqrts[0];
  }
  return false;
}

namespace {

VarRef residue_variable(const PoleLocus& locus) {
  switch (locus.kind) {
    case PoleKind::UU: return {VarKind::U, 0};
    case PoleKind::VV: return {VarKind::V, 1};
    case PoleKind::UV: return {VarKind::V, 0};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Rational residue_at(const FactoredSummand& summand, const PoleLocus& locus, const SqrtPoint& pt) {
  if (static_cast<int>(pt.u_sqrts.size()) != summand.n)
    throw std::domain_error("point size != summand size");
  if (!on_locus(pt, locus)) throw std::domain_error("point does not satisfy the locus constraint");

  int vanishing = -1;
  Rational cofactor(1);
  for (size_t idx = 0; idx < summand.factors.size(); ++idx) {
    const auto& [m, e] = summand.factors[idx];
    Rational f = factor_value(m, pt);
    if (is_zero(f)) {
      if (vanishing >= 0)
        throw non_simple_pole_error("more than one factor vanishes at the locus");
      if (e < -1 || e > 1)
        throw non_simple_pole_error("vanishing factor carries exponent of magnitude > 1");
      vanishing = static_cast<int>(idx);
    } else {
      cofactor *= pow_int(f, e);
    }
  }
  if (vanishing < 0) return Rational(0);                   // regular point
  if (summand.factors[vanishing].second > 0) return Rational(0);  // zero, not a pole

  VarRef var = residue_variable(locus);
  Rational slope = factor_derivative(summand.factors[vanishing].first, var, pt);
  if (is_zero(slope))
    throw non_simple_pole_error("vanishing factor does not depend on the residue variable");
  Rational res = cofactor / slope;
  if (locus.kind == PoleKind::UV) res /= pt.v_sqrts[0] * pt.v_sqrts[0];  // 1/v_1 prefix
  return res;
}

bool diagonal_residue_check(int n, int K, int p, const SqrtPoint& generic_point) {
  if (n < 2) throw std::domain_error("diagonal residue check needs n >= 2");
  // Part 1: the index swap is a bijection between the two pole families.
  std::vector<Composition> first, second;
  for (const Composition& k : CompositionRange(n, K)) {
    PoleSetMembership ms = pole_set_membership(k, p);
    if (ms == PoleSetMembership::InFirst) first.push_back(k);
    if (ms == PoleSetMembership::InSecond) second.push_back(k);
  }
  std::vector<Composition> image;
  for (const Composition& k : first) {
    Composition fk = pole_pair_map(k, p);
    if (pole_set_membership(fk, p) != PoleSetMembership::InSecond) return false;
    if (composition_sum(fk) != K) return false;
    if (pole_pair_map(fk, p) != k) return false;  // involution
    image.push_back(fk);
  }
  std::sort(image.begin(), image.end());
  std::sort(second.begin(), second.end());
  if (image != second) return false;

  // Part 2: numerator equality and residue cancellation on both diagonals.
  SqrtPoint pu = locus_point(generic_point, {PoleKind::UU, p});
  SqrtPoint pv = locus_point(generic_point, {PoleKind::VV, p});
  for (const Composition& k : first) {
    Composition fk = pole_pair_map(k, p);

    // numerator polynomial equality at the t of the point ...
    Rational xk = factorize_numerator(Side::LHS, k, n).eval(pu);
    Rational xfk = factorize_numerator(Side::LHS, fk, n).eval(pu);
    if (xk != xfk) return false;

    // ... and at t = 1, where both carry exactly one vanishing factor and
    // the products of the remaining factors agree.
    FactoredSummand nk = factorize_numerator(Side::LHS, k, n, /*set_unit_t=*/true);
    FactoredSummand nfk = factorize_numerator(Side::LHS, fk, n, /*set_unit_t=*/true);
    auto nonzero_product = [&](const FactoredSummand& f) {
      int zeros = 0;
      Rational prod(1);
      for (const auto& [m, e] : f.factors) {
        Rational val = factor_value(m, pu);
        if (is_zero(val))
          zeros += e;
        else
          prod *= pow_int(val, e);
      }
      if (zeros != 1) throw pole_error("unexpected degeneration at unit t");
      return prod;
    };
    if (nonzero_product(nk) != nonzero_product(nfk)) return false;

    // residue pairing on the u-diagonal for the left side ...
    Rational ru = residue_at(factorize_summand(IdentityId::SymTrigDuality, Side::LHS, k, n, false),
                             {PoleKind::UU, p}, pu);
    Rational rfu = residue_at(
        factorize_summand(IdentityId::SymTrigDuality, Side::LHS, fk, n, false), {PoleKind::UU, p},
        pu);
    if (is_zero(ru)) throw pole_error("accidental zero residue; resample");
    if (ru + rfu != 0) return false;

    // ... and on the v-diagonal for the right side.
    Rational rv = residue_at(factorize_summand(IdentityId::SymTrigDuality, Side::RHS, k, n, false),
                             {PoleKind::VV, p}, pv);
    Rational rfv = residue_at(
        factorize_summand(IdentityId::SymTrigDuality, Side::RHS, fk, n, false), {PoleKind::VV, p},
        pv);
    if (is_zero(rv)) throw pole_error("accidental zero residue; resample");
    if (rv + rfv != 0) return false;
  }
  return true;
}

Rational mixed_residue_prefactor(int p, const SqrtPoint& pt) {
  if (p < 1) throw std::domain_error("prefactor needs p >= 1");
  const Rational& qs = pt.q_sqrt;
  const Rational& ts = pt.t_sqrt;
  const int n = pt.n();
  Rational den = poch_sym(qs, qs, p) * poch_sym(qs, qs, p - 1);
  if (is_zero(den)) throw pole_error("vanishing prefactor denominator");
  Rational pref = poch_sym(ts * qs, qs, 2 * p) / den;
  if (p % 2 != 0) pref = -pref;
  for (int j = 1; j < n; ++j) {
    Rational d = poch_sym(pt.u_sqrts[0] / pt.u_sqrts[j], qs, p);
    if (is_zero(d)) throw pole_error("vanishing prefactor denominator");
    pref *= poch_sym(ts * pt.u_sqrts[j] / pt.v_sqrts[0], qs, p) / d;
  }
  for (int b = 1; b < n; ++b) {
    Rational d = poch_sym(pt.v_sqrts[b] / pt.v_sqrts[0], qs, p);
    if (is_zero(d)) throw pole_error("vanishing prefactor denominator");
    pref *= poch_sym(ts * pt.u_sqrts[0] / pt.v_sqrts[b], qs, p) / d;
  }
  return pref;
}

namespace {

// (q v_1, u') and (q^{-1} u_1, v') in square-root coordinates.
SqrtPoint shifted_point(const SqrtPoint& pt) {
  SqrtPoint out = pt;
  out.u_sqrts[0] = pt.q_sqrt * pt.v_sqrts[0];
  out.v_sqrts[0] = pt.u_sqrts[0] / pt.q_sqrt;
  return out;
}

Composition lowered(const Composition& k, int p) {
  Composition out = k;
  out[0] -= p;
  return out;
}

}  // namespace

bool mixed_residue_check(int n, const Composition& k, int p, const SqrtPoint& generic_point) {
  if (static_cast<int>(k.size()) != n) throw std::domain_error("composition length != n");
  if (p < 1 || p > k[0]) throw std::domain_error("shift must satisfy 1 <= p <= k_1");
  SqrtPoint pt = locus_point(generic_point, {PoleKind::UV, p});
  Rational pref = mixed_residue_prefactor(p, pt);
  SqrtPoint shifted = shifted_point(pt);
  Composition km = lowered(k, p);
  for (Side side : {Side::RHS, Side::LHS}) {
    Rational res = residue_at(factorize_summand(IdentityId::SymTrigDuality, side, k, n, false),
                              {PoleKind::UV, p}, pt);
    Rational target = pref * summand_sym_trig(side, shifted, km);
    if (res != target) return false;
  }
  return true;
}

bool difference_residue_recursion(int n, int K, int p, const SqrtPoint& generic_point) {
  if (p < 1 || p > K) throw std::domain_error("shift must satisfy 1 <= p <= K");
  SqrtPoint pt = locus_point(generic_point, {PoleKind::UV, p});
  Rational total(0);
  for (const Composition& k : CompositionRange(n, K)) {
    total += residue_at(factorize_summand(IdentityId::SymTrigDuality, Side::LHS, k, n, false),
                        {PoleKind::UV, p}, pt);
    total -= residue_at(factorize_summand(IdentityId::SymTrigDuality, Side::RHS, k, n, false),
                        {PoleKind::UV, p}, pt);
  }
  SqrtPoint shifted = shifted_point(pt);
  Rational w = side_sym_trig(Side::LHS, shifted, K - p) - side_sym_trig(Side::RHS, shifted, K - p);
  Rational target = mixed_residue_prefactor(p, pt) * w;
  return total == target && is_zero(total);
}

}  // namespace qduality

// Python bindings for the main operations. Exact values cross the boundary
// as canonical rational strings ("num/den"); multiprecision values as
// decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qduality/combinatorics.hpp"
#include "qduality/identities.hpp"
#include "qduality/residues.hpp"
#include "qduality/runner.hpp"
#include "qduality/sampling.hpp"
#include "qduality/theta.hpp"

namespace py = pybind11;
using namespace qduality;

namespace {

Rational rat(const std::string& s) { return rational_from_string(s); }

std::vector<Rational> rats(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const std::string& s : v) out.push_back(rat(s));
  return out;
}

SqrtPoint make_sqrt_point(const std::string& q_sqrt, const std::string& t_sqrt,
                          const std::vector<std::string>& u_sqrts,
                          const std::vector<std::string>& v_sqrts) {
  SqrtPoint pt{rat(q_sqrt), rat(t_sqrt), rats(u_sqrts), rats(v_sqrts)};
  validate_point(pt);
  return pt;
}

Side side_of(const std::string& s) {
  if (s == "lhs") return Side::LHS;
  if (s == "rhs") return Side::RHS;
  throw std::domain_error("side must be 'lhs' or 'rhs'");
}

OddKind odd_of(const std::string& s) {
  if (s == "linear") return OddKind::Linear;
  if (s == "trig-exp") return OddKind::TrigExp;
  throw std::domain_error("odd function kind must be 'linear' or 'trig-exp'");
}

IdentityId identity_of(const std::string& name) {
  for (IdentityId id : {IdentityId::RationalDuality, IdentityId::TrigDuality,
                        IdentityId::SymTrigDuality, IdentityId::EllipticDuality,
                        IdentityId::KernelFunction, IdentityId::OperatorCommutativity,
                        IdentityId::RationalLimit, IdentityId::RationalKernel})
    if (name == identity_name(id)) return id;
  throw std::domain_error("unknown identity: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and multiprecision checks of hypergeometric duality identities";

  m.def("poch_rational",
        [](const std::string& x, int n) { return to_string(poch_rational(rat(x), n)); },
        py::arg("x"), py::arg("n"), "Rising factorial x(x+1)...(x+n-1)");
  m.def("poch_q",
        [](const std::string& z, const std::string& q, int n) {
          return to_string(poch_q(rat(z), rat(q), n));
        },
        py::arg("z"), py::arg("q"), py::arg("n"));
  m.def("poch_sym",
        [](const std::string& z_sqrt, const std::string& q_sqrt, int n) {
          return to_string(poch_sym(rat(z_sqrt), rat(q_sqrt), n));
        },
        py::arg("z_sqrt"), py::arg("q_sqrt"), py::arg("n"),
        "Symmetric q-Pochhammer in square-root coordinates");

  m.def("theta",
        [](const std::string& z, const std::string& nome, int bits) {
          PrecisionPolicy policy{bits, 32, std::max(1, bits - 64)};
          MPComplex value =
              theta_eval(MPComplex(rat(z), bits), MPComplex(rat(nome), bits), policy);
          return py::make_tuple(value.real().str(), value.imag().str());
        },
        py::arg("z"), py::arg("nome"), py::arg("bits") = 256,
        "Modified theta function at a real rational point");

  m.def("compositions", [](int n, int K) {
    std::vector<Composition> out;
    for (const Composition& k : CompositionRange(n, K)) out.push_back(k);
    return out;
  });
  m.def("subsets", [](int n, int r) {
    std::vector<IndexSubset> out;
    for (const IndexSubset& s : SubsetRange(n, r)) out.push_back(s);
    return out;
  });
  m.def("pole_set_membership", [](const Composition& k, int p) {
    switch (pole_set_membership(k, p)) {
      case PoleSetMembership::InFirst: return "first";
      case PoleSetMembership::InSecond: return "second";
      default: return "neither";
    }
  });
  m.def("pole_pair_map", [](const Composition& k, int p) { return pole_pair_map(k, p); });

  m.def("side_sym_trig",
        [](const std::string& side, const std::string& q_sqrt, const std::string& t_sqrt,
           const std::vector<std::string>& u_sqrts, const std::vector<std::string>& v_sqrts,
           int K) {
          SqrtPoint pt = make_sqrt_point(q_sqrt, t_sqrt, u_sqrts, v_sqrts);
          return to_string(side_sym_trig(side_of(side), pt, K));
        },
        py::arg("side"), py::arg("q_sqrt"), py::arg("t_sqrt"), py::arg("u_sqrts"),
        py::arg("v_sqrts"), py::arg("K"),
        "One side of the symmetric-form duality sum at an exact point");

  m.def("duality_difference",
        [](const std::string& identity, int n, int K, uint64_t seed) {
          IdentityId id = identity_of(identity);
          return with_resampling(seed, [&](Sampler& sampler) {
            if (id == IdentityId::RationalDuality) {
              RationalPoint pt = sample_rational_point(sampler, n);
              return to_string(wk_rational_duality(pt, K));
            }
            if (id == IdentityId::SymTrigDuality) {
              SqrtPoint pt = sampler.sqrt_point(n);
              return to_string(wk_sym_trig(pt, K));
            }
            if (id == IdentityId::TrigDuality) {
              SqrtPoint pt = sampler.sqrt_point(n);
              Rational q = pt.q_sqrt * pt.q_sqrt, t = pt.t_sqrt * pt.t_sqrt;
              std::vector<Rational> u, v;
              for (const Rational& w : pt.u_sqrts) u.push_back(w * w);
              for (const Rational& w : pt.v_sqrts) v.push_back(w * w);
              return to_string(side_trig_plain(Side::LHS, q, t, u, v, K) -
                               side_trig_plain(Side::RHS, q, t, u, v, K));
            }
            throw std::domain_error("identity has no exact difference evaluator");
          });
        },
        py::arg("identity"), py::arg("n"), py::arg("K"), py::arg("seed") = 1,
        "LHS - RHS at a seeded random exact point (exact rational string)");

  m.def("kernel_two_tuple",
        [](const std::string& side, const std::string& kind, const std::vector<std::string>& z,
           const std::vector<std::string>& y, const std::string& alpha, int r) {
          return to_string(
              kernel_two_tuple_side(side_of(side), odd_of(kind), rats(z), rats(y), rat(alpha), r));
        });
  m.def("kernel_single_tuple",
        [](const std::string& side, const std::string& kind, const std::vector<std::string>& x,
           const std::string& alpha, const std::string& beta, int r) {
          return to_string(kernel_single_tuple_side(side_of(side), odd_of(kind), rats(x),
                                                    rat(alpha), rat(beta), r));
        });
  m.def("riemann_check",
        [](const std::string& kind, const std::string& x, const std::string& y,
           const std::string& u, const std::string& v) {
          return riemann_check(odd_of(kind), rat(x), rat(y), rat(u), rat(v));
        });
  m.def("limit_relation_check", [](int n, uint64_t seed) {
    return with_resampling(seed, [&](Sampler& sampler) {
      return limit_relation_check(n, sample_rational_point(sampler, n));
    });
  });

  m.def("diagonal_residue_check", [](int n, int K, int p, uint64_t seed) {
    return with_resampling(seed, [&](Sampler& sampler) {
      return diagonal_residue_check(n, K, p, sampler.sqrt_point(n));
    });
  });
  m.def("mixed_residue_check", [](int n, const Composition& k, int p, uint64_t seed) {
    return with_resampling(seed, [&](Sampler& sampler) {
      return mixed_residue_check(n, k, p, sampler.sqrt_point(n));
    });
  });
  m.def("difference_residue_recursion", [](int n, int K, int p, uint64_t seed) {
    return with_resampling(seed, [&](Sampler& sampler) {
      return difference_residue_recursion(n, K, p, sampler.sqrt_point(n));
    });
  });

  m.def("run_suite",
        [](const std::string& suite, int n_min, int n_max, int k_min, int k_max, int trials,
           uint64_t seed, int precision_bits, const std::string& nome, int tolerance_bits) {
          RunConfig config;
          config.suite = suite;
          config.n_min = n_min;
          config.n_max = n_max;
          config.k_min = k_min;
          config.k_max = k_max;
          config.trials = trials;
          config.seed = seed;
          config.precision_bits = precision_bits;
          config.nome = rat(nome);
          config.tolerance_bits = tolerance_bits;
          RunOutcome out = run_verify(config);
          return py::make_tuple(static_cast<int>(out.exit_code),
                                emit_report(out.report, "json"));
        },
        py::arg("suite") = "all", py::arg("n_min") = 2, py::arg("n_max") = 2,
        py::arg("k_min") = 0, py::arg("k_max") = 2, py::arg("trials") = 1, py::arg("seed") = 1,
        py::arg("precision_bits") = 256, py::arg("nome") = "1/5",
        py::arg("tolerance_bits") = 150,
        "Run a verification suite; returns (exit_code, json_report)");
}

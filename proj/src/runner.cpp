#include "qduality/runner.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "qduality/residues.hpp"
#include "qduality/sampling.hpp"
#include "qduality/theta.hpp"

namespace qduality {

namespace {

struct CellSpec {
  std::string kind;
  IdentityId identity = IdentityId::SymTrigDuality;
  bool has_identity = false;
  OddKind s = OddKind::Linear;
  bool has_s = false;
  int n = -1;
  int K = -1;
  int r = -1;
  int p = 0;
  int trial = -1;
  int shifted_group = 0;  // quasiperiodicity: 0 -> u-shift, 1 -> v-shift
};

std::string sqrt_point_canonical(const SqrtPoint& pt) {
  std::ostringstream s;
  s << "q=" << to_string(pt.q_sqrt) << ";t=" << to_string(pt.t_sqrt);
  for (const Rational& w : pt.u_sqrts) s << ";u=" << to_string(w);
  for (const Rational& w : pt.v_sqrts) s << ";v=" << to_string(w);
  return s.str();
}

std::string rational_point_canonical(const RationalPoint& pt) {
  std::ostringstream s;
  s << "alpha=" << to_string(pt.alpha);
  for (const Rational& w : pt.x) s << ";x=" << to_string(w);
  for (const Rational& w : pt.y) s << ";y=" << to_string(w);
  return s.str();
}

// One retry loop around a body that samples a point and fills the result.
template <class F>
void run_with_resampling(uint64_t cell_seed, CellResult& res, F&& body) {
  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    Sampler sampler(substream_seed(cell_seed, static_cast<uint64_t>(attempt)));
    try {
      body(sampler);
      res.resamples = attempt;
      return;
    } catch (const pole_error&) {
      // resample
    }
  }
  throw resample_exhausted("no pole-free point found");
}

void exec_identity_exact(const CellSpec& spec, const RunConfig&, uint64_t cell_seed,
                         CellResult& res) {
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    Rational lhs, rhs;
    std::string point;
    if (spec.identity == IdentityId::RationalDuality) {
      RationalPoint pt = sample_rational_point(sampler, spec.n);
      lhs = side_rational_duality(Side::LHS, pt, spec.K);
      rhs = side_rational_duality(Side::RHS, pt, spec.K);
      point = rational_point_canonical(pt);
    } else {
      SqrtPoint pt = sampler.sqrt_point(spec.n);
      if (spec.identity == IdentityId::TrigDuality) {
        Rational q = pt.q_sqrt * pt.q_sqrt;
        Rational t = pt.t_sqrt * pt.t_sqrt;
        std::vector<Rational> u, v;
        for (const Rational& w : pt.u_sqrts) u.push_back(w * w);
        for (const Rational& w : pt.v_sqrts) v.push_back(w * w);
        lhs = side_trig_plain(Side::LHS, q, t, u, v, spec.K);
        rhs = side_trig_plain(Side::RHS, q, t, u, v, spec.K);
      } else {
        lhs = side_sym_trig(Side::LHS, pt, spec.K);
        rhs = side_sym_trig(Side::RHS, pt, spec.K);
      }
      point = sqrt_point_canonical(pt);
    }
    res.point_digest = digest(point);
    res.lhs_digest = digest(to_string(lhs));
    res.rhs_digest = digest(to_string(rhs));
    res.equal = lhs == rhs;
  });
}

void exec_identity_elliptic(const CellSpec& spec, const RunConfig& config, uint64_t cell_seed,
                            CellResult& res) {
  PrecisionPolicy policy{config.precision_bits, 32,
                         std::min(config.tolerance_bits, config.precision_bits - 32)};
  mpfr_prec_t prec = config.precision_bits;
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    MPComplex q(sampler.rational_ne1(), prec);
    MPComplex t(sampler.rational_ne1(), prec);
    std::vector<MPComplex> u, v;
    for (int i = 0; i < spec.n; ++i) u.emplace_back(sampler.rational(), prec);
    for (int i = 0; i < spec.n; ++i) v.emplace_back(sampler.rational(), prec);
    MPComplex nome(config.nome, prec);
    MPComplex lhs = side_elliptic(Side::LHS, q, t, u, v, spec.K, nome, policy);
    MPComplex rhs = side_elliptic(Side::RHS, q, t, u, v, spec.K, nome, policy);
    MPFloat dev = (lhs - rhs).abs();
    MPFloat scale = std::max(lhs.abs(), rhs.abs(),
                             [](const MPFloat& a, const MPFloat& b) { return a < b; });
    MPFloat rel = dev / scale;
    res.equal = rel <= MPFloat::pow2(-config.tolerance_bits, prec);
    res.max_deviation = rel.str(3);
    res.point_digest = digest(q.str() + t.str());
    res.lhs_digest = digest(lhs.str(40));
    res.rhs_digest = digest(rhs.str(40));
  });
}

void exec_quasiperiodicity(const CellSpec& spec, const RunConfig& config, uint64_t cell_seed,
                           CellResult& res) {
  // Each side of the elliptic identity picks up t^{-K} under u_1 -> p u_1 and
  // t^{K} under v_1 -> p v_1. Checked to 100 bits, the stated desk tolerance.
  PrecisionPolicy policy{config.precision_bits, 32, 100};
  mpfr_prec_t prec = config.precision_bits;
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    MPComplex q(sampler.rational_ne1(), prec);
    Rational t_exact = sampler.rational_ne1();
    MPComplex t(t_exact, prec);
    std::vector<MPComplex> u, v;
    for (int i = 0; i < spec.n; ++i) u.emplace_back(sampler.rational(), prec);
    for (int i = 0; i < spec.n; ++i) v.emplace_back(sampler.rational(), prec);
    MPComplex nome(config.nome, prec);

    bool ok = true;
    MPFloat worst(0, prec);
    for (Side side : {Side::LHS, Side::RHS}) {
      MPComplex base = side_elliptic(side, q, t, u, v, spec.K, nome, policy);
      MPComplex shifted_value;
      MPComplex expected;
      if (spec.shifted_group == 0) {
        std::vector<MPComplex> us = u;
        us[0] = us[0] * nome;
        shifted_value = side_elliptic(side, q, t, us, v, spec.K, nome, policy);
        expected = base * MPComplex(pow_int(t_exact, -spec.K), prec);
      } else {
        std::vector<MPComplex> vs = v;
        vs[0] = vs[0] * nome;
        shifted_value = side_elliptic(side, q, t, u, vs, spec.K, nome, policy);
        expected = base * MPComplex(pow_int(t_exact, spec.K), prec);
      }
      ok = ok && agreement_check(shifted_value, expected, policy);
      MPFloat rel = (shifted_value - expected).abs() / expected.abs();
      worst = std::max(worst, rel, [](const MPFloat& a, const MPFloat& b) { return a < b; });
      if (side == Side::LHS) {
        res.lhs_digest = digest(shifted_value.str(40));
      } else {
        res.rhs_digest = digest(shifted_value.str(40));
      }
    }
    res.equal = ok;
    res.max_deviation = worst.str(3);
    res.point_digest = digest(q.str() + t.str());
  });
}

void exec_diagonal(const CellSpec& spec, const RunConfig&, uint64_t cell_seed, CellResult& res) {
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    SqrtPoint pt = sampler.sqrt_point(spec.n);
    res.equal = diagonal_residue_check(spec.n, spec.K, spec.p, pt);
    res.point_digest = digest(sqrt_point_canonical(pt));
    res.lhs_digest = res.rhs_digest = res.equal ? digest("cancel") : digest("mismatch");
  });
}

void exec_mixed(const CellSpec& spec, const RunConfig&, uint64_t cell_seed, CellResult& res) {
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    SqrtPoint pt = sampler.sqrt_point(spec.n);
    Composition k(spec.n, 0);
    k[0] = spec.K;
    for (int i = 1; i < spec.n; ++i) k[i] = static_cast<int>(sampler.uniform_int(0, 2));
    res.equal = mixed_residue_check(spec.n, k, spec.p, pt);
    res.point_digest = digest(sqrt_point_canonical(pt));
    res.lhs_digest = res.rhs_digest = res.equal ? digest("factorized") : digest("mismatch");
  });
}

void exec_recursion(const CellSpec& spec, const RunConfig&, uint64_t cell_seed, CellResult& res) {
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    SqrtPoint pt = sampler.sqrt_point(spec.n);
    res.equal = difference_residue_recursion(spec.n, spec.K, spec.p, pt);
    res.point_digest = digest(sqrt_point_canonical(pt));
    res.lhs_digest = res.rhs_digest = res.equal ? digest("zero") : digest("mismatch");
  });
}

void exec_kernel(const CellSpec& spec, const RunConfig&, uint64_t cell_seed, CellResult& res) {
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    Rational lhs, rhs;
    std::string point;
    if (spec.identity == IdentityId::OperatorCommutativity) {
      std::vector<Rational> x = sampler.rationals(spec.n);
      Rational alpha = sampler.rational_ne1();
      Rational beta = sampler.rational_ne1();
      lhs = kernel_single_tuple_side(Side::LHS, spec.s, x, alpha, beta, spec.r);
      rhs = kernel_single_tuple_side(Side::RHS, spec.s, x, alpha, beta, spec.r);
      std::ostringstream c;
      c << "alpha=" << to_string(alpha) << ";beta=" << to_string(beta);
      for (const Rational& w : x) c << ";x=" << to_string(w);
      point = c.str();
    } else {
      std::vector<Rational> z = sampler.rationals(spec.n);
      std::vector<Rational> y = sampler.rationals(spec.n);
      Rational alpha = sampler.rational_ne1();
      lhs = kernel_two_tuple_side(Side::LHS, spec.s, z, y, alpha, spec.r);
      rhs = kernel_two_tuple_side(Side::RHS, spec.s, z, y, alpha, spec.r);
      std::ostringstream c;
      c << "alpha=" << to_string(alpha);
      for (const Rational& w : z) c << ";z=" << to_string(w);
      for (const Rational& w : y) c << ";y=" << to_string(w);
      point = c.str();
    }
    res.point_digest = digest(point);
    res.lhs_digest = digest(to_string(lhs));
    res.rhs_digest = digest(to_string(rhs));
    res.equal = lhs == rhs;
  });
}

void exec_riemann(const CellSpec& spec, const RunConfig&, uint64_t cell_seed, CellResult& res) {
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    Rational x = sampler.rational(), y = sampler.rational();
    Rational u = sampler.rational(), v = sampler.rational();
    res.equal = riemann_check(spec.s, x, y, u, v);
    res.point_digest =
        digest(to_string(x) + ";" + to_string(y) + ";" + to_string(u) + ";" + to_string(v));
    res.lhs_digest = res.rhs_digest = res.equal ? digest("riemann") : digest("mismatch");
  });
}

void exec_limit(const CellSpec& spec, const RunConfig&, uint64_t cell_seed, CellResult& res) {
  run_with_resampling(cell_seed, res, [&](Sampler& sampler) {
    RationalPoint pt = sample_rational_point(sampler, spec.n);
    res.equal = limit_relation_check(spec.n, pt);
    res.point_digest = digest(rational_point_canonical(pt));
    res.lhs_digest = res.rhs_digest = res.equal ? digest("decomposed") : digest("mismatch");
  });
}

CellResult execute_cell(const CellSpec& spec, uint64_t index, const RunConfig& config) {
  CellResult res;
  res.index = index;
  res.kind = spec.kind;
  if (spec.has_identity) res.identity = identity_name(spec.identity);
  if (spec.has_s) res.s_kind = spec.s == OddKind::Linear ? "linear" : "trig-exp";
  res.n = spec.n;
  res.K = spec.K;
  res.r = spec.r;
  res.p = spec.p;
  res.trial = spec.trial;
  res.cell_seed = substream_seed(config.seed, index);

  auto start = std::chrono::steady_clock::now();
  try {
    if (spec.kind == "identity-exact") {
      exec_identity_exact(spec, config, res.cell_seed, res);
    } else if (spec.kind == "identity-elliptic") {
      exec_identity_elliptic(spec, config, res.cell_seed, res);
    } else if (spec.kind == "quasiperiodicity") {
      exec_quasiperiodicity(spec, config, res.cell_seed, res);
    } else if (spec.kind == "diagonal-residues") {
      exec_diagonal(spec, config, res.cell_seed, res);
    } else if (spec.kind == "mixed-residue") {
      exec_mixed(spec, config, res.cell_seed, res);
    } else if (spec.kind == "residue-recursion") {
      exec_recursion(spec, config, res.cell_seed, res);
    } else if (spec.kind == "kernel") {
      exec_kernel(spec, config, res.cell_seed, res);
    } else if (spec.kind == "riemann") {
      exec_riemann(spec, config, res.cell_seed, res);
    } else if (spec.kind == "limit-relation") {
      exec_limit(spec, config, res.cell_seed, res);
    } else {
      res.error = "unknown cell kind";
    }
  } catch (const resample_exhausted& e) {
    res.error = e.what();
    res.resamples = kMaxResampleAttempts;
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  res.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return res;
}

void add_main_cells(std::vector<CellSpec>& cells, const RunConfig& c, IdentityId id) {
  for (int n = c.n_min; n <= c.n_max; ++n)
    for (int K = c.k_min; K <= c.k_max; ++K)
      for (int trial = 0; trial < c.trials; ++trial) {
        CellSpec s;
        s.kind = "identity-exact";
        s.identity = id;
        s.has_identity = true;
        s.n = n;
        s.K = K;
        s.trial = trial;
        cells.push_back(s);
      }
}

void add_elliptic_cells(std::vector<CellSpec>& cells, const RunConfig& c, bool with_quasi) {
  for (int n = c.n_min; n <= c.n_max; ++n)
    for (int K = std::max(1, c.k_min); K <= c.k_max; ++K)
      for (int trial = 0; trial < c.trials; ++trial) {
        CellSpec s;
        s.kind = "identity-elliptic";
        s.identity = IdentityId::EllipticDuality;
        s.has_identity = true;
        s.n = n;
        s.K = K;
        s.trial = trial;
        cells.push_back(s);
      }
  if (!with_quasi) return;
  for (int K = std::max(1, c.k_min); K <= c.k_max; ++K)
    for (int group = 0; group < 2; ++group)
      for (int trial = 0; trial < c.trials; ++trial) {
        CellSpec s;
        s.kind = "quasiperiodicity";
        s.identity = IdentityId::EllipticDuality;
        s.has_identity = true;
        s.n = c.n_min;
        s.K = K;
        s.shifted_group = group;
        s.trial = trial;
        cells.push_back(s);
      }
}

void add_lemma_cells(std::vector<CellSpec>& cells, const RunConfig& c) {
  for (int n = std::max(2, c.n_min); n <= std::max(2, c.n_max); ++n) {
    for (int K = std::max(1, c.k_min); K <= c.k_max; ++K)
      for (int p = -2; p <= 2; ++p)
        for (int trial = 0; trial < c.trials; ++trial) {
          CellSpec s;
          s.kind = "diagonal-residues";
          s.n = n;
          s.K = K;
          s.p = p;
          s.trial = trial;
          cells.push_back(s);
        }
    for (int k1 = std::max(1, c.k_min); k1 <= c.k_max; ++k1)
      for (int p = 1; p <= k1; ++p)
        for (int trial = 0; trial < c.trials; ++trial) {
          CellSpec s;
          s.kind = "mixed-residue";
          s.n = n;
          s.K = k1;  // leading part; the rest of the composition is sampled
          s.p = p;
          s.trial = trial;
          cells.push_back(s);
        }
    for (int K = std::max(1, c.k_min); K <= c.k_max; ++K)
      for (int p = 1; p <= K; ++p)
        for (int trial = 0; trial < c.trials; ++trial) {
          CellSpec s;
          s.kind = "residue-recursion";
          s.n = n;
          s.K = K;
          s.p = p;
          s.trial = trial;
          cells.push_back(s);
        }
  }
}

void add_kernel_cells(std::vector<CellSpec>& cells, const RunConfig& c, IdentityId id,
                      bool linear_only) {
  for (OddKind kind : {OddKind::Linear, OddKind::TrigExp}) {
    if (linear_only && kind != OddKind::Linear) continue;
    for (int n = c.n_min; n <= c.n_max; ++n) {
      int rlo = c.r_min ? *c.r_min : 0;
      int rhi = c.r_max ? std::min(*c.r_max, n) : n;
      for (int r = rlo; r <= rhi; ++r)
        for (int trial = 0; trial < c.trials; ++trial) {
          CellSpec s;
          s.kind = "kernel";
          s.identity = id;
          s.has_identity = true;
          s.s = kind;
          s.has_s = true;
          s.n = n;
          s.r = r;
          s.trial = trial;
          cells.push_back(s);
        }
    }
  }
}

void add_riemann_cells(std::vector<CellSpec>& cells, const RunConfig& c) {
  for (OddKind kind : {OddKind::Linear, OddKind::TrigExp})
    for (int trial = 0; trial < c.trials; ++trial) {
      CellSpec s;
      s.kind = "riemann";
      s.s = kind;
      s.has_s = true;
      s.trial = trial;
      cells.push_back(s);
    }
}

void add_limit_cells(std::vector<CellSpec>& cells, const RunConfig& c) {
  for (int n = c.n_min; n <= c.n_max; ++n)
    for (int trial = 0; trial < c.trials; ++trial) {
      CellSpec s;
      s.kind = "limit-relation";
      s.n = n;
      s.trial = trial;
      cells.push_back(s);
    }
}

std::vector<CellSpec> build_cells(const RunConfig& c) {
  std::vector<CellSpec> cells;
  if (c.identity) {
    switch (*c.identity) {
      case IdentityId::RationalDuality:
      case IdentityId::TrigDuality:
      case IdentityId::SymTrigDuality:
        add_main_cells(cells, c, *c.identity);
        break;
      case IdentityId::EllipticDuality:
        add_elliptic_cells(cells, c, /*with_quasi=*/false);
        break;
      case IdentityId::KernelFunction:
        add_kernel_cells(cells, c, IdentityId::KernelFunction, false);
        break;
      case IdentityId::OperatorCommutativity:
        add_kernel_cells(cells, c, IdentityId::OperatorCommutativity, false);
        break;
      case IdentityId::RationalKernel:
        add_kernel_cells(cells, c, IdentityId::KernelFunction, /*linear_only=*/true);
        break;
      case IdentityId::RationalLimit:
        add_limit_cells(cells, c);
        break;
    }
    return cells;
  }
  if (c.suite == "all" || c.suite == "main") {
    add_main_cells(cells, c, IdentityId::RationalDuality);
    add_main_cells(cells, c, IdentityId::TrigDuality);
    add_main_cells(cells, c, IdentityId::SymTrigDuality);
  }
  if (c.suite == "all" || c.suite == "lemmas") add_lemma_cells(cells, c);
  if (c.suite == "all" || c.suite == "kernels") {
    add_riemann_cells(cells, c);
    add_kernel_cells(cells, c, IdentityId::KernelFunction, false);
    add_kernel_cells(cells, c, IdentityId::OperatorCommutativity, false);
  }
  if (c.suite == "all" || c.suite == "limits") add_limit_cells(cells, c);
  if (c.suite == "all" || c.suite == "elliptic") add_elliptic_cells(cells, c, true);
  return cells;
}

int thread_count() {
  if (const char* env = std::getenv("QDUALITY_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

}  // namespace

RunOutcome run_verify(const RunConfig& config) {
  RunOutcome out;
  out.report.config = config;
  std::string problem = config.problem();
  if (!problem.empty()) {
    CellResult res;
    res.kind = "config";
    res.error = problem;
    out.report.cells.push_back(res);
    out.report.failed = 1;
    out.exit_code = ExitCode::InvalidConfig;
    return out;
  }

  std::vector<CellSpec> cells = build_cells(config);
  out.report.cells.resize(cells.size());

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      out.report.cells[i] = execute_cell(cells[i], static_cast<uint64_t>(i), config);
    }
  };
  int threads = std::min<int>(thread_count(), static_cast<int>(cells.size()) + 1);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  bool exhausted = false;
  for (const CellResult& res : out.report.cells) {
    if (!res.error.empty()) {
      exhausted = true;
      ++out.report.failed;
    } else if (res.equal) {
      ++out.report.passed;
    } else {
      ++out.report.failed;
    }
  }
  if (exhausted)
    out.exit_code = ExitCode::InvalidConfig;
  else if (out.report.failed > 0)
    out.exit_code = ExitCode::Mismatch;
  return out;
}

}  // namespace qduality

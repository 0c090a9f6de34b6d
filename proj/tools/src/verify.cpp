#include "verify.hpp"

#include "pool.hpp"

#include "ddk/calogero.hpp"
#include "ddk/inner.hpp"
#include "ddk/parse.hpp"
#include "ddk/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>

namespace ddk::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Above this weight degree the orthonormal-substitution route expands into
// too many terms for an interactive run.
constexpr int kRouteCompareMaxWeightDegree = 12;
// Weighted integrals expand the density over the common denominator of all
// root forms; beyond rank 3 neither path is interactive.
constexpr int kIntegralMaxRank = 3;
// Twisted compositions for non-trivial rho accumulate poles over all roots.
constexpr int kTwistedMaxRank = 3;
constexpr int kIntegrityPairs = 100;

struct Env {
  RunConfig cfg;
  Resolved r;
};
using EnvPtr = std::shared_ptr<const Env>;

struct Outcome {
  bool ok = true;
  std::string residual = "0";
  std::string witness;
};

Outcome good() { return {}; }
Outcome bad(std::string residual, std::string witness) { return {false, std::move(residual), std::move(witness)}; }

std::string show(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
  return s + ")";
}

ScalarOptions rich() {
  ScalarOptions o;
  o.imaginary = true;
  o.radicals = true;
  return o;
}

ScalarOptions complex_only() {
  ScalarOptions o;
  o.imaginary = true;
  return o;
}

RationalSection random_section(Sampler& s, const RootSystemPtr& rs, int deg, int terms = 3,
                               const ScalarOptions& opt = {}) {
  return RationalSection(rs, s.polynomial(rs->ambient_dim(), deg, terms, opt));
}

VectorField random_field(Sampler& s, const RootSystemPtr& rs, int dim, int deg, int terms = 3,
                         const ScalarOptions& opt = {}) {
  VectorField f;
  for (int c = 0; c < dim; ++c) f.push_back(random_section(s, rs, deg, terms, opt));
  return f;
}

const GroupElement& random_element(Sampler& s, const std::vector<GroupElement>& group) {
  return group[static_cast<std::size_t>(s.uniform_int(0, static_cast<int>(group.size()) - 1))];
}

GroupElement random_word_element(Sampler& s, const RootSystemA& rs) {
  std::vector<int> word;
  const int len = s.uniform_int(0, 2 * rs.num_roots());
  for (int i = 0; i < len; ++i) word.push_back(s.uniform_int(0, rs.num_generators() - 1));
  return GroupElement::from_word(rs, word);
}

OperatorReport base(const std::string& suite, std::string name, Kind kind, std::string path = "symbolic") {
  OperatorReport r;
  r.suite = suite;
  r.name = std::move(name);
  r.kind = kind;
  r.path = std::move(path);
  return r;
}

OperatorReport skipped(const std::string& suite, std::string name, Kind kind, std::string why) {
  auto r = base(suite, std::move(name), kind);
  r.status = Status::skipped;
  r.residual = "";
  r.note = std::move(why);
  return r;
}

void finish(OperatorReport& r) { r.status = r.trials_passed == r.trials ? Status::pass : Status::fail; }

// Exact symbolic checks repeated over seeded random inputs.
OperatorReport symbolic(OperatorReport r, int trials, std::uint64_t seed,
                        const std::function<Outcome(Sampler&)>& check) {
  r.seed = seed;
  r.trials = trials;
  Sampler s(seed);
  for (int t = 0; t < trials; ++t) {
    auto o = check(s);
    if (o.ok) {
      ++r.trials_passed;
    } else if (r.witness.empty()) {
      r.residual = o.residual;
      r.witness = o.witness;
    }
  }
  finish(r);
  return r;
}

std::string pole_growth_limit() {
  return "non-trivial rho limited to rank <= " + std::to_string(kTwistedMaxRank) +
         ": reflected terms build large root-form denominators";
}

bool integer_k(const Rational& k) { return k >= 0 && k.get_den() == 1; }

bool exact_path(const Env& env) { return integer_k(env.r.k); }

std::string integral_limit() {
  return "weighted integrals limited to rank <= " + std::to_string(kIntegralMaxRank);
}

std::string exact_unavailable(const Env& env) {
  if (env.r.system->rank() > kIntegralMaxRank) return integral_limit();
  return "exact integration needs a nonnegative integer k";
}

// Residual integrals: exact when k is a nonnegative integer, Monte Carlo
// otherwise (fewer trials, each with its own stream).
OperatorReport integral(const EnvPtr& env, OperatorReport r, std::uint64_t seed,
                        const std::function<Integrand(Sampler&, const DunklContext&, std::string&)>& make,
                        const DunklContext& ctx) {
  const auto& cfg = env->cfg;
  const bool exact = exact_path(*env);
  if (env->r.system->rank() > kIntegralMaxRank) {
    r.status = Status::skipped;
    r.residual = "";
    r.note = integral_limit();
    return r;
  }
  if (env->r.k <= make_rational(-1, 2)) {
    r.status = Status::skipped;
    r.residual = "";
    r.note = "weight not locally integrable for k <= -1/2";
    return r;
  }
  r.path = exact ? "exact" : "mc";
  r.seed = seed;
  r.trials = exact ? cfg.trials : std::min(cfg.trials, 3);
  if (!exact) r.samples = cfg.mc_samples;
  Sampler s(seed);
  double worst = -1;
  for (int t = 0; t < r.trials; ++t) {
    std::string input;
    auto h = make(s, ctx, input);
    const auto trial_seed = derive_seed(seed, "trial", static_cast<std::uint64_t>(t));
    auto res = evaluate_residual(ctx, h, cfg.mc_samples, trial_seed);
    const bool ok = res.vanishes();
    if (ok) ++r.trials_passed;
    if (res.exact_path) {
      if (!ok && r.witness.empty()) {
        r.residual = res.to_string();
        r.witness = input;
      }
    } else {
      const double sr = res.mc.std_error > 0 ? std::abs(res.mc.mean) / res.mc.std_error : 0.0;
      const double si = res.mc.std_error_imag > 0 ? std::abs(res.mc.mean_imag) / res.mc.std_error_imag : 0.0;
      const double z = std::max(sr, si);
      if (z > worst) {
        worst = z;
        r.residual = res.to_string();
        if (!ok) r.witness = input;
      }
    }
  }
  finish(r);
  return r;
}

GaussianTestFn gfn(const RationalSection& p) { return GaussianTestFn{p.num()}; }

int weight_degree(const Env& env) {
  const Rational d = 2 * env.r.k * env.r.system->num_roots();
  return static_cast<int>(d.get_num().get_si() / std::max(1L, d.get_den().get_si()));
}

std::vector<std::string> reps_for(const RootSystemPtr& rs) {
  std::vector<std::string> out;
  for (const auto& name : Representation::builtin_names()) {
    if (name == "irrep2d" && (rs->is_line() || rs->rank() != 2)) continue;
    out.push_back(name);
  }
  return out;
}

using Job = std::function<OperatorReport()>;

// ---------------------------------------------------------------------------

std::vector<Job> commutativity(const EnvPtr& env) {
  const std::string S = "commutativity";
  std::vector<Job> jobs;
  jobs.push_back([env, S] {
    const auto& rs = env->r.system;
    DunklContext ctx(rs, env->r.k);
    return symbolic(base(S, "scalar Dunkl operators commute: [T_xi, T_eta] f = 0", Kind::asserted),
                    env->cfg.trials, derive_seed(env->cfg.seed, S, 0), [&](Sampler& s) {
                      Point xi = s.direction(*rs), eta = s.direction(*rs);
                      auto f = random_section(s, rs, env->cfg.degree_cap, 4, rich());
                      auto c = commutator(ctx, xi, eta, f);
                      if (c.is_zero()) return good();
                      return bad(c.to_string(), "xi=" + show(xi) + " eta=" + show(eta) + " f=" + f.to_string());
                    });
  });
  if (env->r.rho.name() != "trivial") {
    jobs.push_back([env, S] {
      const auto& rs = env->r.system;
      const auto& rho = env->r.rho;
      const std::string name = "twisted operators commute: [T^rho_xi, T^rho_eta] Phi = 0 (rho=" + rho.name() + ")";
      if (rs->rank() > kTwistedMaxRank) return skipped(S, name, Kind::measured, pole_growth_limit());
      DunklContext ctx(rs, env->r.k);
      return symbolic(
          base(S, name, Kind::measured),
          env->cfg.trials, derive_seed(env->cfg.seed, S, 1), [&](Sampler& s) {
            Point xi = s.direction(*rs), eta = s.direction(*rs);
            auto phi = random_field(s, rs, rho.dim(), env->cfg.degree_cap, 3, complex_only());
            auto c = sub(twisted_dunkl_apply(ctx, rho, xi, twisted_dunkl_apply(ctx, rho, eta, phi)),
                         twisted_dunkl_apply(ctx, rho, eta, twisted_dunkl_apply(ctx, rho, xi, phi)));
            if (is_zero(c)) return good();
            return bad(to_string(c), "xi=" + show(xi) + " eta=" + show(eta) + " Phi=" + to_string(phi));
          });
    });
  }
  return jobs;
}

std::vector<Job> adjoint(const EnvPtr& env) {
  const std::string S = "adjoint";
  std::vector<Job> jobs;
  const int deg = std::min(env->cfg.degree_cap, 3);

  jobs.push_back([env, S, deg] {
    const auto& rs = env->r.system;
    DunklContext ctx(rs, env->r.k);
    return integral(
        env, base(S, "adjoint of d_xi: <d_xi f, g> = <f, (-d_xi - <grad log delta_k, xi>) g>", Kind::asserted),
        derive_seed(env->cfg.seed, S, 0),
        [&](Sampler& s, const DunklContext& c, std::string& in) {
          Point xi = s.direction(*rs);
          auto f = random_section(s, rs, deg, 3, complex_only()), g = random_section(s, rs, deg, 3, complex_only());
          in = "xi=" + show(xi) + " f=" + f.to_string() + " g=" + g.to_string();
          return adjoint_integrand(c, xi, gfn(f), gfn(g));
        },
        ctx);
  });

  auto exact_only = [env, S](std::string name, std::uint64_t index,
                             std::function<Outcome(Sampler&, const DunklContext&)> check) -> Job {
    return [env, S, name, index, check] {
      if (!exact_path(*env) || env->r.system->rank() > kIntegralMaxRank)
        return skipped(S, name, Kind::asserted, exact_unavailable(*env));
      DunklContext ctx(env->r.system, env->r.k);
      auto r = symbolic(base(S, name, Kind::asserted, "exact"), env->cfg.trials, derive_seed(env->cfg.seed, S, index),
                        [&](Sampler& s) { return check(s, ctx); });
      return r;
    };
  };

  jobs.push_back(exact_only("Hermitian symmetry: <f, g> = conj <g, f>", 1, [env, deg](Sampler& s, const DunklContext& c) {
    const auto& rs = env->r.system;
    auto f = random_section(s, rs, deg, 3, rich()), g = random_section(s, rs, deg, 3, rich());
    auto fg = inner_product_exact(c, gfn(f), gfn(g)), gf = inner_product_exact(c, gfn(g), gfn(f));
    if (fg.coefficient == gf.coefficient.conj() && fg.twice_pi_power == gf.twice_pi_power) return good();
    return bad((fg - ExactIntegral{gf.coefficient.conj(), gf.twice_pi_power}).to_string(),
               "f=" + f.to_string() + " g=" + g.to_string());
  }));

  jobs.push_back(exact_only("positivity: <f, f> > 0 for f != 0", 2, [env, deg](Sampler& s, const DunklContext& c) {
    const auto& rs = env->r.system;
    auto f = random_section(s, rs, deg, 3, rich());
    if (f.is_zero()) f = RationalSection::constant(rs, FieldElem::one());
    auto ff = inner_product_exact(c, gfn(f), gfn(f));
    if (ff.coefficient == ff.coefficient.conj() && ff.approx().real() > 0) return good();
    return bad(ff.to_string(), "f=" + f.to_string());
  }));

  jobs.push_back([env, S, deg, exact_only] {
    const std::string name = "exact routes agree: moment recursion vs orthonormal substitution";
    if (exact_path(*env) && weight_degree(*env) > kRouteCompareMaxWeightDegree)
      return skipped(S, name, Kind::asserted,
                     "route comparison limited to weight degree <= " + std::to_string(kRouteCompareMaxWeightDegree));
    return exact_only(name, 3, [env, deg](Sampler& s, const DunklContext& c) {
      const auto& rs = env->r.system;
      Integrand h(rs);
      auto a = random_section(s, rs, deg, 3, rich()), b = random_section(s, rs, deg, 3, rich());
      h.add_pair(a, b);
      auto x = integrate_exact(c, h), y = integrate_exact_orthonormal(c, h);
      if (x == y) return good();
      return bad((x - y).to_string(), "a=" + a.to_string() + " b=" + b.to_string());
    })();
  });

  jobs.push_back([env, S, deg] {
    const std::string name = "Monte Carlo inner products match exact values within 4 standard errors";
    if (!exact_path(*env) || env->r.system->rank() > kIntegralMaxRank)
      return skipped(S, name, Kind::asserted, exact_unavailable(*env));
    const auto& rs = env->r.system;
    DunklContext ctx(rs, env->r.k);
    auto r = base(S, name, Kind::asserted, "mc");
    r.seed = derive_seed(env->cfg.seed, S, 4);
    r.samples = env->cfg.mc_samples;
    r.trials = std::min(env->cfg.trials, 3);
    Sampler s(*r.seed);
    for (int t = 0; t < r.trials; ++t) {
      auto f = random_section(s, rs, std::min(deg, 2), 3), g = random_section(s, rs, std::min(deg, 2), 3);
      auto exact = inner_product_exact(ctx, gfn(f), gfn(g));
      auto mc = inner_product_mc(ctx, gfn(f), gfn(g), env->cfg.mc_samples,
                                 derive_seed(*r.seed, "trial", static_cast<std::uint64_t>(t)));
      if (mc.within(exact.approx())) {
        ++r.trials_passed;
      } else if (r.witness.empty()) {
        r.witness = "f=" + f.to_string() + " g=" + g.to_string() + " exact=" + exact.to_string();
      }
      r.residual = mc.to_string() + " vs exact " + exact.to_string();
    }
    finish(r);
    return r;
  });
  return jobs;
}

std::vector<Job> skew(const EnvPtr& env) {
  const std::string S = "skew";
  const int deg = std::min(env->cfg.degree_cap, 3);
  std::vector<Job> jobs;

  auto scalar = [env, S, deg](SkewOperator op, std::string name, std::uint64_t index, std::string note) -> Job {
    return [env, S, deg, op, name, index, note] {
      const auto& rs = env->r.system;
      DunklContext ctx(rs, env->r.k);
      auto r = integral(
          env, base(S, name, Kind::asserted), derive_seed(env->cfg.seed, S, index),
          [&](Sampler& s, const DunklContext& c, std::string& in) {
            Point xi = s.direction(*rs);
            auto f = random_section(s, rs, deg, 3, complex_only()), g = random_section(s, rs, deg, 3, complex_only());
            in = "xi=" + show(xi) + " f=" + f.to_string() + " g=" + g.to_string();
            return skew_integrand(c, op, xi, gfn(f), gfn(g));
          },
          ctx);
      r.note = note;
      return r;
    };
  };
  jobs.push_back(scalar(SkewOperator::drift, "drift operator skew-adjoint: <A_xi f, g> + <f, A_xi g> = 0", 0,
                        "global Gaussian-damped polynomial class; no chamber wall terms arise"));
  jobs.push_back(scalar(SkewOperator::dunkl, "Dunkl operator skew-adjoint: <T_xi f, g> + <f, T_xi g> = 0", 1, ""));

  if (env->r.rho.name() != "trivial") {
    jobs.push_back([env, S, deg] {
      const auto& rs = env->r.system;
      const auto& rho = env->r.rho;
      DunklContext ctx(rs, env->r.k);
      return integral(
          env,
          base(S, "twisted operator skew-adjoint: <T^rho_xi F, G> + <F, T^rho_xi G> = 0 (rho=" + rho.name() + ")",
               Kind::measured),
          derive_seed(env->cfg.seed, S, 2),
          [&](Sampler& s, const DunklContext& c, std::string& in) {
            Point xi = s.direction(*rs);
            auto f = random_field(s, rs, rho.dim(), deg, 3, complex_only());
            auto g = random_field(s, rs, rho.dim(), deg, 3, complex_only());
            in = "xi=" + show(xi) + " F=" + to_string(f) + " G=" + to_string(g);
            return twisted_skew_integrand(c, rho, xi, f, g);
          },
          ctx);
    });
  }

  auto dirac = [env, S, deg](bool symmetric) -> Job {
    return [env, S, deg, symmetric] {
      const auto& rs = env->r.system;
      DiracContext d(DunklContext(rs, env->r.k), Representation::builtin("trivial", rs));
      auto r = integral(
          env,
          symmetric ? base(S, "Dirac-Dunkl operator symmetric: <D F, G> - <F, D G> = 0 (rho=trivial)", Kind::measured)
                    : base(S, "Dirac-Dunkl operator skew-adjoint: <D F, G> + <F, D G> = 0 (rho=trivial)",
                           Kind::asserted),
          derive_seed(env->cfg.seed, S, symmetric ? 4 : 3),
          [&](Sampler& s, const DunklContext&, std::string& in) {
            auto f = random_field(s, rs, d.components(), deg, 3, complex_only());
            auto g = random_field(s, rs, d.components(), deg, 3, complex_only());
            in = "F=" + to_string(f) + " G=" + to_string(g);
            return symmetric ? dirac_symmetry_integrand(d, f, g) : dirac_skew_integrand(d, f, g);
          },
          d.dunkl);
      if (!symmetric)
        r.note = "e_a are anti-Hermitian and each T_{u_a} is skew, so e_a T_{u_a} is symmetric; see the symmetric entry";
      return r;
    };
  };
  jobs.push_back(dirac(false));
  jobs.push_back(dirac(true));
  return jobs;
}

std::vector<Job> square(const EnvPtr& env) {
  const std::string S = "square";
  const int deg = env->cfg.degree_cap;
  std::vector<Job> jobs;

  auto dirac_square = [env, S, deg](std::string rep, std::uint64_t index) -> Job {
    return [env, S, deg, rep, index] {
      const auto& rs = env->r.system;
      const bool scalar_rep = rep == "trivial";
      const std::string name = "Dirac square: D^2 F + Delta_k F = 0 (rho=" + rep + ")";
      if (!scalar_rep && rs->rank() > kTwistedMaxRank)
        return skipped(S, name, Kind::measured, pole_growth_limit());
      DiracContext d(DunklContext(rs, env->r.k),
                     scalar_rep ? Representation::builtin("trivial", rs) : env->r.rho);
      return symbolic(base(S, name,
                           scalar_rep ? Kind::asserted : Kind::measured),
                      env->cfg.trials, derive_seed(env->cfg.seed, S, index), [&](Sampler& s) {
                        auto f = random_field(s, rs, d.components(), deg, 3, complex_only());
                        auto res = dirac_square_residual(d, f);
                        if (is_zero(res)) return good();
                        return bad(to_string(res), "F=" + to_string(f));
                      });
    };
  };
  jobs.push_back(dirac_square("trivial", 0));
  if (env->r.rho.name() != "trivial") jobs.push_back(dirac_square(env->r.rho.name(), 1));

  jobs.push_back([env, S, deg] {
    const auto& rs = env->r.system;
    DiracContext d(DunklContext(rs, env->r.k), Representation::builtin("trivial", rs));
    return symbolic(base(S, "square decomposition: anticommutator and commutator parts vanish (rho=trivial)",
                         Kind::asserted),
                    env->cfg.trials, derive_seed(env->cfg.seed, S, 2), [&](Sampler& s) {
                      auto f = random_field(s, rs, d.components(), deg, 3, complex_only());
                      auto dec = decompose_square(d, f);
                      if (dec.consistent() && is_zero(dec.anticommutator_part) && is_zero(dec.commutator_part))
                        return good();
                      return bad("anticommutator: " + to_string(dec.anticommutator_part) +
                                     "; commutator: " + to_string(dec.commutator_part),
                                 "F=" + to_string(f));
                    });
  });

  jobs.push_back([env, S, deg] {
    const auto& rs = env->r.system;
    DiracContext d(DunklContext(rs, 0), Representation::builtin("trivial", rs));
    auto r = symbolic(base(S, "flat reduction at k = 0: D = flat Dirac and D^2 = -Delta", Kind::asserted),
                      env->cfg.trials, derive_seed(env->cfg.seed, S, 3), [&](Sampler& s) {
                        auto f = random_field(s, rs, d.components(), deg, 3, complex_only());
                        auto diff = sub(dirac_dunkl_apply(d, f), flat_dirac_apply(d.gens, d.basis, f));
                        if (!is_zero(diff)) return bad(to_string(diff), "F=" + to_string(f));
                        auto sq = dirac_square_residual(d, f);
                        if (!is_zero(sq)) return bad(to_string(sq), "F=" + to_string(f));
                        return good();
                      });
    r.note = "runs at k = 0 regardless of the configured k";
    return r;
  });

  jobs.push_back([env, S, deg] {
    const auto& rs = env->r.system;
    DunklContext ctx(rs, env->r.k);
    auto std_basis = OrthonormalBasis::standard(*rs);
    return symbolic(base(S, "Dunkl Laplacian is basis independent", Kind::asserted), env->cfg.trials,
                    derive_seed(env->cfg.seed, S, 4), [&](Sampler& s) {
                      auto f = random_section(s, rs, deg, 3, rich());
                      auto w = random_word_element(s, *rs);
                      std::vector<int> signs;
                      for (int a = 0; a < std_basis.size(); ++a) signs.push_back(s.coin() ? 1 : -1);
                      auto other = OrthonormalBasis::flipped(OrthonormalBasis::transformed(std_basis, w), signs);
                      auto l1 = dunkl_laplacian(ctx, std_basis, f);
                      auto l2 = dunkl_laplacian(ctx, other, f);
                      if (!(l1 == l2)) return bad((l1 - l2).to_string(), "f=" + f.to_string());
                      auto l3 = dunkl_laplacian_gram(ctx, f);
                      if (!(l1 == l3)) return bad((l1 - l3).to_string(), "Gram route, f=" + f.to_string());
                      return good();
                    });
  });

  jobs.push_back([env, S, deg] {
    const std::string name = "Dirac outputs agree across pi and quarter plane rotations (spin lifts)";
    const auto& rs = env->r.system;
    if (rs->rank() < 2) return skipped(S, name, Kind::asserted, "plane rotations need rank >= 2");
    DiracContext d(DunklContext(rs, env->r.k), Representation::builtin("trivial", rs));
    return symbolic(base(S, name, Kind::asserted), env->cfg.trials, derive_seed(env->cfg.seed, S, 5),
                    [&](Sampler& s) {
                      auto f = random_field(s, rs, d.components(), std::min(deg, 3), 3, complex_only());
                      const int a = s.uniform_int(0, rs->rank() - 2);
                      const int b = s.uniform_int(a + 1, rs->rank() - 1);
                      for (const auto& ch : {plane_rotation_pi(d, a, b), plane_rotation_quarter(d, a, b)}) {
                        if (!lift_intertwines(d, ch)) return bad("lift", ch.label + ": lift does not intertwine");
                        if (!basis_invariance_check(d, f, ch))
                          return bad("nonzero", ch.label + ": F=" + to_string(f));
                      }
                      return good();
                    });
  });

  auto hamiltonian = [env, S, deg](std::string rep) -> Job {
    return [env, S, deg, rep] {
      const bool asserted = rep == "trivial";
      const std::string name = "Hamiltonian Delta_k on the " + rep + " class: D^2 + Delta_k = 0 on each basis element";
      const auto& rs = env->r.system;
      const Kind kind = asserted ? Kind::asserted : Kind::measured;
      auto h = hamiltonian_report(rs, rep, env->r.k, std::min(deg, 3));
      auto r = base(S, name, kind);
      r.trials = static_cast<int>(h.basis.size());
      r.trials_passed = h.square_identity ? r.trials : 0;
      r.status = h.square_identity ? Status::pass : Status::fail;
      r.residual = h.square_identity ? "0" : "nonzero";
      r.witness = h.witness;
      r.details = json{{"rep", h.rep}, {"basis", h.basis}, {"images", h.images}};
      return r;
    };
  };
  jobs.push_back(hamiltonian("trivial"));
  jobs.push_back(hamiltonian("sign"));
  return jobs;
}

std::vector<Job> crosscheck(const EnvPtr& env) {
  const std::string S = "crosscheck";
  std::vector<Job> jobs;
  const auto& rs = env->r.system;
  if (rs->is_line()) {
    jobs.push_back([S] {
      return skipped(S, "explicit operators vs generic twisted operator", Kind::asserted,
                     "the coordinate formulas are written for A2 and A_n with n >= 2");
    });
    return jobs;
  }
  auto add = [&](std::function<ExplicitOperator()> make, std::string label) {
    const auto index = static_cast<std::uint64_t>(jobs.size());
    jobs.push_back([env, S, make, label, index] {
      auto op = make();
      auto r = base(S, "explicit " + label + " equals the generic twisted operator", Kind::asserted);
      r.seed = derive_seed(env->cfg.seed, S, index);
      auto res = crosscheck_generic(op, env->cfg.trials, *r.seed, std::min(env->cfg.degree_cap, 3));
      r.trials = res.trials;
      r.trials_passed = res.passed;
      r.witness = res.witness;
      r.residual = res.ok() ? "0" : "nonzero";
      finish(r);
      return r;
    });
  };
  const Rational k = env->r.k;
  const int n = rs->rank();
  if (n == 2) {
    for (auto v : {Variant::a2_trivial, Variant::a2_sign, Variant::a2_irrep2d})
      add([v, k] { return ExplicitOperator::a2(v, k, k, k); }, to_string(v));
  }
  for (auto v : {Variant::an_trivial, Variant::an_sign}) {
    add([v, rs, k] { return ExplicitOperator::an(v, rs, k, 0, 1); }, std::string(to_string(v)) + " (xi=e1-e2)");
    add([v, rs, k, n] { return ExplicitOperator::an(v, rs, k, n, 0); },
        std::string(to_string(v)) + " (xi=e" + std::to_string(n + 1) + "-e1)");
  }
  const std::string rep = env->r.rho.dim() > 1 ? env->r.rho.name() : "permutation";
  add([rs, k, rep] { return ExplicitOperator::an(Variant::an_rep, rs, k, 0, 1, Representation::builtin(rep, rs)); },
      "an_rep (rho=" + rep + ", xi=e1-e2)");
  return jobs;
}

std::vector<Job> equivariance(const EnvPtr& env) {
  const std::string S = "equivariance";
  std::vector<Job> jobs;
  const auto& rs = env->r.system;
  for (const auto& name : reps_for(rs)) {
    const auto index = static_cast<std::uint64_t>(jobs.size());
    jobs.push_back([env, S, name, index] {
      const auto& rs = env->r.system;
      auto rho = Representation::builtin(name, rs);
      auto r = base(S, "representation integrity: unitary involutions, braid relations, homomorphism (rho=" + name + ")",
                    Kind::asserted);
      r.seed = derive_seed(env->cfg.seed, S, index);
      auto rep = check_integrity(rho, kIntegrityPairs, *r.seed, env->cfg.exhaustive_rank);
      r.trials = rep.pairs_checked;
      r.trials_passed = rep.ok() ? rep.pairs_checked : 0;
      r.status = rep.ok() ? Status::pass : Status::fail;
      r.residual = rep.ok() ? "0" : "nonzero";
      r.witness = rep.failure;
      if (rs->rank() > env->cfg.exhaustive_rank)
        r.note = "exhaustive unitarity sweep limited to rank <= " + std::to_string(env->cfg.exhaustive_rank) +
                 "; generators and random products checked";
      return r;
    });
  }
  if (!rs->is_line() && rs->rank() == 2) {
    jobs.push_back([env, S] {
      const auto& rs = env->r.system;
      auto rho = Representation::builtin("irrep2d", rs);
      const FieldElem h(make_rational(1, 2));
      const FieldElem q = FieldElem::sqrt(3) * h;
      const FieldMatrix expected(2, 2, {-h, -q, -q, h});
      const auto& got = rho.of_reflection(rs->root_index(0, 2));
      auto r = base(S, "rho(s13) by word conjugation equals [[-1/2, -sqrt(3)/2], [-sqrt(3)/2, 1/2]] (rho=irrep2d)",
                    Kind::asserted);
      r.trials = 1;
      r.trials_passed = got == expected ? 1 : 0;
      if (!(got == expected)) {
        r.residual = (got - expected).to_string();
        r.witness = "got " + got.to_string();
      }
      finish(r);
      return r;
    });
  }
  auto group_check = [env, S](std::string name, std::uint64_t index, bool frame) -> Job {
    return [env, S, name, index, frame] {
      const auto& rs = env->r.system;
      const auto& rho = env->r.rho;
      auto group = enumerate_group(*rs);
      DunklContext ctx(rs, env->r.k);
      return symbolic(base(S, name, Kind::asserted), env->cfg.trials, derive_seed(env->cfg.seed, S, index),
                      [&](Sampler& s) {
                        auto psi = random_field(s, rs, rho.dim(), std::min(env->cfg.degree_cap, 3), 3, complex_only());
                        auto phi = equivariant_projection(rho, psi);
                        if (!is_equivariant(rho, phi)) return bad("not equivariant", "psi=" + to_string(psi));
                        if (!frame) return good();
                        Point xi = s.direction(*rs);
                        const auto& w = random_element(s, group);
                        if (check_frame_equivariance(ctx, rho, xi, phi, w)) return good();
                        std::string perm;
                        for (int p : w.perm()) perm += std::to_string(p + 1);
                        return bad("frame mismatch", "xi=" + show(xi) + " w=" + perm + " Phi=" + to_string(phi));
                      });
    };
  };
  const std::string rn = env->r.rho.name();
  jobs.push_back(group_check("equivariant projection: Phi(w x) = rho(w) Phi(x) (rho=" + rn + ")",
                             static_cast<std::uint64_t>(jobs.size()), false));
  jobs.push_back(group_check("equivariant frame: (T^rho_{w xi} Phi)(w x) = rho(w) (T^rho_xi Phi)(x) (rho=" + rn + ")",
                             static_cast<std::uint64_t>(jobs.size()), true));
  return jobs;
}

std::vector<Job> clifford(const EnvPtr& env) {
  const std::string S = "clifford";
  std::vector<Job> jobs;
  jobs.push_back([env, S] {
    const int top = std::max(5, env->r.system->rank());
    auto r = base(S, "Clifford relations: e_a e_b + e_b e_a = -2 delta_ab I, e_a^dagger = -e_a (n = 1.." +
                         std::to_string(top) + ")",
                  Kind::asserted);
    r.trials = top;
    for (int n = 1; n <= top; ++n) {
      auto c = check_relations(CliffordGens(n));
      if (c.ok()) ++r.trials_passed;
      else if (r.witness.empty()) {
        r.residual = "nonzero";
        r.witness = "n=" + std::to_string(n) + ": " + c.failure;
      }
    }
    finish(r);
    return r;
  });
  jobs.push_back([env, S] {
    const auto& rs = env->r.system;
    CliffordGens gens(rs->rank());
    auto basis = OrthonormalBasis::standard(*rs);
    return symbolic(base(S, "flat Dirac square: D^2 F = -Delta F", Kind::asserted), env->cfg.trials,
                    derive_seed(env->cfg.seed, S, 1), [&](Sampler& s) {
                      auto f = random_field(s, rs, gens.dim_spinor(), env->cfg.degree_cap, 3, complex_only());
                      auto d2 = flat_dirac_apply(gens, basis, flat_dirac_apply(gens, basis, f));
                      VectorField lap;
                      for (const auto& c : f) lap.push_back(flat_laplacian(basis, c));
                      auto res = add(d2, lap);
                      if (is_zero(res)) return good();
                      return bad(to_string(res), "F=" + to_string(f));
                    });
  });
  return jobs;
}

std::vector<Job> jobs_for(const std::string& suite, const EnvPtr& env) {
  if (suite == "commutativity") return commutativity(env);
  if (suite == "adjoint") return adjoint(env);
  if (suite == "skew") return skew(env);
  if (suite == "square") return square(env);
  if (suite == "crosscheck") return crosscheck(env);
  if (suite == "equivariance") return equivariance(env);
  return clifford(env);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"commutativity", "adjoint",      "skew",    "square",
                                              "crosscheck",    "equivariance", "clifford"};
  return names;
}

RootSystemPtr parse_group(const std::string& selector) {
  try {
    return make_root_system(RootSystemA::from_selector(selector, 6));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--group: ") + e.what());
  }
}

Rational parse_multiplicity(const std::string& text) {
  FieldElem v;
  try {
    v = parse_scalar(text);
  } catch (const ParseError& e) {
    throw UsageError("--k: " + std::string(e.what()) + " in '" + text + "'");
  }
  if (!v.is_rational()) throw UsageError("--k: multiplicity must be rational, got '" + text + "'");
  return v.rational_part();
}

Resolved resolve(const RunConfig& cfg) {
  auto rs = parse_group(cfg.group);
  const Rational k = parse_multiplicity(cfg.k);
  const auto& names = Representation::builtin_names();
  if (std::find(names.begin(), names.end(), cfg.rep) == names.end())
    throw UsageError("--rep: unknown representation '" + cfg.rep + "'");
  std::optional<Representation> rho;
  try {
    rho = Representation::builtin(cfg.rep, rs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--rep: ") + e.what());
  }
  if (cfg.suites.empty()) throw UsageError("--suite: at least one suite is required");
  std::vector<std::string> chosen;
  for (const auto& s : cfg.suites) {
    if (s == "all") {
      chosen = suite_names();
      break;
    }
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw UsageError("--suite: unknown suite '" + s + "'");
  }
  if (chosen.empty())
    for (const auto& s : suite_names())
      if (std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end()) chosen.push_back(s);
  if (cfg.mc_samples < 2) throw UsageError("--mc-samples: need at least 2 samples");
  if (cfg.degree_cap < 1 || cfg.degree_cap > 6) throw UsageError("--degree-cap: must be in 1..6");
  if (cfg.trials < 1) throw UsageError("--trials: must be positive");
  if (cfg.exhaustive_rank < 1 || cfg.exhaustive_rank > 6) throw UsageError("--exhaustive-rank: must be in 1..6");
  return Resolved{rs, k, std::move(*rho), std::move(chosen)};
}

json config_json(const RunConfig& cfg, const Resolved& r) {
  return json{{"group", cfg.group},           {"k", ddk::to_string(r.k)},  {"rep", cfg.rep},
              {"suites", r.suites},           {"seed", cfg.seed},     {"mc_samples", cfg.mc_samples},
              {"degree_cap", cfg.degree_cap}, {"trials", cfg.trials},
              {"exhaustive_rank", cfg.exhaustive_rank}};
}

ReportDocument run_verify(const RunConfig& cfg) {
  auto env = std::make_shared<const Env>(Env{cfg, resolve(cfg)});
  ReportDocument doc;
  doc.config = config_json(cfg, env->r);
  const unsigned threads = cfg.jobs ? cfg.jobs : default_jobs();
  for (const auto& suite : env->r.suites) {
    const auto start = Clock::now();
    std::vector<std::function<OperatorReport()>> timed;
    for (auto& job : jobs_for(suite, env)) {
      timed.push_back([job, suite] {
        const auto t0 = Clock::now();
        OperatorReport r;
        try {
          r = job();
        } catch (const std::exception& e) {
          r = base(suite, "internal error", Kind::asserted);
          r.status = Status::fail;
          r.residual = "error";
          r.witness = e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return r;
      });
    }
    auto reports = parallel_map(timed, threads);
    doc.reports.insert(doc.reports.end(), reports.begin(), reports.end());
    doc.suites.push_back({suite, std::chrono::duration<double>(Clock::now() - start).count()});
  }
  return doc;
}

}  // namespace ddk::cli

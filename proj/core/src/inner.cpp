#include "ddk/inner.hpp"

#include "ddk/weight.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <unordered_map>

namespace ddk {

// ---------------------------------------------------------------------------
// ExactIntegral / MCEstimate

std::complex<double> ExactIntegral::approx() const {
  return coefficient.approx() * std::pow(std::numbers::pi, twice_pi_power / 2.0);
}

ExactIntegral ExactIntegral::operator+(const ExactIntegral& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (twice_pi_power != o.twice_pi_power) throw std::invalid_argument("adding integrals with different powers of pi");
  return {coefficient + o.coefficient, twice_pi_power};
}

ExactIntegral ExactIntegral::operator-(const ExactIntegral& o) const {
  return *this + ExactIntegral{-o.coefficient, o.twice_pi_power};
}

bool ExactIntegral::operator==(const ExactIntegral& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return coefficient == o.coefficient && twice_pi_power == o.twice_pi_power;
}

std::string ExactIntegral::to_string() const {
  if (is_zero()) return "0";
  if (twice_pi_power == 0) return coefficient.to_string();
  std::string pi = twice_pi_power == 2   ? "pi"
                   : twice_pi_power % 2 ? "pi^(" + std::to_string(twice_pi_power) + "/2)"
                                        : "pi^" + std::to_string(twice_pi_power / 2);
  std::string c = coefficient.to_string();
  const bool single = c.find(" + ", 1) == std::string::npos && c.find(" - ", 1) == std::string::npos;
  if (c == "1") return pi;
  if (c == "-1") return "-" + pi;
  return (single ? c : "(" + c + ")") + "*" + pi;
}

bool MCEstimate::within(std::complex<double> target, double sigmas) const {
  return std::abs(mean - target.real()) <= sigmas * std_error &&
         std::abs(mean_imag - target.imag()) <= sigmas * std_error_imag;
}

std::string MCEstimate::to_string() const {
  char buf[160];
  if (mean_imag == 0.0 && std_error_imag == 0.0)
    std::snprintf(buf, sizeof buf, "%.6e +/- %.6e", mean, std_error);
  else
    std::snprintf(buf, sizeof buf, "(%.6e +/- %.6e) + i*(%.6e +/- %.6e)", mean, std_error, mean_imag, std_error_imag);
  return buf;
}

// ---------------------------------------------------------------------------
// Moments

ExactIntegral gaussian_moment(std::span<const int> exponents) {
  Rational c = 1;
  for (int m : exponents) {
    if (m % 2 == 1) return {FieldElem::zero(), static_cast<int>(exponents.size())};
    // (2j-1)!! / 2^j with m = 2j
    for (int f = m - 1; f > 1; f -= 2) c *= f;
    c /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(m / 2));
  }
  return {FieldElem(c), static_cast<int>(exponents.size())};
}

namespace {

// E[x^m] for the centered Gaussian on V with covariance P/4 (P the
// orthogonal projection onto V in ambient coordinates), via Stein's identity
// E[x_i q(x)] = sum_j C_ij E[d_j q(x)].
class MomentTable {
 public:
  explicit MomentTable(const RootSystemA& rs) : nvars_(rs.ambient_dim()), cov_(static_cast<std::size_t>(nvars_ * nvars_)) {
    const Rational quarter = make_rational(1, 4);
    if (rs.is_line()) {
      cov_[0] = quarter;
    } else {
      const Rational inv = make_rational(1, nvars_);
      for (int i = 0; i < nvars_; ++i)
        for (int j = 0; j < nvars_; ++j) cov_[static_cast<std::size_t>(i * nvars_ + j)] = ((i == j ? 1 : 0) - inv) * quarter;
    }
  }

  const Rational& moment(Monomial m) {
    auto it = memo_.find(m.bits());
    if (it != memo_.end()) return it->second;
    Rational v = 0;
    if (m.bits() == 0) {
      v = 1;
    } else if (m.degree() % 2 == 0) {
      int i = 0;
      while (m.exponent(i) == 0) ++i;
      Monomial rest = m.with_exponent(i, m.exponent(i) - 1);
      for (int j = 0; j < nvars_; ++j) {
        int e = rest.exponent(j);
        if (e == 0) continue;
        const Rational& c = cov_[static_cast<std::size_t>(i * nvars_ + j)];
        if (sgn(c) == 0) continue;
        v += c * e * moment(rest.with_exponent(j, e - 1));
      }
    }
    return memo_.emplace(m.bits(), v).first->second;
  }

 private:
  int nvars_;
  std::vector<Rational> cov_;
  std::unordered_map<std::uint64_t, Rational> memo_;
};

MomentTable& moment_table(const RootSystemA& rs) {
  thread_local std::unordered_map<int, MomentTable> tables;
  const int key = rs.is_line() ? -1 : rs.ambient_dim();
  auto it = tables.find(key);
  if (it == tables.end()) it = tables.emplace(key, MomentTable(rs)).first;
  return it->second;
}

FieldElem sqrt_half_power(int n) {
  FieldElem out = FieldElem::one();
  const FieldElem r = FieldElem::sqrt(make_rational(1, 2));
  for (int t = 0; t < n; ++t) out *= r;
  return out;
}

Polynomial weighted_density(const DunklContext& ctx, const Integrand& h) {
  if (!ctx.k.has_polynomial_weight())
    throw PreconditionError("exact integration needs a nonnegative integer multiplicity (2k even)");
  RationalSection p = h.density * RationalSection(ctx.system, weight_poly(*ctx.system, ctx.k));
  if (!p.is_polynomial()) throw PreconditionError("integrand keeps wall poles after multiplying by the weight");
  return p.num();
}

void require_integrable(const Multiplicity& k) {
  for (const auto& v : k.values())
    if (v <= make_rational(-1, 2)) throw PreconditionError("Monte Carlo integration needs k > -1/2");
}

}  // namespace

// ---------------------------------------------------------------------------
// Integrands

void Integrand::add_pair(const RationalSection& a, const RationalSection& b, const FieldElem& sign) {
  if (a.is_zero() || b.is_zero()) return;
  density += a * b.conj() * sign;
}

void Integrand::add_fields(const VectorField& a, const VectorField& b, const FieldElem& sign) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product of fields with different dimensions");
  for (std::size_t i = 0; i < a.size(); ++i) add_pair(a[i], b[i], sign);
}

ExactIntegral integrate_exact(const DunklContext& ctx, const Integrand& h) {
  const RootSystemA& rs = *ctx.system;
  const int n = rs.rank();
  Polynomial p = weighted_density(ctx, h);
  MomentTable& table = moment_table(rs);
  FieldElem e;
  for (const auto& [m, c] : p.terms()) {
    const Rational& mom = table.moment(m);
    if (sgn(mom) != 0) e += c * FieldElem(mom);
  }
  // int_V h exp(-2|x|^2) dx = (pi/2)^{n/2} E[h]
  return {e * sqrt_half_power(n), n};
}

ExactIntegral integrate_exact_orthonormal(const DunklContext& ctx, const Integrand& h) {
  const RootSystemA& rs = *ctx.system;
  const int n = rs.rank();
  Polynomial p = weighted_density(ctx, h);
  OrthonormalBasis basis = OrthonormalBasis::standard(rs);
  // x_i = sum_a t_a u_a[i]
  std::vector<Polynomial> lin;
  for (int i = 0; i < rs.ambient_dim(); ++i) {
    std::vector<FieldElem> coeffs;
    for (int a = 0; a < n; ++a) coeffs.push_back(basis[a][static_cast<std::size_t>(i)]);
    lin.push_back(Polynomial::linear(n, coeffs));
  }
  std::vector<std::vector<Polynomial>> powers(lin.size());
  auto power_of = [&](int i, int e) -> const Polynomial& {
    auto& pw = powers[static_cast<std::size_t>(i)];
    if (pw.empty()) pw.push_back(Polynomial::constant(n, FieldElem::one()));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * lin[static_cast<std::size_t>(i)]);
    return pw[static_cast<std::size_t>(e)];
  };
  PolyAccumulator acc(n);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (int i = 0; i < rs.ambient_dim(); ++i)
      if (m.exponent(i) > 0) term = term * power_of(i, m.exponent(i));
    acc.add(term);
  }
  Polynomial q = acc.finish();
  // int t^m exp(-2|t|^2) dt = 2^{-(|m|+n)/2} int t^m exp(-|t|^2) dt
  FieldElem total;
  for (const auto& [m, c] : q.terms()) {
    auto exps = m.exponents(n);
    ExactIntegral g = gaussian_moment(exps);
    if (g.is_zero()) continue;
    Rational scale = Rational(1) / Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(m.degree() / 2));
    total += c * g.coefficient * FieldElem(scale);
  }
  return {total * sqrt_half_power(n), n};
}

namespace {

// Double-precision image of a section for fast repeated evaluation.
struct CompiledSection {
  int nvars = 0;
  std::vector<std::pair<std::array<std::uint8_t, Monomial::kMaxVars>, std::complex<double>>> terms;
  std::vector<std::pair<int, int>> den;  // (root, exponent)

  explicit CompiledSection(const RationalSection& s) : nvars(s.nvars()) {
    for (const auto& [m, c] : s.num().terms()) {
      std::array<std::uint8_t, Monomial::kMaxVars> e{};
      for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(m.exponent(i));
      terms.emplace_back(e, c.approx());
    }
    for (std::size_t a = 0; a < s.den().size(); ++a)
      if (s.den()[a] > 0) den.emplace_back(static_cast<int>(a), s.den()[a]);
  }

  std::complex<double> eval(const RootSystemA& rs, std::span<const double> x) const {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms) {
      double v = 1.0;
      for (int i = 0; i < nvars; ++i)
        for (int t = 0; t < e[static_cast<std::size_t>(i)]; ++t) v *= x[static_cast<std::size_t>(i)];
      sum += c * v;
    }
    for (const auto& [a, k] : den) {
      double l = pairing(rs, a, x);
      for (int t = 0; t < k; ++t) sum /= l;
    }
    return sum;
  }
};

}  // namespace

MCEstimate integrate_mc(const DunklContext& ctx, const Integrand& h, std::uint64_t samples, std::uint64_t seed) {
  require_integrable(ctx.k);
  if (samples < 2) throw std::invalid_argument("Monte Carlo needs at least two samples");
  const RootSystemA& rs = *ctx.system;
  const int n = rs.rank();
  const int amb = rs.ambient_dim();
  CompiledSection f(h.density);
  OrthonormalBasis basis = OrthonormalBasis::standard(rs);
  std::vector<double> u(static_cast<std::size_t>(n * amb));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < amb; ++i) u[static_cast<std::size_t>(a * amb + i)] = basis[a][static_cast<std::size_t>(i)].approx().real();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 0.5);  // variance 1/4 per orthonormal coordinate
  std::vector<double> t(static_cast<std::size_t>(n));
  std::vector<double> x(static_cast<std::size_t>(amb));
  // Welford accumulators for real and imaginary parts.
  double mr = 0, sr = 0, mi = 0, si = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& v : t) v = normal(rng);
    std::fill(x.begin(), x.end(), 0.0);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < amb; ++i) x[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(a)] * u[static_cast<std::size_t>(a * amb + i)];
    std::complex<double> y = f.terms.empty() ? 0.0 : f.eval(rs, x) * weight_eval(rs, ctx.k, x);
    const double k1 = static_cast<double>(s + 1);
    double dr = y.real() - mr;
    mr += dr / k1;
    sr += dr * (y.real() - mr);
    double di = y.imag() - mi;
    mi += di / k1;
    si += di * (y.imag() - mi);
  }
  const double scale = std::pow(std::numbers::pi / 2.0, n / 2.0);
  const double nn = static_cast<double>(samples);
  MCEstimate out;
  out.mean = scale * mr;
  out.mean_imag = scale * mi;
  out.std_error = scale * std::sqrt(sr / (nn - 1.0) / nn);
  out.std_error_imag = scale * std::sqrt(si / (nn - 1.0) / nn);
  out.samples = samples;
  out.seed = seed;
  return out;
}

ExactIntegral inner_product_exact(const DunklContext& ctx, const GaussianTestFn& f, const GaussianTestFn& g) {
  Integrand h(ctx.system);
  h.add_pair(RationalSection(ctx.system, f.poly), RationalSection(ctx.system, g.poly));
  return integrate_exact(ctx, h);
}

MCEstimate inner_product_mc(const DunklContext& ctx, const GaussianTestFn& f, const GaussianTestFn& g,
                            std::uint64_t samples, std::uint64_t seed) {
  Integrand h(ctx.system);
  h.add_pair(RationalSection(ctx.system, f.poly), RationalSection(ctx.system, g.poly));
  return integrate_mc(ctx, h, samples, seed);
}

// ---------------------------------------------------------------------------
// Damped operators

namespace {

RationalSection x_dot(const RootSystemPtr& rs, const Point& xi) {
  return RationalSection(rs, Polynomial::linear(rs->ambient_dim(), xi));
}

}  // namespace

RationalSection damped_derivative(const DunklContext& ctx, const Point& xi, const RationalSection& p) {
  return directional_derivative(xi, p) - x_dot(ctx.system, xi) * p * FieldElem(2L);
}

RationalSection damped_dunkl(const DunklContext& ctx, const Point& xi, const RationalSection& p) {
  return dunkl_apply(ctx, xi, p) - x_dot(ctx.system, xi) * p * FieldElem(2L);
}

RationalSection damped_drift(const DunklContext& ctx, const Point& xi, const RationalSection& p) {
  return drift_apply(ctx, xi, p) - x_dot(ctx.system, xi) * p * FieldElem(2L);
}

VectorField damped_twisted_dunkl(const DunklContext& ctx, const Representation& rho, const Point& xi,
                                 const VectorField& p) {
  VectorField out = twisted_dunkl_apply(ctx, rho, xi, p);
  RationalSection lin = x_dot(ctx.system, xi) * FieldElem(2L);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= lin * p[i];
  return out;
}

VectorField damped_dirac(const DiracContext& dctx, const VectorField& f) {
  VectorField out = dirac_dunkl_apply(dctx, f);
  const FieldMatrix id = FieldMatrix::identity(static_cast<std::size_t>(dctx.rho.dim()));
  for (int a = 0; a < dctx.gens.n(); ++a) {
    RationalSection lin = x_dot(dctx.dunkl.system, dctx.basis[a]) * FieldElem(2L);
    VectorField ef = apply_matrix(dctx.gens.e(a).kron(id), f);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= lin * ef[i];
  }
  return out;
}

const char* to_string(SkewOperator op) {
  switch (op) {
    case SkewOperator::drift:
      return "drift";
    case SkewOperator::dunkl:
      return "dunkl";
    case SkewOperator::twisted:
      return "twisted";
    case SkewOperator::dirac:
      return "dirac";
  }
  return "?";
}

Integrand adjoint_integrand(const DunklContext& ctx, const Point& xi, const GaussianTestFn& f, const GaussianTestFn& g) {
  const RootSystemPtr& rs = ctx.system;
  RationalSection fs(rs, f.poly);
  RationalSection gs(rs, g.poly);
  RationalSection grad_xi(rs);
  auto grad = grad_log_weight(rs, ctx.k);
  for (std::size_t i = 0; i < grad.size(); ++i)
    if (!xi[i].is_zero()) grad_xi += grad[i] * xi[i];
  Integrand h(rs);
  h.add_pair(damped_derivative(ctx, xi, fs), gs);
  h.add_pair(fs, -damped_derivative(ctx, xi, gs) - grad_xi * gs, FieldElem(-1L));
  return h;
}

Integrand skew_integrand(const DunklContext& ctx, SkewOperator op, const Point& xi, const GaussianTestFn& f,
                         const GaussianTestFn& g) {
  const RootSystemPtr& rs = ctx.system;
  RationalSection fs(rs, f.poly);
  RationalSection gs(rs, g.poly);
  auto apply = [&](const RationalSection& p) {
    switch (op) {
      case SkewOperator::drift:
        return damped_drift(ctx, xi, p);
      case SkewOperator::dunkl:
        return damped_dunkl(ctx, xi, p);
      default:
        throw std::invalid_argument("skew_integrand handles the scalar drift and Dunkl operators");
    }
  };
  Integrand h(rs);
  h.add_pair(apply(fs), gs);
  h.add_pair(fs, apply(gs));
  return h;
}

Integrand twisted_skew_integrand(const DunklContext& ctx, const Representation& rho, const Point& xi,
                                 const VectorField& f, const VectorField& g) {
  Integrand h(ctx.system);
  h.add_fields(damped_twisted_dunkl(ctx, rho, xi, f), g);
  h.add_fields(f, damped_twisted_dunkl(ctx, rho, xi, g));
  return h;
}

Integrand dirac_skew_integrand(const DiracContext& dctx, const VectorField& f, const VectorField& g) {
  Integrand h(dctx.dunkl.system);
  h.add_fields(damped_dirac(dctx, f), g);
  h.add_fields(f, damped_dirac(dctx, g));
  return h;
}

Integrand dirac_symmetry_integrand(const DiracContext& dctx, const VectorField& f, const VectorField& g) {
  Integrand h(dctx.dunkl.system);
  h.add_fields(damped_dirac(dctx, f), g);
  h.add_fields(f, damped_dirac(dctx, g), FieldElem(-1L));
  return h;
}

bool Residual::vanishes(double sigmas) const { return exact_path ? exact.is_zero() : mc.within(0.0, sigmas); }

std::string Residual::to_string() const { return exact_path ? exact.to_string() : mc.to_string(); }

Residual evaluate_residual(const DunklContext& ctx, const Integrand& h, std::uint64_t mc_samples, std::uint64_t seed) {
  Residual r;
  if (ctx.k.has_polynomial_weight()) {
    r.exact_path = true;
    r.exact = integrate_exact(ctx, h);
  } else {
    r.exact_path = false;
    r.mc = integrate_mc(ctx, h, mc_samples, seed);
  }
  return r;
}

}  // namespace ddk

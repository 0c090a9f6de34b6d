#pragma once

// Weighted inner products over all of V for Gaussian-damped polynomials,
//   <f G, g G>_k = int_V f conj(g) delta_k(x) exp(-2|x|^2) dx,  G = exp(-|x|^2),
// evaluated exactly (Gaussian moments, for nonnegative integer k) or by
// Monte Carlo (any k > -1/2), plus the adjointness residuals built on them.

#include "ddk/dirac.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ddk {

/// c * pi^{p/2}
struct ExactIntegral {
  FieldElem coefficient;
  int twice_pi_power = 0;

  bool is_zero() const { return coefficient.is_zero(); }
  std::complex<double> approx() const;
  /// Adds like powers; a zero operand adopts the other's power.
  ExactIntegral operator+(const ExactIntegral& o) const;
  ExactIntegral operator-(const ExactIntegral& o) const;
  bool operator==(const ExactIntegral& o) const;
  /// e.g. `sqrt(2)/4*pi^(1/2)`, or `0`.
  std::string to_string() const;
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double mean_imag = 0.0;
  double std_error_imag = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  /// |mean - target| <= sigmas * std_error on both real and imaginary parts.
  bool within(std::complex<double> target, double sigmas = 4.0) const;
  std::string to_string() const;
};

/// int t^m exp(-|t|^2) dt over R^n: prod_i mu(m_i), mu(odd) = 0,
/// mu(2j) = (2j-1)!! sqrt(pi) / 2^j.
ExactIntegral gaussian_moment(std::span<const int> exponents);

/// A polynomial times the implicit factor exp(-|x|^2), in ambient coordinates.
struct GaussianTestFn {
  Polynomial poly;
};

/// The integrand sum_i sign_i * a_i * conj(b_i), with the weight and the
/// combined Gaussian exp(-2|x|^2) implicit.
struct Integrand {
  RootSystemPtr system;
  RationalSection density;  // sum of a_i conj(b_i)

  explicit Integrand(RootSystemPtr rs) : system(rs), density(rs) {}
  void add_pair(const RationalSection& a, const RationalSection& b, const FieldElem& sign = FieldElem::one());
  void add_fields(const VectorField& a, const VectorField& b, const FieldElem& sign = FieldElem::one());
};

/// Exact path: requires nonnegative integer k and a density whose poles are
/// cancelled by delta_k; throws PreconditionError otherwise.
ExactIntegral integrate_exact(const DunklContext& ctx, const Integrand& h);
/// Same integral through substitution into orthonormal coordinates and
/// products of one-dimensional moments (independent cross-check route).
ExactIntegral integrate_exact_orthonormal(const DunklContext& ctx, const Integrand& h);
/// Importance sampling from the Gaussian factor; requires k > -1/2.
MCEstimate integrate_mc(const DunklContext& ctx, const Integrand& h, std::uint64_t samples, std::uint64_t seed);

ExactIntegral inner_product_exact(const DunklContext& ctx, const GaussianTestFn& f, const GaussianTestFn& g);
MCEstimate inner_product_mc(const DunklContext& ctx, const GaussianTestFn& f, const GaussianTestFn& g,
                            std::uint64_t samples, std::uint64_t seed);

/// Polynomial parts of operators applied to damped functions:
/// Op(p G) = G * (Op p - 2 <x,xi> p).
RationalSection damped_derivative(const DunklContext& ctx, const Point& xi, const RationalSection& p);
RationalSection damped_dunkl(const DunklContext& ctx, const Point& xi, const RationalSection& p);
RationalSection damped_drift(const DunklContext& ctx, const Point& xi, const RationalSection& p);
VectorField damped_twisted_dunkl(const DunklContext& ctx, const Representation& rho, const Point& xi,
                                 const VectorField& p);
/// D(F G) = G * (D F - 2 sum_a <x,u_a> (e_a (x) I) F)
VectorField damped_dirac(const DiracContext& dctx, const VectorField& f);

enum class SkewOperator { drift, dunkl, twisted, dirac };
const char* to_string(SkewOperator op);

/// <d_xi f, g> - <f, (-d_xi - <grad log delta_k, xi>) g>
Integrand adjoint_integrand(const DunklContext& ctx, const Point& xi, const GaussianTestFn& f, const GaussianTestFn& g);
/// <Op f, g> + <f, Op g> for scalar operators.
Integrand skew_integrand(const DunklContext& ctx, SkewOperator op, const Point& xi, const GaussianTestFn& f,
                         const GaussianTestFn& g);
/// <T^rho_xi F, G> + <F, T^rho_xi G> with the C^d inner product.
Integrand twisted_skew_integrand(const DunklContext& ctx, const Representation& rho, const Point& xi,
                                 const VectorField& f, const VectorField& g);
/// <D F, G> + <F, D G> with the spinor (x) C^d inner product.
Integrand dirac_skew_integrand(const DiracContext& dctx, const VectorField& f, const VectorField& g);
/// <D F, G> - <F, D G>. With anti-Hermitian e_a and skew T_{u_a} the
/// products e_a T_{u_a} are symmetric, so this is the residual that vanishes.
Integrand dirac_symmetry_integrand(const DiracContext& dctx, const VectorField& f, const VectorField& g);

/// Either integration path, chosen by the multiplicity.
struct Residual {
  bool exact_path = true;
  ExactIntegral exact;
  MCEstimate mc;
  bool vanishes(double sigmas = 4.0) const;
  std::string to_string() const;
};

Residual evaluate_residual(const DunklContext& ctx, const Integrand& h, std::uint64_t mc_samples, std::uint64_t seed);

}  // namespace ddk

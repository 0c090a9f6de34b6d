#pragma once

// Scalar Dunkl operators, the drift-only operator, and the Dunkl Laplacian.

#include "ddk/polyring.hpp"

#include <vector>

namespace ddk {

struct DunklContext {
  RootSystemPtr system;
  Multiplicity k;

  DunklContext(RootSystemPtr rs, Multiplicity mult);
  DunklContext(RootSystemPtr rs, const Rational& k_value);
};

/// Orthonormal basis of V with exact entries.
class OrthonormalBasis {
 public:
  /// u_a = (e_1 + ... + e_a - a e_{a+1}) / sqrt(a(a+1)); on the line u = (1).
  static OrthonormalBasis standard(const RootSystemA& rs);
  /// Image of another basis under w (orthogonal maps preserve orthonormality).
  static OrthonormalBasis transformed(const OrthonormalBasis& b, const GroupElement& w);
  /// u_a -> sign[a] * u_a.
  static OrthonormalBasis flipped(const OrthonormalBasis& b, const std::vector<int>& signs);
  explicit OrthonormalBasis(std::vector<Point> vectors);

  int size() const { return static_cast<int>(u_.size()); }
  const Point& operator[](int a) const { return u_.at(static_cast<std::size_t>(a)); }
  const std::vector<Point>& vectors() const { return u_; }
  /// <u_a,u_b> = delta_ab exactly and each u_a lies in V.
  bool is_orthonormal(const RootSystemA& rs) const;

 private:
  std::vector<Point> u_;
};

/// Throws PreconditionError unless xi is in V with the right dimension.
void require_direction(const RootSystemA& rs, const Point& xi);

/// T_xi f = d_xi f + sum_alpha k(alpha) <alpha,xi> (f - f o s_alpha) / <alpha,x>
RationalSection dunkl_apply(const DunklContext& ctx, const Point& xi, const RationalSection& f);

/// d_xi f + sum_alpha k(alpha) <alpha,xi> / <alpha,x> * f (no reflections).
RationalSection drift_apply(const DunklContext& ctx, const Point& xi, const RationalSection& f);

/// sum_a T_{u_a} T_{u_a} f
RationalSection dunkl_laplacian(const DunklContext& ctx, const OrthonormalBasis& basis, const RationalSection& f);

/// sum_{a,b} (G^{-1})_{ab} T_{v_a} T_{v_b} f over the simple roots v_a with
/// Gram matrix G; rational coefficients only.
RationalSection dunkl_laplacian_gram(const DunklContext& ctx, const RationalSection& f);

/// sum_a d_{u_a} d_{u_a} f
RationalSection flat_laplacian(const OrthonormalBasis& basis, const RationalSection& f);

/// T_xi T_eta f - T_eta T_xi f
RationalSection commutator(const DunklContext& ctx, const Point& xi, const Point& eta, const RationalSection& f);

}  // namespace ddk

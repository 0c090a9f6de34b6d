#pragma once

// Dirac-Dunkl operator D = sum_a (e_a (x) I) T^rho_{u_a} on fields valued in
// spinors (x) representation space. Component index is s * d + r for spinor
// index s and representation index r.

#include "ddk/clifford.hpp"
#include "ddk/reps.hpp"

#include <string>

namespace ddk {

struct DiracContext {
  DunklContext dunkl;
  CliffordGens gens;
  OrthonormalBasis basis;
  Representation rho;

  /// Standard orthonormal basis, Clifford rank = rank of the system.
  DiracContext(DunklContext ctx, Representation rep);
  DiracContext(DunklContext ctx, Representation rep, OrthonormalBasis b);

  int components() const { return gens.dim_spinor() * rho.dim(); }
};

VectorField dirac_dunkl_apply(const DiracContext& dctx, const VectorField& f);

/// sum_a T^rho_{u_a} T^rho_{u_a}, applied on each spinor slice.
VectorField twisted_laplacian(const DiracContext& dctx, const VectorField& f);

/// D(D F) + Delta F; zero for scalar representations.
VectorField dirac_square_residual(const DiracContext& dctx, const VectorField& f);

/// The residual split along the algebraic proof of the square identity:
/// D^2 F = sum_a e_a^2 T_a^2 F + sum_{a<b} e_a e_b [T_a, T_b] F.
struct SquareDecomposition {
  VectorField anticommutator_part;  // sum_a (e_a^2 (x) I) T_a^2 F + Delta F
  VectorField commutator_part;      // sum_{a<b} (e_a e_b (x) I) [T_a, T_b] F
  VectorField residual;             // D(D F) + Delta F
  /// anticommutator_part + commutator_part == residual
  bool consistent() const;
};
SquareDecomposition decompose_square(const DiracContext& dctx, const VectorField& f);

/// Orthogonal change of basis with an exact spin lift S satisfying
/// S (sum_a R_ab e_a) S^{-1} = e_b, where u'_a = sum_b R_ab u_b.
struct BasisChange {
  std::string label;
  OrthonormalBasis basis;
  FieldMatrix lift;
};

/// Rotation by pi in the (a,b) coordinate plane: u_a, u_b -> -u_a, -u_b, lift e_a e_b.
BasisChange plane_rotation_pi(const DiracContext& dctx, int a, int b);
/// Rotation by pi/2 in the (a,b) plane: u_a -> u_b, u_b -> -u_a, lift (1 +- e_a e_b)/sqrt(2).
BasisChange plane_rotation_quarter(const DiracContext& dctx, int a, int b);

/// True when the lift intertwines the Clifford generators for the change.
bool lift_intertwines(const DiracContext& dctx, const BasisChange& change);

/// D' F == S^{-1} D (S F), where D' uses the changed basis.
bool basis_invariance_check(const DiracContext& dctx, const VectorField& f, const BasisChange& change);

}  // namespace ddk

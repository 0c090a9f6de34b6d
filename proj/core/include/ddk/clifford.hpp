#pragma once

// Complex Clifford generators e_1..e_n with e_a e_b + e_b e_a = -2 delta_ab,
// realized as i times Hermitian tensor-product gamma matrices, and the flat
// Dirac operator on spinor fields.

#include "ddk/dunkl.hpp"
#include "ddk/fields.hpp"

#include <string>
#include <vector>

namespace ddk {

class CliffordGens {
 public:
  /// Throws std::logic_error if the constructed matrices fail the relations.
  explicit CliffordGens(int n);

  int n() const { return n_; }
  /// 2^ceil(n/2)
  int dim_spinor() const { return dim_; }
  const FieldMatrix& e(int a) const { return e_.at(static_cast<std::size_t>(a)); }

 private:
  int n_;
  int dim_;
  std::vector<FieldMatrix> e_;
};

struct CliffordCheck {
  bool anticommutation = true;  // e_a e_b + e_b e_a = -2 delta_ab I
  bool anti_hermitian = true;   // e_a^dagger = -e_a
  std::string failure;
  bool ok() const { return anticommutation && anti_hermitian; }
};

CliffordCheck check_relations(const CliffordGens& gens);

/// Hermitian gamma_a with gamma_a gamma_b + gamma_b gamma_a = 2 delta_ab.
std::vector<FieldMatrix> hermitian_gammas(int n);

/// D F = sum_a e_a d_{u_a} F
SpinorField flat_dirac_apply(const CliffordGens& gens, const OrthonormalBasis& basis, const SpinorField& f);

}  // namespace ddk

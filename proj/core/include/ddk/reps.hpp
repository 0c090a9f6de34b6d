#pragma once

// Unitary representations of W, the representation-twisted Dunkl operator,
// and equivariance (glue rule) checks for vector-valued fields.

#include "ddk/dunkl.hpp"
#include "ddk/fields.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ddk {

class Representation {
 public:
  /// `trivial`, `sign`, `irrep2d` (A2 only) or `permutation`.
  static Representation builtin(std::string_view name, const RootSystemPtr& rs);
  static const std::vector<std::string>& builtin_names();

  /// Images of the simple reflections. Throws std::invalid_argument unless
  /// each image is unitary and an involution and the braid relations hold.
  Representation(std::string name, RootSystemPtr rs, std::vector<FieldMatrix> generators);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const RootSystemPtr& system() const { return rs_; }
  const FieldMatrix& generator(int g) const { return gens_.at(static_cast<std::size_t>(g)); }
  /// rho(w) as the product of generator images along the reduced word.
  FieldMatrix of(const GroupElement& w) const;
  /// rho(s_alpha), obtained by conjugating a simple reflection along a word.
  const FieldMatrix& of_reflection(int root) const { return reflections_.at(static_cast<std::size_t>(root)); }

 private:
  std::string name_;
  RootSystemPtr rs_;
  int dim_ = 1;
  std::vector<FieldMatrix> gens_;
  std::vector<FieldMatrix> reflections_;
};

/// Word whose product is s_alpha: s_i s_{i+1} ... s_{j-1} ... s_{i+1} s_i.
std::vector<int> reflection_word(const RootSystemA& rs, int root);

/// d_xi Phi + sum_alpha k(alpha) <alpha,xi>/<alpha,x> (Phi - rho(s_alpha) Phi o s_alpha)
VectorField twisted_dunkl_apply(const DunklContext& ctx, const Representation& rho, const Point& xi,
                                const VectorField& phi);

/// Phi(w x) == rho(w) Phi(x) as sections.
bool check_equivariance(const Representation& rho, const VectorField& phi, const GroupElement& w);
/// Equivariance under every simple generator (hence all of W).
bool is_equivariant(const Representation& rho, const VectorField& phi);

/// sum_w rho(w)^{-1} psi(w x); always equivariant.
VectorField equivariant_projection(const Representation& rho, const VectorField& psi);

/// (T_{w xi} Phi)(w x) == rho(w) (T_xi Phi)(x): the twisted operators form an
/// equivariant frame when Phi is equivariant.
bool check_frame_equivariance(const DunklContext& ctx, const Representation& rho, const Point& xi,
                              const VectorField& phi, const GroupElement& w);

struct IntegrityReport {
  bool unitary = true;
  bool involutions = true;
  bool braid = true;
  bool homomorphism = true;
  int pairs_checked = 0;
  std::string failure;  // first failing relation, empty when all hold
  bool ok() const { return unitary && involutions && braid && homomorphism; }
};

/// Exhaustive unitarity over W (rank <= exhaustive_rank) plus `pairs` random
/// homomorphism checks rho(w1 w2) = rho(w1) rho(w2).
IntegrityReport check_integrity(const Representation& rho, int pairs, std::uint64_t seed, int exhaustive_rank = 4);

}  // namespace ddk

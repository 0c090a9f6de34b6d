#pragma once

// Coordinate-level Calogero-type Dunkl operators for type A, written out
// term by term without calling the generic operator code, and cross-checks
// against the generic twisted Dunkl operator.

#include "ddk/dirac.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ddk {

enum class Variant { a2_trivial, a2_sign, a2_irrep2d, an_trivial, an_sign, an_rep };

const char* to_string(Variant v);
Variant parse_variant(std::string_view name);
const std::vector<Variant>& all_variants();

struct ExplicitOperator {
  Variant variant;
  RootSystemPtr system;
  /// k_ij for i < j (0-based), indexed like the positive roots.
  std::vector<Rational> k;
  /// Direction e_p - e_q (0-based); the A2 variants fix p=0, q=1.
  int p = 0;
  int q = 1;
  /// Required for an_rep.
  std::optional<Representation> rho;

  /// A2 with separate k12, k23, k13.
  static ExplicitOperator a2(Variant v, const Rational& k12, const Rational& k23, const Rational& k13);
  /// A_n with uniform k; an_rep takes the representation.
  static ExplicitOperator an(Variant v, const RootSystemPtr& rs, const Rational& k, int p, int q,
                             std::optional<Representation> rep = std::nullopt);

  int dim() const;
  /// The matching representation for the generic operator.
  Representation generic_rep() const;
};

/// Polynomial components only; throws PreconditionError otherwise.
VectorField explicit_apply(const ExplicitOperator& op, const VectorField& phi);

struct CrosscheckResult {
  Variant variant;
  int trials = 0;
  int passed = 0;
  std::string witness;  // first failing input and residual
  bool ok() const { return passed == trials; }
};

/// explicit_apply - twisted_dunkl_apply on `trials` random polynomial fields.
CrosscheckResult crosscheck_generic(const ExplicitOperator& op, int trials, std::uint64_t seed, int max_degree = 3);

struct HamiltonianReport {
  std::string rep;
  std::vector<std::string> basis;   // polynomial class
  std::vector<std::string> images;  // Delta_k applied to each basis element
  bool square_identity = true;      // D^2 + Delta == 0 on every basis element
  std::string witness;
};

/// Scalar representations only (`trivial` over all monomials, `sign` over
/// antisymmetrized monomials) up to total degree degree_cap.
HamiltonianReport hamiltonian_report(const RootSystemPtr& rs, std::string_view rep, const Rational& k, int degree_cap);

}  // namespace ddk

#pragma once

// Multi-component fields: C^d-valued (representation) and spinor-valued
// functions, stored as one rational section per component.

#include "ddk/polyring.hpp"

#include <string>
#include <vector>

namespace ddk {

using VectorField = std::vector<RationalSection>;
using SpinorField = VectorField;

VectorField zero_field(const RootSystemPtr& rs, int dim);
/// (M Phi)_r = sum_c M_rc Phi_c; throws on dimension mismatch.
VectorField apply_matrix(const FieldMatrix& m, const VectorField& phi);
VectorField compose_group(const GroupElement& w, const VectorField& phi);
VectorField add(const VectorField& a, const VectorField& b);
VectorField sub(const VectorField& a, const VectorField& b);
VectorField scale(const VectorField& a, const FieldElem& s);
bool is_zero(const VectorField& phi);
std::string to_string(const VectorField& phi);

}  // namespace ddk

#pragma once

// Exact forms of the Heckman-Opdam weight and its logarithmic gradient.

#include "ddk/polyring.hpp"

#include <vector>

namespace ddk {

/// prod_alpha <alpha,x>^{2k(alpha)}; requires every k(alpha) to be a
/// nonnegative integer so the absolute value can be dropped. Throws
/// PreconditionError otherwise.
Polynomial weight_poly(const RootSystemA& rs, const Multiplicity& k);

/// grad log delta_k = sum_alpha 2k(alpha) / <alpha,x> * alpha, one section
/// per ambient coordinate.
std::vector<RationalSection> grad_log_weight(const RootSystemPtr& rs, const Multiplicity& k);

}  // namespace ddk

#include "ddk/weight.hpp"

namespace ddk {

Polynomial weight_poly(const RootSystemA& rs, const Multiplicity& k) {
  if (!k.has_polynomial_weight())
    throw PreconditionError("weight polynomial needs nonnegative integer multiplicities");
  Polynomial w = Polynomial::constant(rs.ambient_dim(), FieldElem::one());
  for (int a = 0; a < rs.num_roots(); ++a) {
    long e = 2 * k.value(a).get_num().get_si();
    for (long t = 0; t < e; ++t) w = w.times_root_form(rs.root(a));
  }
  return w;
}

std::vector<RationalSection> grad_log_weight(const RootSystemPtr& rs, const Multiplicity& k) {
  std::vector<RationalSection> grad(static_cast<std::size_t>(rs->ambient_dim()), RationalSection(rs));
  for (int a = 0; a < rs->num_roots(); ++a) {
    if (sgn(k.value(a)) == 0) continue;
    FieldElem c(Rational(2 * k.value(a)));
    auto term = RationalSection::inverse_root_form(rs, a) * c;
    auto alpha = rs->root_vector(a);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 1) grad[i] += term;
      if (alpha[i] == -1) grad[i] -= term;
    }
  }
  return grad;
}

}  // namespace ddk

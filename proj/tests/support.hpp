#pragma once

// Shared fixtures and generators for the unit tests.

#include "ddk/fields.hpp"
#include "ddk/random.hpp"
#include "ddk/rootsys.hpp"

#include <initializer_list>
#include <vector>

namespace ddk::testing {

inline RootSystemPtr system_of_rank(int n) {
  return make_root_system(n == 1 ? RootSystemA::line() : RootSystemA::type_a(n));
}
inline RootSystemPtr line() { return system_of_rank(1); }
inline RootSystemPtr a2() { return system_of_rank(2); }
inline RootSystemPtr a3() { return system_of_rank(3); }

inline Point pt(std::initializer_list<long> v) {
  Point p;
  for (long x : v) p.emplace_back(x);
  return p;
}

inline RationalSection var(const RootSystemPtr& rs, int i) { return RationalSection::variable(rs, i); }
inline RationalSection cst(const RootSystemPtr& rs, const FieldElem& c) { return RationalSection::constant(rs, c); }
inline RationalSection poly(const RootSystemPtr& rs, Polynomial p) { return RationalSection(rs, std::move(p)); }

inline RationalSection random_poly(Sampler& s, const RootSystemPtr& rs, int deg, int terms = 4,
                                   const ScalarOptions& opt = {}) {
  return poly(rs, s.polynomial(rs->ambient_dim(), deg, terms, opt));
}

inline VectorField random_field(Sampler& s, const RootSystemPtr& rs, int dim, int deg, int terms = 3,
                                const ScalarOptions& opt = {}) {
  VectorField f;
  for (int c = 0; c < dim; ++c) f.push_back(random_poly(s, rs, deg, terms, opt));
  return f;
}

// Random point with small integer coordinates off every reflecting wall.
inline Point off_wall_point(Sampler& s, const RootSystemA& rs, int bound = 9) {
  for (;;) {
    Point x;
    for (int i = 0; i < rs.ambient_dim(); ++i) x.emplace_back(static_cast<long>(s.uniform_int(-bound, bound)));
    bool ok = true;
    for (int a = 0; a < rs.num_roots(); ++a) ok = ok && !pairing(rs, a, x).is_zero();
    if (ok) return x;
  }
}

}  // namespace ddk::testing

#include "ddk/dunkl.hpp"
#include "ddk/parse.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace ddk;
using namespace ddk::testing;

namespace {

// T_xi f(x) evaluated pointwise: the derivative at x plus the root sum, with
// f(s_alpha x) taken through reflect() on the point.
FieldElem dunkl_at(const RootSystemA& rs, const Multiplicity& k, const Point& xi, const Polynomial& f, const Point& x) {
  FieldElem out = f.directional_derivative(xi).evaluate(x);
  for (int a = 0; a < rs.num_roots(); ++a) {
    const FieldElem c = FieldElem(k.value(a)) * pairing(rs, a, xi);
    if (c.is_zero()) continue;
    out += c * (f.evaluate(x) - f.evaluate(reflect(rs, a, x))) / pairing(rs, a, x);
  }
  return out;
}

// Closed form of the Dunkl Laplacian:
//   Delta f + sum_alpha k(alpha) (2 d_alpha f / <alpha,x> - |alpha|^2 (f - f o s_alpha) / <alpha,x>^2)
FieldElem laplacian_at(const RootSystemA& rs, const Multiplicity& k, const OrthonormalBasis& b, const Polynomial& f,
                       const Point& x) {
  FieldElem out;
  for (int a = 0; a < b.size(); ++a) out += f.directional_derivative(b[a]).directional_derivative(b[a]).evaluate(x);
  for (int r = 0; r < rs.num_roots(); ++r) {
    Point alpha;
    for (int v : rs.root_vector(r)) alpha.emplace_back(static_cast<long>(v));
    const FieldElem p = pairing(rs, r, x);
    const FieldElem diff = f.evaluate(x) - f.evaluate(reflect(rs, r, x));
    out += FieldElem(k.value(r)) *
           (FieldElem(2L) * f.directional_derivative(alpha).evaluate(x) / p -
            FieldElem(static_cast<long>(rs.root_norm2(r))) * diff / (p * p));
  }
  return out;
}

const std::vector<Rational>& k_grid() {
  static const std::vector<Rational> g{make_rational(0), make_rational(1, 2), make_rational(1), make_rational(2)};
  return g;
}

}  // namespace

TEST(Dunkl, LineExamples) {
  auto rs = line();
  Point xi = pt({1});
  for (const auto& k : k_grid()) {
    DunklContext ctx(rs, k);
    EXPECT_EQ(dunkl_apply(ctx, xi, var(rs, 0)), cst(rs, FieldElem(1 + 2 * k)));
    EXPECT_EQ(dunkl_apply(ctx, xi, cst(rs, 7)), RationalSection(rs));
    EXPECT_EQ(dunkl_apply(ctx, xi, var(rs, 0) * var(rs, 0)), cst(rs, 2) * var(rs, 0));
  }
}

TEST(Drift, Examples) {
  auto l = line();
  DunklContext c1(l, make_rational(3, 2));
  EXPECT_EQ(drift_apply(c1, pt({1}), cst(l, 1)).to_string(), "3/2/x1");

  auto rs = a2();
  const Rational k = make_rational(2, 3);
  DunklContext ctx(rs, k);
  auto f = parse_section(rs, "x1 - x2");
  auto expected = cst(rs, FieldElem(2 + 2 * k)) -
                  cst(rs, FieldElem(k)) * f * RationalSection::inverse_root_form(rs, rs->root_index(1, 2)) +
                  cst(rs, FieldElem(k)) * f * RationalSection::inverse_root_form(rs, rs->root_index(0, 2));
  EXPECT_EQ(drift_apply(ctx, pt({1, -1, 0}), f), expected);
}

TEST(Dunkl, RejectsDirectionsOutsideV) {
  auto rs = a2();
  DunklContext ctx(rs, 1);
  EXPECT_THROW(dunkl_apply(ctx, pt({1, 0, 0}), var(rs, 0)), PreconditionError);
  EXPECT_THROW(dunkl_apply(ctx, pt({1, -1}), var(rs, 0)), PreconditionError);
}

TEST(Dunkl, MatchesPointwiseFormula) {
  Sampler s(101);
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    for (const auto& k : k_grid()) {
      DunklContext ctx(rs, k);
      for (int t = 0; t < 10; ++t) {
        Polynomial f = s.polynomial(rs->ambient_dim(), 4, 4);
        Point xi = s.direction(*rs);
        auto out = dunkl_apply(ctx, xi, RationalSection(rs, f));
        EXPECT_TRUE(out.is_polynomial());
        for (int p = 0; p < 3; ++p) {
          Point x = off_wall_point(s, *rs);
          EXPECT_EQ(evaluate(out, x), dunkl_at(*rs, ctx.k, xi, f, x));
        }
      }
    }
  }
}

TEST(Dunkl, CommutatorVanishes) {
  Sampler s(202);
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    for (const auto& k : k_grid()) {
      DunklContext ctx(rs, k);
      for (int t = 0; t < 8; ++t) {
        auto f = random_poly(s, rs, n == 3 ? 4 : 5);
        Point xi = s.direction(*rs), eta = s.direction(*rs);
        EXPECT_TRUE(commutator(ctx, xi, eta, f).is_zero()) << f.to_string();
        EXPECT_TRUE(commutator(ctx, xi, xi, f).is_zero());
      }
    }
  }
}

// The drift operator is the derivative conjugated by prod <alpha,x>^k, so for
// integer k it satisfies drift(f) * P = d_xi(f * P) with P that product.
TEST(Drift, IsConjugatedDerivative) {
  Sampler s(404);
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    for (long k = 0; k <= 2; ++k) {
      DunklContext ctx(rs, k);
      RationalSection gauge = cst(rs, 1);
      for (int a = 0; a < rs->num_roots(); ++a)
        for (long e = 0; e < k; ++e)
          gauge = gauge * poly(rs, Polynomial::constant(rs->ambient_dim(), FieldElem::one()).times_root_form(rs->root(a)));
      for (int t = 0; t < 5; ++t) {
        auto f = random_poly(s, rs, 3);
        Point xi = s.direction(*rs);
        EXPECT_EQ(drift_apply(ctx, xi, f) * gauge, directional_derivative(xi, f * gauge));
      }
    }
  }
}

TEST(OrthonormalBasis, StandardAndTransformed) {
  for (int n = 1; n <= 6; ++n) {
    auto rs = system_of_rank(n);
    auto b = OrthonormalBasis::standard(*rs);
    EXPECT_EQ(b.size(), n);
    EXPECT_TRUE(b.is_orthonormal(*rs));
    auto w = GroupElement::generator(*rs, 0);
    EXPECT_TRUE(OrthonormalBasis::transformed(b, w).is_orthonormal(*rs));
    std::vector<int> signs(static_cast<std::size_t>(n), -1);
    EXPECT_TRUE(OrthonormalBasis::flipped(b, signs).is_orthonormal(*rs));
  }
  auto rs = a2();
  OrthonormalBasis bad({pt({1, -1, 0}), pt({0, 1, -1})});
  EXPECT_FALSE(bad.is_orthonormal(*rs));
}

TEST(Laplacian, FlatLimitOfSquaredNorm) {
  for (int n = 1; n <= 4; ++n) {
    auto rs = system_of_rank(n);
    DunklContext ctx(rs, 0);
    RationalSection f(rs);
    for (int i = 0; i < rs->ambient_dim(); ++i) f += var(rs, i) * var(rs, i);
    auto b = OrthonormalBasis::standard(*rs);
    EXPECT_EQ(dunkl_laplacian(ctx, b, f), cst(rs, FieldElem(static_cast<long>(2 * n))));
    EXPECT_EQ(flat_laplacian(b, f), cst(rs, FieldElem(static_cast<long>(2 * n))));
    EXPECT_TRUE(dunkl_laplacian(DunklContext(rs, 3), b, cst(rs, 5)).is_zero());
  }
}

TEST(Laplacian, MatchesClosedFormAndIsBasisIndependent) {
  Sampler s(303);
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    auto b = OrthonormalBasis::standard(*rs);
    for (const auto& k : k_grid()) {
      DunklContext ctx(rs, k);
      for (int t = 0; t < 6; ++t) {
        Polynomial f = s.polynomial(rs->ambient_dim(), 4, 4);
        RationalSection fs(rs, f);
        auto lap = dunkl_laplacian(ctx, b, fs);
        Point x = off_wall_point(s, *rs);
        EXPECT_EQ(evaluate(lap, x), laplacian_at(*rs, ctx.k, b, f, x));
        EXPECT_EQ(dunkl_laplacian_gram(ctx, fs), lap);
        auto w = GroupElement::from_word(*rs, std::vector<int>{0});
        if (n >= 2) w = w * GroupElement::generator(*rs, 1);
        EXPECT_EQ(dunkl_laplacian(ctx, OrthonormalBasis::transformed(b, w), fs), lap);
      }
    }
  }
}

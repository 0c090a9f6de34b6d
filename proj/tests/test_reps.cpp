#include "ddk/parse.hpp"
#include "ddk/reps.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace ddk;
using namespace ddk::testing;

namespace {

FieldMatrix mat2(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  return FieldMatrix(2, 2, {a, b, c, d});
}

std::vector<std::string> reps_for(const RootSystemPtr& rs) {
  std::vector<std::string> out{"trivial", "sign", "permutation"};
  if (!rs->is_line() && rs->rank() == 2) out.push_back("irrep2d");
  return out;
}

}  // namespace

TEST(Representation, ReflectionImages) {
  auto rs = a2();
  auto rho = Representation::builtin("irrep2d", rs);
  const FieldElem h(make_rational(1, 2));
  const FieldElem r = FieldElem::sqrt(3) * h;
  // The third reflection obtained by conjugation, compared bit for bit.
  EXPECT_EQ(rho.of_reflection(rs->root_index(0, 2)), mat2(-h, -r, -r, h));
  EXPECT_EQ(rho.of_reflection(rs->root_index(0, 1)), mat2(1L, 0L, 0L, -1L));
  EXPECT_EQ(rho.of_reflection(rs->root_index(1, 2)), mat2(-h, r, r, h));
  EXPECT_EQ(rho.of(GroupElement::reflection(*rs, rs->root_index(0, 2))), mat2(-h, -r, -r, h));

  auto triv = Representation::builtin("trivial", rs);
  for (int a = 0; a < rs->num_roots(); ++a) EXPECT_EQ(triv.of_reflection(a), FieldMatrix::identity(1));

  auto perm = Representation::builtin("permutation", rs);
  FieldMatrix swap12 = FieldMatrix::identity(3);
  swap12(0, 0) = swap12(1, 1) = FieldElem(0L);
  swap12(0, 1) = swap12(1, 0) = FieldElem(1L);
  EXPECT_EQ(perm.of_reflection(rs->root_index(0, 1)), swap12);
}

TEST(Representation, RejectsBadInput) {
  EXPECT_THROW(Representation::builtin("irrep2d", a3()), std::invalid_argument);
  EXPECT_THROW(Representation::builtin("spin", a2()), std::invalid_argument);
  auto rs = a2();
  // Unitary involutions that violate the braid relation.
  std::vector<FieldMatrix> gens{mat2(1L, 0L, 0L, -1L), mat2(0L, 1L, 1L, 0L)};
  EXPECT_THROW(Representation("bad", rs, gens), std::invalid_argument);
  std::vector<FieldMatrix> not_involution{mat2(0L, -1L, 1L, 0L), mat2(0L, -1L, 1L, 0L)};
  EXPECT_THROW(Representation("bad", rs, not_involution), std::invalid_argument);
}

TEST(Representation, IntegrityOfBuiltins) {
  for (int n = 1; n <= 4; ++n) {
    auto rs = system_of_rank(n);
    for (const auto& name : reps_for(rs)) {
      auto rho = Representation::builtin(name, rs);
      auto rep = check_integrity(rho, 100, 99);
      EXPECT_TRUE(rep.ok()) << name << " A" << n << ": " << rep.failure;
      EXPECT_EQ(rep.pairs_checked, 100);
    }
  }
}

// Homomorphism checked over every pair of elements for small groups.
TEST(Representation, HomomorphismExhaustive) {
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    auto group = enumerate_group(*rs);
    for (const auto& name : reps_for(rs)) {
      auto rho = Representation::builtin(name, rs);
      for (const auto& a : group)
        for (const auto& b : group) ASSERT_EQ(rho.of(a * b), rho.of(a) * rho.of(b)) << name;
      for (const auto& a : group) EXPECT_EQ(rho.of(a).adjoint() * rho.of(a), FieldMatrix::identity(rho.dim()));
    }
  }
}

TEST(ReflectionWord, MultipliesToReflection) {
  for (int n = 1; n <= 5; ++n) {
    auto rs = system_of_rank(n);
    for (int a = 0; a < rs->num_roots(); ++a)
      EXPECT_EQ(GroupElement::from_word(*rs, reflection_word(*rs, a)), GroupElement::reflection(*rs, a));
  }
}

TEST(TwistedDunkl, LineSignExamples) {
  auto rs = line();
  auto sign = Representation::builtin("sign", rs);
  DunklContext ctx(rs, 1);
  Point xi = pt({1});
  EXPECT_EQ(twisted_dunkl_apply(ctx, sign, xi, {var(rs, 0)}), VectorField{cst(rs, 1)});
  auto out = twisted_dunkl_apply(ctx, sign, xi, {cst(rs, 1)});
  EXPECT_EQ(to_string(out), "2/x1");
  EXPECT_THROW(twisted_dunkl_apply(ctx, sign, xi, {var(rs, 0), var(rs, 0)}), std::invalid_argument);
}

TEST(TwistedDunkl, TrivialReducesToScalar) {
  Sampler s(5);
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    auto triv = Representation::builtin("trivial", rs);
    DunklContext ctx(rs, make_rational(3, 2));
    for (int t = 0; t < 20; ++t) {
      auto f = random_poly(s, rs, 4);
      Point xi = s.direction(*rs);
      EXPECT_EQ(twisted_dunkl_apply(ctx, triv, xi, {f}), VectorField{dunkl_apply(ctx, xi, f)});
    }
  }
}

// On alternating fields the sign-twisted reflection terms cancel, leaving the
// plain derivative; the scalar operator differs by the doubled drift.
TEST(TwistedDunkl, SignOnAlternatingFields) {
  Sampler s(6);
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    auto sign = Representation::builtin("sign", rs);
    DunklContext ctx(rs, 2);
    RationalSection v = cst(rs, 1);
    for (int a = 0; a < rs->num_roots(); ++a)
      v = v * poly(rs, Polynomial::constant(rs->ambient_dim(), FieldElem::one()).times_root_form(rs->root(a)));
    for (int t = 0; t < 6; ++t) {
      // Symmetrize a random polynomial to get a W-invariant p; then v*p is alternating.
      auto q = random_poly(s, rs, 2);
      RationalSection p(rs);
      for (const auto& w : enumerate_group(*rs)) p += compose_group(w, q);
      Point xi = s.direction(*rs);
      auto alt = twisted_dunkl_apply(ctx, sign, xi, {v * p});
      EXPECT_TRUE(is_equivariant(sign, {v * p}));
      EXPECT_TRUE(alt[0].is_polynomial());
      EXPECT_EQ(alt[0], directional_derivative(xi, v * p));
      // The alternating output agrees with the scalar Dunkl operator on v*p.
      EXPECT_EQ(alt[0], dunkl_apply(ctx, xi, v * p) -
                            [&] {
                              RationalSection corr(rs);
                              for (int a = 0; a < rs->num_roots(); ++a) {
                                const FieldElem c = FieldElem(ctx.k.value(a)) * pairing(*rs, a, xi);
                                corr += cst(rs, c * FieldElem(2L)) * v * p *
                                        RationalSection::inverse_root_form(rs, a);
                              }
                              return corr;
                            }());
    }
  }
}

TEST(Equivariance, Examples) {
  auto rs = a2();
  auto sign = Representation::builtin("sign", rs);
  auto triv = Representation::builtin("trivial", rs);
  auto vdm = parse_section(rs, "(x1-x2)*(x2-x3)*(x1-x3)");
  for (const auto& w : enumerate_group(*rs)) {
    EXPECT_TRUE(check_equivariance(sign, {vdm}, w));
    EXPECT_TRUE(check_equivariance(triv, {parse_section(rs, "x1+x2+x3")}, w));
  }
  EXPECT_FALSE(check_equivariance(triv, {var(rs, 0)}, GroupElement::generator(*rs, 0)));
  EXPECT_FALSE(is_equivariant(sign, {var(rs, 0)}));
}

TEST(Equivariance, ProjectionAndFrame) {
  Sampler s(77);
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    auto group = enumerate_group(*rs);
    for (const auto& name : reps_for(rs)) {
      auto rho = Representation::builtin(name, rs);
      DunklContext ctx(rs, make_rational(1, 2));
      for (int t = 0; t < 3; ++t) {
        auto phi = equivariant_projection(rho, random_field(s, rs, rho.dim(), 2));
        ASSERT_TRUE(is_equivariant(rho, phi)) << name;
        Point xi = s.direction(*rs);
        const auto& w = group[static_cast<std::size_t>(s.uniform_int(0, static_cast<int>(group.size()) - 1))];
        EXPECT_TRUE(check_frame_equivariance(ctx, rho, xi, phi, w)) << name;
      }
    }
  }
}

// Twisted operators for the built-in unitary representations are measured
// here as a regression: every built-in family commutes on random fields.
TEST(TwistedDunkl, BuiltinFamiliesCommute) {
  Sampler s(88);
  for (int n = 1; n <= 3; ++n) {
    auto rs = system_of_rank(n);
    for (const auto& name : reps_for(rs)) {
      auto rho = Representation::builtin(name, rs);
      DunklContext ctx(rs, make_rational(1, 3));
      for (int t = 0; t < 3; ++t) {
        auto phi = random_field(s, rs, rho.dim(), 3);
        Point xi = s.direction(*rs), eta = s.direction(*rs);
        auto lhs = twisted_dunkl_apply(ctx, rho, xi, twisted_dunkl_apply(ctx, rho, eta, phi));
        auto rhs = twisted_dunkl_apply(ctx, rho, eta, twisted_dunkl_apply(ctx, rho, xi, phi));
        EXPECT_TRUE(is_zero(sub(lhs, rhs))) << name;
      }
    }
  }
}

#include "ddk/polyring.hpp"
#include "ddk/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ddk;

namespace {

RootSystemPtr a2() { return make_root_system(RootSystemA::type_a(2)); }
RootSystemPtr a3() { return make_root_system(RootSystemA::type_a(3)); }
RootSystemPtr line() { return make_root_system(RootSystemA::line()); }

RationalSection var(const RootSystemPtr& rs, int i) { return RationalSection::variable(rs, i); }
RationalSection cst(const RootSystemPtr& rs, long c) { return RationalSection::constant(rs, FieldElem(c)); }

Point pt(std::initializer_list<long> v) {
  Point p;
  for (long x : v) p.emplace_back(x);
  return p;
}

RationalSection random_section(Sampler& s, const RootSystemPtr& rs, int deg, int max_pole) {
  Polynomial num = s.polynomial(rs->ambient_dim(), deg, 4);
  std::vector<int> den(static_cast<std::size_t>(rs->num_roots()));
  for (auto& e : den) e = s.uniform_int(0, max_pole);
  return RationalSection(rs, num, den);
}

// Random off-wall point with small integer coordinates.
Point off_wall_point(Sampler& s, const RootSystemA& rs) {
  for (;;) {
    Point x;
    for (int i = 0; i < rs.ambient_dim(); ++i) x.emplace_back(static_cast<long>(s.uniform_int(-9, 9)));
    bool ok = true;
    for (int a = 0; a < rs.num_roots(); ++a) ok = ok && !pairing(rs, a, x).is_zero();
    if (ok) return x;
  }
}

}  // namespace

TEST(Monomial, Packing) {
  std::vector<int> e{2, 0, 5};
  Monomial m(e);
  EXPECT_EQ(m.degree(), 7);
  EXPECT_EQ(m.exponent(2), 5);
  EXPECT_EQ(m.exponents(3), e);
  EXPECT_EQ((m * Monomial::variable(1, 3)).exponent(1), 3);
}

TEST(Polynomial, RingExamples) {
  auto x1 = Polynomial::variable(3, 0);
  auto x2 = Polynomial::variable(3, 1);
  EXPECT_EQ((x1 + x2) * (x1 - x2), x1 * x1 - x2 * x2);
  EXPECT_EQ((x1 + Polynomial(3)), x1);
  EXPECT_EQ((x1 * x1 * x2 * FieldElem(2L) - x2 * FieldElem(make_rational(1, 3))).to_string(), "2*x1^2*x2 - 1/3*x2");
  EXPECT_EQ(Polynomial(3).to_string(), "0");
  EXPECT_EQ((x1 * (FieldElem(1L) + FieldElem::imag_unit())).to_string(), "(1 + i)*x1");
}

TEST(Polynomial, DegreeOverflowIsGuarded) {
  Polynomial p = Polynomial::variable(1, 0);
  for (int i = 0; i < 7; ++i) p = p * p;  // x^128
  EXPECT_THROW(p * p, std::overflow_error);
}

TEST(Polynomial, RootFormDivision) {
  auto x1 = Polynomial::variable(3, 0);
  auto x2 = Polynomial::variable(3, 1);
  Root r{0, 1};
  auto q = (x1 * x1 - x2 * x2).divide_by_root_form(r);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, x1 + x2);
  EXPECT_FALSE((x1 * x1 + x2).divide_by_root_form(r).has_value());
  EXPECT_EQ(x1.times_root_form(r), x1 * x1 - x1 * x2);
}

TEST(Section, ArithmeticExamples) {
  auto rs = a2();
  auto inv = RationalSection::inverse_root_form(rs, rs->root_index(0, 1));
  auto lin = var(rs, 0) - var(rs, 1);
  EXPECT_EQ(inv * lin, cst(rs, 1));
  // randomized-evaluation fallback for the same identity
  Sampler s(11);
  for (int t = 0; t < 5; ++t) {
    Point x = off_wall_point(s, *rs);
    EXPECT_EQ(evaluate(inv * lin, x), FieldElem::one());
  }
  EXPECT_EQ(inv.to_string(), "1/(x1 - x2)");
  EXPECT_EQ((inv * inv * FieldElem(-2L)).to_string(), "-2/(x1 - x2)^2");
}

TEST(Section, DerivativeExamples) {
  auto rs = a2();
  Point xi = pt({1, -1, 0});
  EXPECT_EQ(directional_derivative(xi, var(rs, 0)), cst(rs, 1));
  EXPECT_TRUE(directional_derivative(xi, cst(rs, 4)).is_zero());
  auto inv = RationalSection::inverse_root_form(rs, rs->root_index(0, 1));
  auto expected = RationalSection::inverse_root_form(rs, rs->root_index(0, 1), 2) * FieldElem(-2L);
  EXPECT_EQ(directional_derivative(xi, inv), expected);
}

TEST(Section, DerivativeMatchesFiniteDifferences) {
  Sampler s(99);
  for (auto rs : {line(), a2(), a3()}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto f = random_section(s, rs, 3, 2);
      Point xi = s.direction(*rs);
      auto df = directional_derivative(xi, f);
      Point x = off_wall_point(s, *rs);
      std::vector<double> xd, xid;
      for (auto& c : x) xd.push_back(c.approx().real());
      for (auto& c : xi) xid.push_back(c.approx().real());
      const double h = 1e-5;
      std::vector<double> xp = xd, xm = xd;
      for (std::size_t j = 0; j < xd.size(); ++j) {
        xp[j] += h * xid[j];
        xm[j] -= h * xid[j];
      }
      auto fd = (evaluate_approx(f, xp) - evaluate_approx(f, xm)) / (2 * h);
      auto exact = evaluate(df, x).approx();
      ASSERT_LE(std::abs(fd - exact), 1e-5 * std::max(1.0, std::abs(exact))) << f.to_string();
    }
  }
}

TEST(Section, ComposeExamples) {
  auto rs = a2();
  auto s12 = GroupElement::reflection(*rs, rs->root_index(0, 1));
  EXPECT_EQ(compose_group(s12, var(rs, 0)), var(rs, 1));
  auto f = var(rs, 0) * var(rs, 2) + cst(rs, 3);
  EXPECT_EQ(compose_group(GroupElement::identity(*rs), f), f);
  auto inv = RationalSection::inverse_root_form(rs, rs->root_index(0, 1));
  EXPECT_EQ(compose_group(s12, inv), -inv);
  auto l = line();
  auto s = GroupElement::reflection(*l, 0);
  EXPECT_EQ(compose_group(s, var(l, 0) * var(l, 0) * var(l, 0)), -(var(l, 0) * var(l, 0) * var(l, 0)));
}

TEST(Section, DividedDifferenceExamples) {
  auto rs = a2();
  int a12 = rs->root_index(0, 1);
  EXPECT_EQ(divided_difference(a12, var(rs, 0)), cst(rs, 1));
  EXPECT_TRUE(divided_difference(a12, var(rs, 0) + var(rs, 1)).is_zero());
  EXPECT_EQ(divided_difference(a12, var(rs, 0) * var(rs, 0)), var(rs, 0) + var(rs, 1));
}

TEST(Section, EvaluateExamples) {
  auto rs = a2();
  EXPECT_EQ(evaluate(var(rs, 0) * var(rs, 1), pt({2, 3, -5})), FieldElem(6L));
  auto inv = RationalSection::inverse_root_form(rs, rs->root_index(0, 1));
  EXPECT_THROW(evaluate(inv, pt({1, 1, -2})), PoleError);
  auto q = (var(rs, 0) * var(rs, 0) - var(rs, 1) * var(rs, 1)) * inv;
  EXPECT_TRUE(q.is_polynomial());
  EXPECT_EQ(evaluate(q, pt({3, 1, -4})), FieldElem(4L));
}

TEST(SectionProperties, ExactDivisionSoundness) {
  Sampler s(5);
  for (auto rs : {line(), a2(), a3()}) {
    for (int trial = 0; trial < 60; ++trial) {
      Polynomial p = s.polynomial(rs->ambient_dim(), 5, 6, {.imaginary = true, .radicals = true});
      RationalSection f(rs, p);
      for (int a = 0; a < rs->num_roots(); ++a) {
        auto d = divided_difference(a, f);
        ASSERT_TRUE(d.is_polynomial());
        auto back = RationalSection(rs, d.num().times_root_form(rs->root(a))) +
                    compose_group(GroupElement::reflection(*rs, a), f);
        ASSERT_EQ(back, f);
      }
    }
  }
}

TEST(SectionProperties, LinearityAndLeibniz) {
  Sampler s(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto rs = trial % 2 ? a2() : line();
    auto f = random_section(s, rs, 3, 1);
    auto g = random_section(s, rs, 3, 1);
    Point xi = s.direction(*rs);
    FieldElem c = s.nonzero_scalar({.radicals = true});
    ASSERT_EQ(directional_derivative(xi, f + g * c),
              directional_derivative(xi, f) + directional_derivative(xi, g) * c);
    ASSERT_EQ(directional_derivative(xi, f * g),
              directional_derivative(xi, f) * g + f * directional_derivative(xi, g));
  }
}

TEST(SectionProperties, GroupActionAntiOrder) {
  Sampler s(23);
  auto rs = a3();
  auto group = enumerate_group(*rs);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_section(s, rs, 3, 1);
    const auto& w1 = group[static_cast<std::size_t>(s.uniform_int(0, 23))];
    const auto& w2 = group[static_cast<std::size_t>(s.uniform_int(0, 23))];
    ASSERT_EQ(compose_group(w1, compose_group(w2, f)), compose_group(w2 * w1, f));
    Point x = off_wall_point(s, *rs);
    ASSERT_EQ(evaluate(compose_group(w1, f), x), evaluate(f, w1.apply(x)));
  }
}

TEST(SectionProperties, EvaluationIsHomomorphism) {
  Sampler s(29);
  for (int trial = 0; trial < 100; ++trial) {
    auto rs = trial % 3 == 0 ? line() : a2();
    auto f = random_section(s, rs, 3, 2);
    auto g = random_section(s, rs, 3, 2);
    Point x = off_wall_point(s, *rs);
    ASSERT_EQ(evaluate(f + g, x), evaluate(f, x) + evaluate(g, x));
    ASSERT_EQ(evaluate(f * g, x), evaluate(f, x) * evaluate(g, x));
  }
}

TEST(SectionProperties, NormalFormIsCanonical) {
  // The same rational function built along different routes compares equal.
  Sampler s(31);
  auto rs = a2();
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_section(s, rs, 3, 2);
    auto g = random_section(s, rs, 2, 1);
    auto lhs = (f + g) * g;
    auto rhs = f * g + g * g;
    ASSERT_EQ(lhs, rhs);
    ASSERT_TRUE((lhs - rhs).is_zero());
  }
}

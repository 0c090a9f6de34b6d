#include "ddk/algebra.hpp"
#include "ddk/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ddk;

namespace {

FieldElem sqrt_of(std::uint64_t n) { return FieldElem::sqrt(n); }
const FieldElem kI = FieldElem::imag_unit();

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_EQ(parse_rational("-7"), make_rational(-7));
  EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Squarefree, Split) {
  auto s = split_squarefree(72);
  EXPECT_EQ(s.square_root, 6u);
  EXPECT_EQ(s.squarefree, 2u);
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
}

TEST(FieldElem, AddExamples) {
  EXPECT_EQ((FieldElem(1L) + sqrt_of(3)) + (FieldElem(2L) - sqrt_of(3)), FieldElem(3L));
  FieldElem x = sqrt_of(5) * FieldElem(make_rational(2, 7));
  EXPECT_EQ(x + FieldElem::zero(), x);
  // coefficient oracle: (i sqrt2) + (i sqrt2) has coefficient (0, 2) on radicand 2
  FieldElem s = kI * sqrt_of(2) + kI * sqrt_of(2);
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.terms()[0].radicand, 2u);
  EXPECT_EQ(s.terms()[0].coeff.re, 0);
  EXPECT_EQ(s.terms()[0].coeff.im, 2);
}

TEST(FieldElem, MulExamples) {
  EXPECT_EQ(sqrt_of(3) * sqrt_of(3), FieldElem(3L));
  EXPECT_EQ(sqrt_of(2) * sqrt_of(3), sqrt_of(6));
  EXPECT_EQ(kI * kI, FieldElem(-1L));
  EXPECT_EQ(sqrt_of(6) * sqrt_of(10), FieldElem(2L) * sqrt_of(15));
  EXPECT_EQ(sqrt_of(12), FieldElem(2L) * sqrt_of(3));
  EXPECT_EQ(FieldElem::sqrt(make_rational(3, 4)), sqrt_of(3) * FieldElem(make_rational(1, 2)));
}

TEST(FieldElem, InvExamples) {
  EXPECT_EQ(sqrt_of(2).inv(), sqrt_of(2) * FieldElem(make_rational(1, 2)));
  EXPECT_EQ(sqrt_of(2) * (sqrt_of(2) * FieldElem(make_rational(1, 2))), FieldElem::one());
  EXPECT_EQ((FieldElem(1L) + kI).inv(), (FieldElem(1L) - kI) * FieldElem(make_rational(1, 2)));
  EXPECT_EQ(FieldElem::one().inv(), FieldElem::one());
  EXPECT_THROW(FieldElem::zero().inv(), DivisionByZero);
  FieldElem messy = FieldElem(1L) + sqrt_of(2) + sqrt_of(3) + kI * sqrt_of(5);
  EXPECT_EQ(messy * messy.inv(), FieldElem::one());
}

TEST(FieldElem, ApproxExamples) {
  EXPECT_NEAR(sqrt_of(3).approx().real(), std::sqrt(3.0), 1e-15);
  EXPECT_EQ(FieldElem::zero().approx(), std::complex<double>(0.0, 0.0));
  EXPECT_EQ(kI.approx(), std::complex<double>(0.0, 1.0));
}

TEST(FieldElem, Rendering) {
  EXPECT_EQ(FieldElem(make_rational(3, 2)).to_string(), "3/2");
  EXPECT_EQ((-kI).to_string(), "-i");
  EXPECT_EQ((sqrt_of(3) * FieldElem(make_rational(1, 2))).to_string(), "sqrt(3)/2");
  EXPECT_EQ(FieldElem::zero().to_string(), "0");
}

TEST(FieldElem, ConjExamples) {
  EXPECT_EQ(kI.conj(), -kI);
  EXPECT_EQ(sqrt_of(7).conj(), sqrt_of(7));
}

class FieldAxioms : public ::testing::Test {
 protected:
  FieldElem draw() {
    // radicands drawn from {1,2,3,5,6}
    static constexpr std::uint64_t kRad[] = {1, 2, 3, 5, 6};
    FieldElem x;
    int terms = sampler.uniform_int(1, 3);
    for (int t = 0; t < terms; ++t) {
      FieldElem c = FieldElem::gaussian(sampler.rational(6, 4), sampler.coin() ? sampler.rational(6, 4) : Rational(0));
      x += c * FieldElem::sqrt(kRad[sampler.uniform_int(0, 4)]);
    }
    return x;
  }
  Sampler sampler{20240611};
};

TEST_F(FieldAxioms, RingAxiomsOnRandomTriples) {
  for (int trial = 0; trial < 1000; ++trial) {
    FieldElem a = draw();
    FieldElem b = draw();
    FieldElem c = draw();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, FieldElem::zero());
  }
}

TEST_F(FieldAxioms, InverseOnRandomNonzero) {
  int checked = 0;
  while (checked < 500) {
    FieldElem a = draw();
    if (a.is_zero()) continue;
    ASSERT_EQ(a * a.inv(), FieldElem::one()) << a;
    ++checked;
  }
}

TEST_F(FieldAxioms, ConjugationIsRingInvolution) {
  for (int trial = 0; trial < 300; ++trial) {
    FieldElem a = draw();
    FieldElem b = draw();
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
    ASSERT_EQ((a + b).conj(), a.conj() + b.conj());
    ASSERT_EQ(a.conj().conj(), a);
  }
}

TEST_F(FieldAxioms, ApproxIsHomomorphism) {
  for (int trial = 0; trial < 300; ++trial) {
    FieldElem a = draw();
    FieldElem b = draw();
    std::complex<double> lhs = (a * b).approx();
    std::complex<double> rhs = a.approx() * b.approx();
    ASSERT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(FieldMatrix, InverseAndKron) {
  FieldMatrix m(2, 2, {FieldElem(1L), sqrt_of(3), FieldElem::zero(), FieldElem(2L)});
  EXPECT_EQ(m * m.inverse(), FieldMatrix::identity(2));
  FieldMatrix k = FieldMatrix::identity(2).kron(m);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(3, 3), FieldElem(2L));
  EXPECT_EQ(k(0, 2), FieldElem::zero());
  FieldMatrix singular(2, 2, {FieldElem(1L), FieldElem(2L), FieldElem(2L), FieldElem(4L)});
  EXPECT_THROW(singular.inverse(), DivisionByZero);
  FieldMatrix c(1, 1, {kI});
  EXPECT_EQ(c.adjoint()(0, 0), -kI);
}

#include "ddk/clifford.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace ddk;
using namespace ddk::testing;

TEST(Clifford, RankOneGenerator) {
  CliffordGens g(1);
  const FieldElem i = FieldElem::imag_unit();
  EXPECT_EQ(g.dim_spinor(), 2);
  EXPECT_EQ(g.e(0), FieldMatrix(2, 2, {i, FieldElem(0L), FieldElem(0L), -i}));
}

// Relations recomputed here from the matrices rather than trusted from
// check_relations.
TEST(Clifford, RelationsUpToRankSix) {
  for (int n = 1; n <= 6; ++n) {
    CliffordGens g(n);
    const auto d = static_cast<std::size_t>(g.dim_spinor());
    EXPECT_EQ(d, std::size_t{1} << ((n + 1) / 2));
    EXPECT_TRUE(check_relations(g).ok());
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(g.e(a).adjoint(), g.e(a) * FieldElem(-1L));
      for (int b = 0; b < n; ++b) {
        FieldMatrix ac = g.e(a) * g.e(b) + g.e(b) * g.e(a);
        EXPECT_EQ(ac, FieldMatrix::scalar(d, FieldElem(a == b ? -2L : 0L))) << a << "," << b;
      }
    }
    auto gam = hermitian_gammas(n);
    for (int a = 0; a < n; ++a) EXPECT_EQ(gam[static_cast<std::size_t>(a)].adjoint(), gam[static_cast<std::size_t>(a)]);
  }
  EXPECT_THROW(hermitian_gammas(0), std::invalid_argument);
}

TEST(Clifford, MatrixActionExamples) {
  auto rs = a2();
  CliffordGens g(2);
  Sampler s(3);
  SpinorField f = random_field(s, rs, 2, 3);
  EXPECT_EQ(apply_matrix(FieldMatrix::identity(2), f), f);
  EXPECT_EQ(apply_matrix(g.e(0), apply_matrix(g.e(0), f)), scale(f, FieldElem(-1L)));
  EXPECT_EQ(add(zero_field(rs, 2), f), f);
  EXPECT_THROW(apply_matrix(FieldMatrix::identity(3), f), std::invalid_argument);
}

TEST(FlatDirac, Examples) {
  auto rs = line();
  CliffordGens g(1);
  auto b = OrthonormalBasis::standard(*rs);
  SpinorField f{var(rs, 0), RationalSection(rs)};
  EXPECT_EQ(flat_dirac_apply(g, b, f), (SpinorField{cst(rs, FieldElem::imag_unit()), RationalSection(rs)}));
  EXPECT_TRUE(is_zero(flat_dirac_apply(g, b, {cst(rs, 4), cst(rs, 2)})));
}

// D^2 = -Delta for the flat operator, in two different orthonormal bases.
TEST(FlatDirac, SquaresToMinusLaplacian) {
  Sampler s(13);
  for (int n = 1; n <= 4; ++n) {
    auto rs = system_of_rank(n);
    CliffordGens g(n);
    auto b = OrthonormalBasis::standard(*rs);
    auto b2 = OrthonormalBasis::transformed(b, GroupElement::generator(*rs, n - 1));
    for (int t = 0; t < 5; ++t) {
      ScalarOptions opt;
      opt.imaginary = true;
      SpinorField f = random_field(s, rs, g.dim_spinor(), 3, 3, opt);
      SpinorField lap;
      for (const auto& c : f) lap.push_back(flat_laplacian(b, c));
      EXPECT_EQ(flat_dirac_apply(g, b, flat_dirac_apply(g, b, f)), scale(lap, FieldElem(-1L)));
      EXPECT_EQ(flat_dirac_apply(g, b2, flat_dirac_apply(g, b2, f)), scale(lap, FieldElem(-1L)));
    }
  }
}

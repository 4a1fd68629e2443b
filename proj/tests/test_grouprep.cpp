#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <numeric>

#include "noncong/grouprep.hpp"

using namespace noncong;

namespace {

using Mat = std::array<std::array<std::complex<double>, 3>, 3>;

Mat dense(const MonomialMatrix& m) {
  Mat out{};
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col)
      if (auto e = m.entry(row, col)) out[row][col] = std::polar(1.0, 2 * std::numbers::pi * *e / m.modulus());
  return out;
}

std::complex<double> det3(const Mat& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::vector<CharacterData> characters_up_to(int nmax) {
  std::vector<CharacterData> out;
  for (int n = 1; n <= nmax; ++n)
    for (int r = (n == 1 ? 0 : 1); r < std::max(n, 1); ++r)
      if (n == 1 || std::gcd(r, n) == 1)
        for (int eps : {1, -1}) out.push_back(CharacterData::make(n, r, eps));
  return out;
}

}  // namespace

TEST(CharacterData, Validation) {
  EXPECT_THROW(CharacterData::make(0, 0, 1), Error);
  EXPECT_THROW(CharacterData::make(5, 5, 1), Error);
  EXPECT_THROW(CharacterData::make(6, 2, 1), Error);
  EXPECT_THROW(CharacterData::make(5, 2, 0), Error);
  EXPECT_THROW(CharacterData::make(1, 1, 1), Error);
  EXPECT_NO_THROW(CharacterData::make(1, 0, -1));
}

TEST(MonomialMatrix, ProductAgreesWithDenseProduct) {
  const auto rep = induced_rep(CharacterData::make(7, 3, -1));
  const auto prod = rep.S * rep.T;
  const Mat a = dense(rep.S), b = dense(rep.T), c = dense(prod);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::complex<double> s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      EXPECT_NEAR(std::abs(s - c[i][j]), 0.0, 1e-12);
    }
}

TEST(MonomialMatrix, InverseAndPow) {
  const auto rep = induced_rep(CharacterData::make(11, 4, 1));
  EXPECT_TRUE((rep.T * rep.T.inverse()).is_identity());
  EXPECT_EQ(rep.T.pow(5), rep.T * rep.T * rep.T * rep.T * rep.T);
  EXPECT_EQ(rep.T.pow(-3), rep.T.inverse().pow(3));
}

TEST(GroupRep, DefiningRelationsHold) {
  for (const auto& chi : characters_up_to(12)) {
    const auto rep = induced_rep(chi);
    EXPECT_TRUE(rep.S.pow(2).is_identity()) << chi.n << "," << chi.r << "," << chi.eps;
    EXPECT_TRUE(rep.R.pow(3).is_identity());
    EXPECT_EQ(rep.S * rep.R, rep.T);
  }
}

TEST(GroupRep, TOrderIsTwiceN) {
  for (const auto& chi : characters_up_to(15)) {
    if (chi.n == 1) continue;
    EXPECT_EQ(induced_rep(chi).T.order(), 2 * chi.n);
  }
}

TEST(GroupRep, EigenvaluesSolveCharacteristicPolynomial) {
  for (const auto& chi : characters_up_to(12)) {
    const auto rep = induced_rep(chi);
    for (const auto* m : {&rep.R, &rep.S, &rep.T}) {
      const auto turns = m->eigen_turns();
      ASSERT_EQ(turns.size(), 3u);
      const Mat a = dense(*m);
      std::complex<double> product = 1;
      for (const auto& t : turns) {
        const auto lam = std::polar(1.0, 2 * std::numbers::pi * t.get_d());
        Mat shifted = a;
        for (int i = 0; i < 3; ++i) shifted[i][i] -= lam;
        EXPECT_NEAR(std::abs(det3(shifted)), 0.0, 1e-9);
        product *= lam;
      }
      EXPECT_NEAR(std::abs(product - det3(a)), 0.0, 1e-9);
    }
  }
}

TEST(GroupRep, TEigenvaluesForFiveThreeMinus) {
  const auto chi = CharacterData::make(5, 3, -1);
  const auto turns = induced_rep(chi).T.eigen_turns();
  EXPECT_EQ(turns, (std::vector<Rational>{make_rational(1, 10), make_rational(1, 5), make_rational(7, 10)}));
  const auto d = exponent_data(chi);
  EXPECT_EQ(d.e, -1);
  EXPECT_EQ(d.k0, 2);
  EXPECT_EQ(d.r1, make_rational(1, 10));
  EXPECT_EQ(d.r2, make_rational(1, 5));
  EXPECT_EQ(d.r3, make_rational(7, 10));
}

TEST(GroupRep, ExponentsAreTEigenvalues) {
  for (const auto& chi : characters_up_to(20)) {
    if (is_reducible(chi.n)) continue;
    const auto d = exponent_data(chi);
    std::vector<Rational> mod1;
    for (const auto& x : {d.r1, d.r2, d.r3}) mod1.push_back(x - Rational(floor(x)));
    std::sort(mod1.begin(), mod1.end());
    EXPECT_EQ(mod1, induced_rep(chi).T.eigen_turns());
    // three-dimensional minimal weight: k0 = 12 (r1 + r2 + r3) / 3 - 2
    EXPECT_EQ(Rational(4 * (d.r1 + d.r2 + d.r3) - 2), Rational(d.k0));
  }
}

TEST(GroupRep, ReducibleCasesRejected) {
  EXPECT_THROW(exponent_data(CharacterData::make(1, 0, 1)), Error);
  EXPECT_THROW(exponent_data(CharacterData::make(3, 1, -1)), Error);
  EXPECT_NO_THROW(exponent_data(CharacterData::make(9, 2, -1)));
  try {
    exponent_data(CharacterData::make(3, 2, 1));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::reducible_representation);
  }
}

TEST(GroupRep, CaseClassification) {
  EXPECT_EQ(classify_case(CharacterData::make(5, 3, -1)), ReductionCase::A);
  EXPECT_EQ(classify_case(CharacterData::make(5, 3, 1)), ReductionCase::B);
  EXPECT_EQ(classify_case(CharacterData::make(8, 3, -1)), ReductionCase::C);
  EXPECT_EQ(classify_case(CharacterData::make(8, 3, 1)), ReductionCase::D);
}

TEST(GroupRep, ImageStructureBothRoutesAgree) {
  for (const auto& chi : characters_up_to(12)) {
    const auto s = image_structure(chi);
    const long n = chi.n;
    const std::pair<long, long> expected{n, n % 3 == 0 ? n / 3 : n};
    EXPECT_EQ(s.abelian_invariants, expected) << n << "," << chi.r;
    EXPECT_EQ(s.invariants_enumerated, expected);
    EXPECT_EQ(s.a_order_enumerated, expected.first * expected.second);
    EXPECT_EQ(s.order, 6 * s.a_order_enumerated);
    EXPECT_EQ(s.image_order_enumerated, s.order);
  }
}

TEST(GroupRep, CongruencePredicate) {
  int count = 0;
  for (int n = 1; n <= 60; ++n)
    if (kernel_is_congruence(n)) {
      ++count;
      EXPECT_EQ(24 % n, 0);
    }
  EXPECT_EQ(count, 8);  // 1 2 3 4 6 8 12 24
  EXPECT_THROW(kernel_is_congruence(0), Error);
}

TEST(GroupRep, CurveInvariantsTable) {
  for (int n = 2; n <= 30; ++n)
    for (int eps : {1, -1}) {
      const int r = 1;
      const auto ci = curve_invariants(CharacterData::make(n, r, eps));
      // a hyperelliptic y^2 = f(x), deg f = n, has genus floor((n-1)/2)
      EXPECT_EQ(ci.genus_H0, (n - 1) / 2);
      EXPECT_EQ(ci.cusps_H0, n % 2 == 1 ? 3 : 4);
      EXPECT_EQ(ci.cusps_H1, 2);
      EXPECT_EQ(ci.genus_H1, 0);
      if (n % 2 == 0 && eps == -1) {
        ASSERT_TRUE(ci.genus_H.has_value());
        EXPECT_EQ(*ci.genus_H, n / 4);
        EXPECT_FALSE(ci.hyperelliptic_eq.has_value());
      } else {
        ASSERT_TRUE(ci.hyperelliptic_eq.has_value());
        EXPECT_EQ(ci.hyperelliptic_eq->degree, n);
        EXPECT_EQ(ci.hyperelliptic_eq->constant, 64);
      }
    }
}

#include "lrs/errors.hpp"
#include "lrs/binet.hpp"
#include "lrs/corpus.hpp"
#include "lrs/places.hpp"
#include "lrs/selftest.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace lrs;
using oracle::Dec;

TEST(Weights, ArchimedeanWeightsSumToOne) {
  for (const auto& [name, K] : product_formula_fields()) {
    EXPECT_EQ(weight_sum(K), 1) << name;
    mpq_class total = 0;
    for (const auto& v : archimedean_places(K)) total += v.weight;
    EXPECT_EQ(total, 1) << name;
  }
}

TEST(Places, RealAndComplexCounts) {
  const NumberField gauss(RationalPoly{1, 0, 1});
  const auto v = archimedean_places(gauss);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Place::Kind::Complex);
  EXPECT_EQ(v[0].weight, 1);
  const NumberField cubic(RationalPoly{1, -3, 0, 1});
  EXPECT_EQ(archimedean_places(cubic).size(), 3u);
}

TEST(Places, PrimeSplittingInGaussianIntegers) {
  const NumberField K(RationalPoly{1, 0, 1});
  const auto five = decompose_prime(K, 5);
  EXPECT_TRUE(five.regular);
  EXPECT_EQ(five.ideals.size(), 2u);
  const auto three = decompose_prime(K, 3);
  ASSERT_EQ(three.ideals.size(), 1u);
  EXPECT_EQ(three.ideals[0].f, 2);
  const auto two = decompose_prime(K, 2);
  ASSERT_EQ(two.ideals.size(), 1u);
  EXPECT_EQ(two.ideals[0].e, 2);
}

TEST(Places, FiniteValuesOfRationals) {
  const NumberField Q = NumberField::rationals();
  const auto dec = decompose_prime(Q, 3);
  const auto fa = abs_finite(Q, dec, 0, Q.from_q(mpq_class(18, 5)));
  ASSERT_TRUE(fa.rational().has_value());
  EXPECT_EQ(*fa.rational(), mpq_class(1, 9));
}

TEST(ProductFormula, HoldsForChosenElements) {
  for (const auto& [name, K] : product_formula_fields()) {
    const int d = K.degree();
    std::vector<Elem> xs = {K.from_q(mpq_class(6, 35)), K.from_q(mpq_class(-1024, 3))};
    RationalPoly p;
    for (int i = 0; i < d; ++i) p += RationalPoly::monomial(oracle::frac(3 * i + 1, 2 + i), i);
    xs.push_back(K.reduce(p));
    for (const auto& x : xs) {
      const auto r = product_formula_residual(K, x, 160);
      EXPECT_TRUE(r.value.contains(1)) << name << " " << x.to_string("g");
      EXPECT_LT(r.value.width().to_double(), 1e-25) << name;
    }
  }
}

TEST(Height, RationalVectorIsLargestPrimitiveEntry) {
  const NumberField Q = NumberField::rationals();
  const std::vector<Elem> X = {Q.from_q(mpq_class(1, 6)), Q.from_q(mpq_class(1, 3)), Q.from_q(mpq_class(1, 2))};
  EXPECT_TRUE(oracle::encloses(log_height(Q, X, 200), log(Dec(3))));
}

TEST(Height, GoldenRatioVector) {
  // H(1, phi) = max(1, phi)^{1/2} max(1, |phi'|)^{1/2} = sqrt(phi).
  const NumberField K(RationalPoly{-1, -1, 1});
  const Interval h = height(K, {K.from_q(1), K.gamma()}, 200);
  EXPECT_TRUE(oracle::encloses(h, sqrt((Dec(1) + sqrt(Dec(5))) / 2)));
  // Projective: scaling changes nothing.
  const Interval h2 = height(K, {K.from_q(7), K.mul(K.from_q(7), K.gamma())}, 200);
  EXPECT_TRUE(oracle::encloses(h2, sqrt((Dec(1) + sqrt(Dec(5))) / 2)));
}

TEST(SSet, UnitsOnlyNeedArchimedeanPlaces) {
  const RootSystem fib = root_system(make_spec({1, 1}, {0, 1}));
  const SSet S = build_s_set(fib.K(), fib.roots);
  EXPECT_EQ(S.s, 2u);
  EXPECT_TRUE(S.exact());
  const RootSystem two = root_system(make_spec({2}, {3}));
  EXPECT_EQ(build_s_set(two.K(), two.roots).s, 2u);
  // 2 and -3: the real place plus the primes 2 and 3.
  const RootSystem mixed = root_system(make_spec({-1, 6}, {0, 1}));
  EXPECT_EQ(build_s_set(mixed.K(), mixed.roots).s, 3u);
}

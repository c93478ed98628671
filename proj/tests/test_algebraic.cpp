#include "lrs/algebraic.hpp"
#include "lrs/errors.hpp"
#include "lrs/binet.hpp"
#include "lrs/corpus.hpp"
#include "lrs/factor.hpp"
#include "lrs/splitting_field.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lrs;
using oracle::BigInt;
using oracle::Dec;

namespace {

// Fraction-free Gaussian elimination on a cpp_int matrix.
BigInt bareiss(std::vector<std::vector<BigInt>> M) {
  const std::size_t n = M.size();
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && M[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(M[r], M[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

// Sylvester resultant of two integer polynomials given highest degree first.
BigInt sylvester_resultant(const std::vector<long>& f, const std::vector<long>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, N = m + n;
  std::vector<std::vector<BigInt>> S(N, std::vector<BigInt>(N, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j <= m; ++j) S[r][r + j] = f[j];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j <= n; ++j) S[n + r][r + j] = g[j];
  }
  return bareiss(S);
}

NumberField qsqrt5() { return NumberField(RationalPoly{-1, -1, 1}); }

}  // namespace

TEST(Discriminant, MatchesSylvesterDeterminant) {
  // disc(x^3 - 2) = (-1)^{3} Res(f, f') / 1.
  const BigInt res = sylvester_resultant({1, 0, 0, -2}, {3, 0, 0});
  EXPECT_EQ(-res, BigInt(-108));
  EXPECT_EQ(discriminant(RationalPoly{-2, 0, 0, 1}), mpq_class(-108));
  // x^2 - x - 1: (-1)^1 Res(f, f').
  EXPECT_EQ(-sylvester_resultant({1, -1, -1}, {2, -1}), BigInt(5));
  EXPECT_EQ(discriminant(RationalPoly{-1, -1, 1}), mpq_class(5));
  // x^5 - x - 1 against the library's Euclidean resultant.
  EXPECT_EQ(sylvester_resultant({1, 0, 0, 0, -1, -1}, {5, 0, 0, 0, -1}), oracle::big(resultant(RationalPoly{-1, -1, 0, 0, 0, 1}, RationalPoly{-1, 0, 0, 0, 5}).get_num()));
}

TEST(Factor, RecoversProductOfIrreducibles) {
  const RationalPoly a{-1, 0, 1}, b{-2, 0, 0, 1}, c{1, 0, -10, 0, 1};
  const RationalPoly p = a * b * b * c * RationalPoly::constant(6);
  const Factorization f = factor_rationals(p);
  EXPECT_EQ(f.expand(), p);
  EXPECT_EQ(f.unit, 6);
  // x - 1, x + 1, x^3 - 2 (squared), x^4 - 10x^2 + 1.
  ASSERT_EQ(f.factors.size(), 4u);
  EXPECT_EQ(f.factors[0].first.degree(), 1);
  EXPECT_EQ(f.factors[2].first, b);
  EXPECT_EQ(f.factors[2].second, 2);
  EXPECT_EQ(f.factors[3].first, c);
}

TEST(Factor, SwinnertonDyerIsIrreducibleButSplitsModEveryPrime) {
  // disc = 2^14 3^2; every other prime splits it.
  const RationalPoly sd{1, 0, -10, 0, 1};
  EXPECT_EQ(factor_rationals(sd).factors.size(), 1u);
  for (long q : {5, 7, 11, 13, 101}) EXPECT_GE(factor_mod_prime(sd, q).distinct(), 2u) << q;
}

TEST(Roots, IsolateCubeRootsOfTwo) {
  const RootSet R = RootSet::isolate(RationalPoly{-2, 0, 0, 1}, 128);
  ASSERT_EQ(R.size(), 3u);
  EXPECT_EQ(R.real_count(), 1u);
  const Dec c = cbrt(Dec(2));
  EXPECT_TRUE(oracle::encloses(R.root(0).re, c));
  for (std::size_t k = 1; k < 3; ++k) {
    EXPECT_FALSE(R.is_real(k));
    EXPECT_TRUE(oracle::encloses(R.root(k).re, -c / 2));
    EXPECT_TRUE(oracle::encloses(abs(R.root(k).im), c * sqrt(Dec(3)) / 2));
  }
  EXPECT_EQ(R.conjugate(1), 2u);
}

TEST(NumberField, InverseNormTrace) {
  const NumberField K = qsqrt5();
  const Elem g = K.gamma();
  EXPECT_EQ(K.norm(g), -1);
  EXPECT_EQ(K.trace(g), 1);
  EXPECT_TRUE(K.is_integral(g));
  EXPECT_FALSE(K.is_integral(K.mul(g, K.from_q(mpq_class(1, 2)))));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Elem a = K.reduce(RationalPoly{static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 19});
    if (a.is_zero()) continue;
    EXPECT_EQ(K.mul(a, K.inv(a)), K.from_q(1));
  }
  EXPECT_THROW(K.inv(Elem{}), DomainError);
}

TEST(SplittingField, CubeRootOfTwoHasDegreeSix) {
  const SplittingField F = splitting_field({RationalPoly{-2, 0, 0, 1}});
  EXPECT_EQ(F.degree(), 6);
  EXPECT_EQ(F.r1, 0);
  EXPECT_EQ(F.r2, 3);
  ASSERT_EQ(F.roots.size(), 3u);
  for (const auto& r : F.roots) EXPECT_EQ(F.field.minpoly(r.value), (RationalPoly{-2, 0, 0, 1}));
  EXPECT_EQ(discriminant(F.field.modulus()) != 0, true);
}

TEST(SplittingField, DegreeCapIsEnforced) {
  EXPECT_THROW(splitting_field({RationalPoly{-2, 0, 0, 1}}, 4), CapacityError);
}

TEST(TragerFactor, CubicOverItsOwnField) {
  const NumberField K(RationalPoly{-2, 0, 0, 1});
  const auto fs = factor_over_field(K, kfrom_rational(RationalPoly{-2, 0, 0, 1}));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(kdegree(fs[0].factor) + kdegree(fs[1].factor), 3);
}

TEST(Degeneracy, PlusMinusPairsAreCaught) {
  for (const auto& e : degenerate_examples()) {
    const RootSystem rs = root_system(e.spec);
    const auto w = find_degeneracy(rs.K(), rs.roots);
    ASSERT_TRUE(w.has_value()) << e.name;
    EXPECT_EQ(w->order, 2u) << e.name;
    EXPECT_EQ(rs.K().pow(w->ratio, w->order), rs.K().from_q(1));
  }
  const RootSystem fib = root_system(make_spec({1, 1}, {0, 1}));
  EXPECT_FALSE(find_degeneracy(fib.K(), fib.roots).has_value());
}

TEST(Dominance, GoldenRatioModulus) {
  const RootSystem rs = root_system(make_spec({1, 1}, {0, 1}));
  const DominantRoots d = dominant_roots(rs.K(), rs.roots);
  EXPECT_TRUE(d.unique());
  const Interval m = dominant_modulus(rs.K(), d.modulus_sq, 150);
  EXPECT_TRUE(oracle::encloses(m, (Dec(1) + sqrt(Dec(5))) / 2));
  EXPECT_THROW(dominant_roots(rs.K(), {rs.K().from_q(1)}), AssumptionViolation);
}

TEST(Dominance, GaussianModulusHasRationalSquare) {
  const RootSystem rs = root_system(make_spec({2, -5}, {0, 1}));
  const DominantRoots d = dominant_roots(rs.K(), rs.roots);
  EXPECT_EQ(d.indices.size(), 2u);
  const auto rp = rational_power(rs.K(), d.modulus_sq);
  ASSERT_TRUE(rp.has_value());
  EXPECT_EQ(rp->t, 1u);
  EXPECT_EQ(rp->value, 5);
}

TEST(CompareReal, DecidesEqualityExactly) {
  const NumberField K = qsqrt5();
  const Elem g = K.gamma();
  // gamma^2 = gamma + 1 exactly.
  EXPECT_EQ(compare_real(K, K.mul(g, g), K.add(g, K.from_q(1))), 0);
  // gamma is one of (1 +- sqrt 5)/2 depending on the identity embedding.
  const mpq_class approx = oracle::frac(static_cast<long>(K.embed(g, 0).re.mid_double() * 1e6), 1000000);
  EXPECT_EQ(compare_real(K, g, K.from_q(approx + mpq_class(1, 100000))), -1);
  EXPECT_EQ(compare_real(K, g, K.from_q(approx - mpq_class(1, 100000))), 1);
}

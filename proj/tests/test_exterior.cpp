#include "lrs/exterior.hpp"
#include "lrs/selftest.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace lrs;

namespace {

// Leibniz expansion, independent of the elimination in the library.
mpq_class leibniz(const std::vector<std::vector<mpq_class>>& M) {
  const std::size_t n = M.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= M[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<mpq_class> random_vec(std::mt19937_64& rng, int m) {
  std::vector<mpq_class> v;
  for (int i = 0; i < m; ++i) v.push_back(oracle::frac(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1));
  return v;
}

}  // namespace

TEST(LexSubsets, OrderAndCount) {
  const auto s = lex_subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (std::vector<int>{0, 1}));
  EXPECT_EQ(s[2], (std::vector<int>{0, 3}));
  EXPECT_EQ(s.back(), (std::vector<int>{2, 3}));
  EXPECT_EQ(lex_subsets(5, 0).size(), 1u);
  EXPECT_THROW(lex_subsets(2, 3), DomainError);
}

TEST(Determinant, AgreesWithLeibnizExpansion) {
  std::mt19937_64 rng(3);
  const RationalArith Q;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<mpq_class>> M;
    for (int i = 0; i < n; ++i) M.push_back(random_vec(rng, n));
    if (trial % 7 == 0 && n > 1) M[1] = M[0];
    EXPECT_EQ(determinant(Q, M), leibniz(M));
  }
}

TEST(Wedge, StandardBasisVectors) {
  const RationalArith Q;
  const std::vector<std::vector<mpq_class>> e = {{1, 0, 0}, {0, 1, 0}};
  EXPECT_EQ(wedge(Q, e), (std::vector<mpq_class>{1, 0, 0}));
  const std::vector<std::vector<mpq_class>> f = {{0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(wedge(Q, f), (std::vector<mpq_class>{-1, 0, 0}));
}

TEST(Laplace, IdentitiesHoldExactlyOverQ) {
  std::mt19937_64 rng(11);
  const RationalArith Q;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
    std::vector<std::vector<mpq_class>> xs, ys, full;
    for (int i = 0; i < p; ++i) {
      xs.push_back(random_vec(rng, m));
      ys.push_back(random_vec(rng, m));
    }
    for (int i = 0; i < m; ++i) full.push_back(random_vec(rng, m));
    EXPECT_EQ(laplace_identity_residual(Q, xs, ys), 0);
    EXPECT_EQ(laplace_extension_residual(Q, full), 0);
  }
}

TEST(Laplace, IdentitiesHoldOverQuadraticField) {
  const NumberField K(RationalPoly{-1, -1, 1});
  const FieldArith F{K};
  const Elem g = K.gamma();
  auto e = [&](long a, long b) { return K.add(K.from_q(a), K.mul(K.from_q(b), g)); };
  const std::vector<std::vector<Elem>> xs = {{e(1, 2), e(0, 1), e(-3, 1)}, {e(2, 0), e(1, -1), e(4, 4)}};
  const std::vector<std::vector<Elem>> ys = {{e(5, 1), e(-1, 0), e(0, 2)}, {e(1, 1), e(2, 3), e(-2, 5)}};
  EXPECT_TRUE(laplace_identity_residual(F, xs, ys).is_zero());
  const std::vector<std::vector<Elem>> full = {xs[0], xs[1], ys[0]};
  EXPECT_TRUE(laplace_extension_residual(F, full).is_zero());
}

TEST(Star, TwiceIsSignedIdentity) {
  const RationalArith Q;
  const std::vector<mpq_class> x{1, 2, 3, 4};
  const auto s = star(Q, x);
  EXPECT_EQ(s, (std::vector<mpq_class>{4, -3, 2, -1}));
  auto ss = star(Q, s);
  for (auto& v : ss) v = -v;
  EXPECT_EQ(ss, x);
}

TEST(Magnitude, ExactComparisonsStayExact) {
  const Magnitude a = Magnitude::of_rational(mpq_class(2, 3));
  const Magnitude b = Magnitude::of_rational(mpq_class(4, 9));
  EXPECT_TRUE(certainly_le(b, pow(a, 2)));
  EXPECT_TRUE(certainly_le(pow(a, 2), b));
  EXPECT_FALSE(certainly_le(a, b));
  Magnitude q;
  q.q = 3;
  q.exponent = mpq_class(-1, 2);
  // 3^{-1/2} <= 3/5 since 1/3 <= 9/25.
  EXPECT_TRUE(certainly_le(q, Magnitude::of_rational(mpq_class(3, 5))));
  EXPECT_FALSE(certainly_le(q, Magnitude::of_rational(mpq_class(4, 7))));
}

TEST(Magnitude, WitnessSettlesArchimedeanTie) {
  const NumberField K(RationalPoly{-1, -1, 1});
  const auto places = archimedean_places(K);
  const LocalNorm v(K, places[0]);
  const Elem g = K.gamma();
  // |gamma^2|_v and |gamma + 1|_v are the same number.
  const Magnitude a = v.of(K.mul(g, g));
  const Magnitude b = v.of(K.add(g, K.from_q(1)));
  EXPECT_TRUE(certainly_le(a, b));
  EXPECT_TRUE(certainly_le(b, a));
  EXPECT_TRUE(certainly_le(v.of(g), pow(v.of(g), 1) * Magnitude::of_rational(1)));
}

TEST(HeightsSuite, SmallRunPasses) {
  const auto r = suite_heights(60, 5);
  EXPECT_TRUE(r.passed()) << (r.notes.empty() ? "" : r.notes.back());
}

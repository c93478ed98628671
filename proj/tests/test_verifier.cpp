#include "lrs/errors.hpp"
#include "lrs/analyze.hpp"
#include "lrs/corpus.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace lrs;
using oracle::Dec;

namespace {

std::shared_ptr<const Prepared> prep_of(std::initializer_list<long> c, std::initializer_list<long> i) {
  return std::make_shared<const Prepared>(prepare(make_spec(c, i)));
}

std::vector<std::uint64_t> solve(const Prepared& p, const mpq_class& eps, std::uint64_t n_max, VerifierConfig cfg = {}) {
  GrowthVerifier v(p.K(), p.params->modulus_sq, eps, cfg);
  return enumerate_solutions(p.spec(), v, n_max);
}

}  // namespace

TEST(Verifier, FibonacciMatchesBruteForce) {
  const auto p = prep_of({1, 1}, {0, 1});
  const auto ref = oracle::brute_force({1, 1}, {0, 1}, oracle::golden_ln(), 1, 10, 10000);
  const auto got = solve(*p, mpq_class(1, 10), 10000);
  EXPECT_EQ(got, ref.solutions);
  std::vector<std::uint64_t> want(17);
  for (std::uint64_t n = 0; n < 17; ++n) want[n] = n;
  EXPECT_EQ(got, want);
}

TEST(Verifier, FibonacciSmallEpsCutoff) {
  // phi^n / sqrt 5 < phi^{n(1 - eps)} roughly iff n < ln(sqrt 5) / (eps ln phi) ~ 1672.
  const auto p = prep_of({1, 1}, {0, 1});
  const auto ref = oracle::brute_force({1, 1}, {0, 1}, oracle::golden_ln(), 1, 1000, 2500);
  const auto got = solve(*p, mpq_class(1, 1000), 2500);
  EXPECT_EQ(got, ref.solutions);
  ASSERT_FALSE(got.empty());
  EXPECT_EQ(got.back(), 1672u);
  EXPECT_EQ(got.size(), 1673u);
}

TEST(Verifier, CorpusAgreesWithBruteForce) {
  struct Case {
    std::vector<long> c, i;
    Dec ln_alpha;
  };
  const std::vector<Case> cases = {
      {{2, 1}, {0, 1}, log(1 + sqrt(Dec(2)))},
      {{3, -2}, {-1, 0}, log(Dec(2))},
      {{1, 8, -12}, {0, 1, 2}, log(Dec(3))},
      {{2, -5}, {0, 1}, log(sqrt(Dec(5)))},
      {{4, -4}, {0, 2}, log(Dec(2))},
  };
  for (const auto& c : cases) {
    const auto p = std::make_shared<const Prepared>(prepare(RecurrenceSpec{{c.c.begin(), c.c.end()}, {c.i.begin(), c.i.end()}}));
    for (long q : {13L, 100L}) {
      const auto ref = oracle::brute_force(c.c, c.i, c.ln_alpha, 1, q, 1500);
      ASSERT_GT(ref.closest, Dec("1e-100"));
      EXPECT_EQ(solve(*p, mpq_class(1, q), 1500), ref.solutions) << c.c[0] << " eps=1/" << q;
    }
  }
}

TEST(Verifier, ChunkingDoesNotChangeTheAnswer) {
  const auto p = prep_of({1, 1, 1}, {0, 0, 1});
  VerifierConfig small;
  small.chunk = 7;
  small.threads = 3;
  EXPECT_EQ(solve(*p, mpq_class(1, 20), 700, small), solve(*p, mpq_class(1, 20), 700));
}

TEST(Verifier, ExactTieIsNotASolution) {
  // u_n = 2^n: n = 0 gives 1 < 1, never a solution; no other n comes close.
  const auto p = prep_of({2}, {1});
  GrowthVerifier v(p->K(), p->params->modulus_sq, mpq_class(1, 10));
  EXPECT_FALSE(v.is_solution(1, 0));
  EXPECT_TRUE(enumerate_solutions(p->spec(), v, 200).empty());
  // Zero is always below a positive power.
  EXPECT_TRUE(v.is_solution(0, 5));
  // |alpha_1| = 4, eps = 1/2: the threshold at n = 10 is exactly 2^10.
  const auto q = prep_of({4}, {1});
  GrowthVerifier w(q->K(), q->params->modulus_sq, mpq_class(1, 2));
  EXPECT_FALSE(w.is_solution(1024, 10));
  EXPECT_FALSE(w.is_solution(-1024, 10));
  EXPECT_GE(w.tie_tests(), 1u);
  EXPECT_TRUE(w.is_solution(1023, 10));
  EXPECT_FALSE(w.is_solution(1025, 10));
}

TEST(Verifier, TieAtAnIrrationalModulus) {
  // eps = 1/2, n = 4: the threshold is phi^2 ~ 2.618, strictly between 2 and 3.
  const auto p = prep_of({1, 1}, {0, 1});
  GrowthVerifier v(p->K(), p->params->modulus_sq, mpq_class(1, 2));
  EXPECT_TRUE(v.is_solution(2, 4));
  EXPECT_FALSE(v.is_solution(3, 4));
}

TEST(Verifier, PrecisionCapIsHonoured) {
  const auto p = prep_of({1, 1}, {0, 1});
  VerifierConfig cfg;
  cfg.prec_start = 64;
  cfg.prec_cap = 64;
  GrowthVerifier v(p->K(), p->params->modulus_sq, mpq_class(1, 10), cfg);
  for (std::uint64_t n = 0; n < 50; ++n) v.is_solution(u_eval(p->spec(), n), n);
  EXPECT_LE(v.max_precision_used(), 64u);
}

TEST(Zeros, FoundExactly) {
  EXPECT_EQ(count_zeros(make_spec({1, 1}, {0, 1}), 100), std::vector<std::uint64_t>{0});
  // u_n = 2^n - 2: zero at n = 1.
  EXPECT_EQ(count_zeros(make_spec({3, -2}, {-1, 0}), 100), std::vector<std::uint64_t>{1});
}

TEST(Analyze, EpsAboveBoundRangeUsesFallbackEps) {
  const auto p = prep_of({1, 1}, {0, 1});
  const Analysis a = analyze(p, mpq_class(1, 10), 200);
  EXPECT_EQ(a.bound_eps, mpq_class(1, 13));
  ASSERT_TRUE(a.bound.has_value());
  EXPECT_TRUE(a.verdict.value_or(false));
  EXPECT_EQ(a.solutions.size(), 17u);
  const Analysis b = analyze(p, mpq_class(1, 20), 200);
  EXPECT_EQ(b.bound_eps, mpq_class(1, 20));
  EXPECT_THROW(analyze(p, mpq_class(1), 10), DomainError);
  EXPECT_THROW(analyze(p, mpq_class(0), 10), DomainError);
}

TEST(Analyze, OneRootVerdict) {
  const auto p = prep_of({2}, {3});
  const Analysis a = analyze(p, mpq_class(1, 10), 1000);
  ASSERT_TRUE(a.m1.has_value());
  EXPECT_TRUE(a.m1->contains(8));
  EXPECT_TRUE(a.solutions.empty());
  EXPECT_TRUE(a.verdict_m1.value_or(false));
}

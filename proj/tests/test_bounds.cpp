#include "lrs/errors.hpp"
#include "lrs/analyze.hpp"
#include "lrs/corpus.hpp"
#include "bound_oracle.hpp"

#include <gtest/gtest.h>

using namespace lrs;
using namespace oracle;

namespace {

const Dec kTight("1e-30");

Dec mid_ln(const LogScale& x) { return (ln_lo(x) + ln_hi(x)) / 2; }

}  // namespace

TEST(GFunction, ExactValueAtOneFortieth) {
  const BigInt want = (BigInt(1) << 56) * 4 * 4096 * boost::multiprecision::pow(BigInt(40), 5);
  EXPECT_EQ(big(g_exact(mpq_class(1, 40), 2, 2).get_num()), want);
  EXPECT_EQ(g_exact(mpq_class(1, 40), 2, 2).get_den(), 1);
  EXPECT_LT(rel_err(mid_ln(g_of(mpq_class(1, 40), 2, 2)), log(dec(want))), Dec("1e-30"));
  // g scales like x^{-5}.
  EXPECT_EQ(g_exact(mpq_class(1, 80), 2, 2), 32 * g_exact(mpq_class(1, 40), 2, 2));
  EXPECT_THROW(g_exact(0, 2, 2), DomainError);
}

TEST(GFunction, AgreesWithReferenceOnAGrid) {
  for (std::size_t l = 1; l <= 6; ++l) {
    for (std::size_t s : {1u, 2u, 7u}) {
      for (const mpq_class& x : {mpq_class(1, 26), mpq_class(1, 400), mpq_class(3, 1000)}) {
        EXPECT_LT(rel_err(dec(g_exact(x, l, s)), g_value(x, l, s)), Dec("1e-190"));
      }
    }
  }
}

TEST(Schmidt, SmallExponentsAreExact) {
  EXPECT_EQ(schmidt_exponent(1, 1), 5764801);
  EXPECT_EQ(big(schmidt_exponent(2, 1)), boost::multiprecision::pow(BigInt(14), 16));
  for (std::size_t k = 1; k <= 5; ++k) {
    for (int a = 1; a <= 3; ++a) EXPECT_EQ(big(schmidt_exponent(k, a)), schmidt_exponent_ref(k, a)) << k << "," << a;
  }
  const LogScale c = schmidt_count(2, 1);
  EXPECT_TRUE(c.ln().contains(mpq_class(schmidt_exponent(2, 1))));
}

TEST(Schmidt, CapsAreEnforced) {
  EXPECT_NO_THROW(schmidt_exponent(16, 4));
  EXPECT_THROW(schmidt_exponent(17, 1), CapacityError);
  EXPECT_THROW(schmidt_exponent(2, 5), CapacityError);
  EXPECT_THROW(schmidt_exponent(0, 1), DomainError);
}

TEST(Counts, SubspaceAndConstantsMatchReference) {
  for (int m = 2; m <= 5; ++m) {
    for (std::size_t s : {1u, 3u, 8u}) {
      for (const mpq_class& eps : {mpq_class(1, 13), mpq_class(1, 100), mpq_class(7, 1000)}) {
        const unsigned long M = static_cast<unsigned long>(m);
        const BigInt inner = boost::multiprecision::pow(BigInt(m), 7) * (BigInt(1) << (4 * M + 17));
        const Dec ln_inner = log(dec(inner)) - 2 * ln_q(eps);
        const Dec sub = log(Dec(2 * s * s)) + Dec(M * s + M) * ln_inner;
        EXPECT_LT(rel_err(mid_ln(subspace_count(m, s, eps)), sub), kTight);

        const Dec cp = Dec(M * s + M) * (1 + log(Dec(64 * m * m * m * m) * Dec(1u << M)) - ln_q(eps));
        EXPECT_LT(rel_err(mid_ln(cprime(m, s, eps)), cp), kTight);

        const Dec cpp = log(dec(BigInt(1) << (11 * M + 34))) + log(Dec(s * s)) - 4 * ln_q(eps) + 12 * log(Dec(m));
        EXPECT_LT(rel_err(mid_ln(cdoubleprime(m, s, eps)), cpp), kTight);
      }
    }
  }
}

TEST(Counts, EquationCountMatchesReference) {
  for (int d : {1, 2, 6}) {
    for (std::size_t l : {1u, 3u, 5u}) {
      for (unsigned extra : {0u, 2u}) {
        const mpq_class eps(1, 52);
        EXPECT_LT(rel_err(mid_ln(equation_count(d, l, 4, eps, extra)), equation_count_ref(d, l, 4, eps, extra)), kTight);
      }
    }
  }
}

TEST(Counts, EpsRangeIsEnforced) {
  for (const mpq_class& bad : {mpq_class(0), mpq_class(1, 12), mpq_class(1, 2), mpq_class(-1, 20)}) {
    EXPECT_THROW(subspace_count(2, 2, bad), DomainError);
    EXPECT_THROW(cprime(2, 2, bad), DomainError);
    EXPECT_THROW(growth_bound(ParamTuple{}.params(), bad), DomainError);
  }
}

TEST(Tau, TermsMatchReference) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10; ++i) {
    const ParamTuple t = random_tuple(rng);
    const mpq_class eps(1, 20 + static_cast<long>(i)), x = eps / (4 * t.d);
    const TauTerms got = tau_of(x, eps, t.params());
    const TauRef want = tau_ref(t, x, eps);
    EXPECT_LT(rel_err(mid_ln(got.t1), want.t1), kTight);
    EXPECT_LT(rel_err(mid_ln(got.t3), want.t3), kTight);
    if (t.A_prime == 1) {
      EXPECT_TRUE(got.t2_x.may_be_zero());
    } else {
      EXPECT_LT(rel_err(mid_ln(got.t2_eps), want.t2_eps), kTight);
      EXPECT_LT(rel_err(mid_ln(got.t2_x), want.t2_x), kTight);
    }
    EXPECT_LT(rel_err(mid_ln(got.headline()), want.headline()), kTight);
  }
}

TEST(GrowthBound, TotalIsReconstructedFromItsParts) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 8; ++i) {
    const ParamTuple t = random_tuple(rng);
    const mpq_class eps(1, 13 + 7 * i);
    const GrowthBound b = growth_bound(t.params(), eps);
    EXPECT_EQ(b.rho_is_one, t.rho == 1);
    EXPECT_EQ(b.tau.x, eps / (b.rho_is_one ? 2 * t.d : 4 * t.d));
    const Dec parts = log_sum_exp({b.rho_term.may_be_zero() ? neg_inf() : mid_ln(b.rho_term), mid_ln(b.tau.headline()),
                                   mid_ln(b.equations) + mid_ln(b.schmidt)});
    EXPECT_LT(rel_err(mid_ln(b.total), parts), kTight);
    EXPECT_LT(rel_err(mid_ln(b.total), growth_bound_ref(t, eps)), kTight);
  }
}

TEST(GrowthBound, MonotoneInSDiscriminantAndEps) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 6; ++i) {
    const ParamTuple t = random_tuple(rng);
    const mpq_class eps(1, 30);
    const GrowthBound base = fine_bound(t, eps);
    ParamTuple more_s = t;
    more_s.s += 1;
    ParamTuple more_disc = t;
    more_disc.disc *= 2;
    EXPECT_TRUE(bound_le(base, fine_bound(more_s, eps)));
    EXPECT_TRUE(bound_le(base, fine_bound(more_disc, eps)));
    EXPECT_TRUE(bound_le(base, fine_bound(t, eps / 2)));
  }
}

TEST(GrowthBound, FibonacciUsesTheRhoBranch) {
  const auto prep = std::make_shared<const Prepared>(prepare(make_spec({1, 1}, {0, 1})));
  const GrowthBound b = growth_bound(*prep->params, mpq_class(1, 20));
  EXPECT_FALSE(b.rho_is_one);
  EXPECT_EQ(b.tau.x, mpq_class(1, 160));
  // The e^{g(x)} term dominates: ln bound = g(1/160) + lower order.
  const Dec g160 = g_value(mpq_class(1, 160), 2, 2);
  EXPECT_LT(rel_err(mid_ln(b.total), g160), Dec("1e-25"));
  EXPECT_GT(mid_ln(b.total), g160);
}

TEST(OneRootBound, ThreeTimesTwoToTheN) {
  const auto prep = prepare(make_spec({2}, {3}));
  // 2(aA + 1)/A' with a = 1, A = 3, A' = 1; the log term vanishes.
  const Interval b = m1_bound(*prep.params, mpq_class(1, 10));
  EXPECT_TRUE(b.contains(8));
  EXPECT_LT(b.width().to_double(), 1e-30);
  EXPECT_THROW(m1_bound(*prepare(make_spec({1, 1}, {0, 1})).params, mpq_class(1, 10)), DomainError);
}

TEST(OneRootBound, LogTermWhenCoefficientIsSmall) {
  // Hand-made tuple with A' < 1, so the logarithmic term wins.
  ParamTuple t;
  t.m = 1;
  t.a = 1;
  t.A = 1;
  t.A_prime = mpq_class(1, 50);
  t.alpha1 = 3;
  const mpq_class eps(1, 100);
  const Interval b = m1_bound(t.params(), eps);
  const Dec want = std::max(Dec(2) * 2 * 50, -ln_q(t.A_prime) / (dec(eps) * ln_q(t.alpha1)));
  EXPECT_TRUE(encloses(b, want));
}

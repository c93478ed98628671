#include "lrs/errors.hpp"
#include "lrs/analyze.hpp"
#include "lrs/corpus.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace lrs;
using oracle::Dec;

TEST(Binet, ClosedFormReproducesEveryCorpusSequence) {
  for (const auto& e : bundled_corpus()) {
    if (e.spec.order() > 4) continue;  // the order-five entry is covered by the analyze tests
    const RootSystem rs = root_system(e.spec);
    const BinetForm form = binet_decompose(e.spec, rs);
    for (std::uint64_t n = 0; n < 40; ++n) {
      mpq_class v;
      ASSERT_TRUE(rs.K().as_rational(binet_eval(rs.K(), form, n), v)) << e.name << " n=" << n;
      EXPECT_EQ(v, mpq_class(u_eval(e.spec, n))) << e.name << " n=" << n;
    }
  }
}

TEST(Binet, EnclosureContainsExactValue) {
  const auto spec = make_spec({1, 8, -12}, {0, 1, 2});
  const RootSystem rs = root_system(spec);
  const BinetForm form = binet_decompose(spec, rs);
  for (std::uint64_t n : {0u, 5u, 37u, 200u}) {
    const ComplexInterval z = binet_enclosure(rs.K(), form, n, 256);
    EXPECT_TRUE(oracle::encloses(z.re, oracle::dec(u_eval(spec, n)))) << n;
    EXPECT_TRUE(z.im.contains(0));
  }
}

TEST(Binet, FibonacciParameters) {
  const Prepared p = prepare(make_spec({1, 1}, {0, 1}));
  ASSERT_TRUE(p.params.has_value());
  const GrowthParams& g = *p.params;
  EXPECT_EQ(g.l, 2u);
  EXPECT_EQ(g.m, 2);
  EXPECT_EQ(g.a, 1);
  EXPECT_EQ(g.d, 2);
  EXPECT_EQ(g.s, 2u);
  EXPECT_EQ(g.rho, 5);
  EXPECT_EQ(g.disc_bound, 5);
  // The Binet coefficients are +-1/sqrt 5, so rho a = +-sqrt 5 at both places.
  EXPECT_TRUE(oracle::encloses(g.A, sqrt(Dec(5))));
  EXPECT_TRUE(g.A_prime.contains(1));
  EXPECT_TRUE(oracle::encloses(g.alpha1_abs, (Dec(1) + sqrt(Dec(5))) / 2));
}

TEST(Binet, RepeatedRootHasPolynomialCoefficient) {
  const Prepared p = prepare(make_spec({4, -4}, {0, 2}));
  ASSERT_TRUE(p.params.has_value());
  EXPECT_EQ(p.params->m, 1);
  EXPECT_EQ(p.params->a, 2);
  EXPECT_EQ(p.params->d, 1);
  EXPECT_EQ(p.rho, 1);
  // u_n = n 2^n: P(n) = n.
  ASSERT_EQ(p.form.terms.size(), 1u);
  EXPECT_TRUE(p.form.terms[0].coeffs[0].is_zero());
  EXPECT_EQ(p.form.terms[0].coeffs[1], p.K().from_q(1));
}

TEST(Binet, RhoClearsDenominators) {
  EXPECT_EQ(prepare(make_spec({2}, {3})).rho, 1);
  const Prepared pell = prepare(make_spec({2, 1}, {0, 1}));
  // Coefficients +-sqrt(2)/4: 4a = +-sqrt 2 is integral, 2a = +-sqrt(2)/2 is not.
  EXPECT_EQ(pell.rho, 4);
  for (const auto& t : pell.form.terms) {
    for (const auto& c : t.coeffs) {
      EXPECT_TRUE(pell.K().is_integral(pell.K().mul(pell.K().from_q(4), c)));
      EXPECT_FALSE(pell.K().is_integral(pell.K().mul(pell.K().from_q(2), c)));
    }
  }
}

TEST(Prepare, RejectsDegenerateAndZeroInput) {
  for (const auto& e : degenerate_examples()) {
    try {
      prepare(e.spec);
      ADD_FAILURE() << e.name << " was accepted";
    } catch (const DegenerateError& err) {
      EXPECT_NE(std::string(err.context()).find("order 2"), std::string::npos) << err.context();
    }
    const Prepared forced = prepare(e.spec, true);
    ASSERT_TRUE(forced.degeneracy.has_value());
    EXPECT_EQ(forced.degeneracy->order, 2u);
  }
  EXPECT_THROW(prepare(make_spec({1, 1}, {0, 0})), DegenerateError);
}

TEST(Prepare, RejectsDominantModulusOne) {
  EXPECT_THROW(prepare(make_spec({1}, {5})), AssumptionViolation);
  // Minimal form of u_n = 1 is order one with root 1.
  EXPECT_THROW(prepare(make_spec({3, -2}, {1, 1})), AssumptionViolation);
}

TEST(Prepare, ReportsNonMinimalInput) {
  // 2^n written with an extra root 3 that the initial values never excite.
  const Prepared p = prepare(make_spec({5, -6}, {1, 2}));
  EXPECT_TRUE(p.minimal.reduced);
  EXPECT_EQ(p.spec().coeffs, std::vector<mpz_class>{2});
  EXPECT_FALSE(p.warnings.empty());
}

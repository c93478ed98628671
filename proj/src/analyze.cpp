#include "lrs/analyze.hpp"

#include "lrs/errors.hpp"

namespace lrs {

namespace {

constexpr Prec kSummaryBits = 96;
constexpr int kSummaryDigits = 20;

std::string approx_string(const NumberField& K, const Elem& x) {
  const ComplexInterval z = K.embed_accurate(x, 0, kSummaryBits);
  std::string s = z.re.mid().to_string(kSummaryDigits);
  if (!z.im.contains_zero()) {
    const Float im = z.im.mid();
    s += im.sign() < 0 ? " - " : " + ";
    s += abs(z.im).mid().to_string(kSummaryDigits) + "*i";
  }
  return s;
}

std::string ratio_text(const DegeneracyWitness& w) {
  return "alpha_" + std::to_string(w.i + 1) + "/alpha_" + std::to_string(w.j + 1) + " has order " + std::to_string(w.order);
}

}  // namespace

Prepared prepare(const RecurrenceSpec& spec, bool force, int degree_cap) {
  validate(spec);
  Prepared p;
  p.input = spec;
  p.minimal = minimal_recurrence(spec);
  if (p.minimal.zero_sequence) throw DegenerateError("zero sequence", "every term vanishes");
  if (p.minimal.reduced) {
    p.warnings.push_back("input order " + std::to_string(spec.order()) + " is not minimal; analysed the order " +
                         std::to_string(p.spec().order()) + " recurrence " + p.spec().to_string());
  }

  auto rs = std::make_shared<RootSystem>(root_system(p.spec(), degree_cap));
  p.rs = rs;
  const NumberField& K = rs->K();
  p.gamma_approx = approx_string(K, K.gamma());

  p.degeneracy = find_degeneracy(K, rs->roots);
  if (p.degeneracy) {
    p.degeneracy_ratio = approx_string(K, p.degeneracy->ratio);
    if (!force) throw DegenerateError("degenerate recurrence: a ratio of roots is a root of unity", ratio_text(*p.degeneracy) + ", ratio " + p.degeneracy_ratio);
    p.warnings.push_back("degenerate input analysed under --force; bounds omitted");
  }

  p.form = binet_decompose(p.spec(), *rs);
  for (std::size_t i = 0; i < p.form.terms.size(); ++i) {
    const BinetTerm& t = p.form.terms[i];
    TermSummary ts;
    ts.min_poly = rs->factorization.factors[rs->factor_of[i]].first.to_string();
    ts.root_approx = approx_string(K, t.root);
    ts.multiplicity = t.multiplicity;
    for (const auto& c : t.coeffs) {
      ts.coeffs.push_back(c.to_string("g"));
      ts.coeffs_approx.push_back(c.is_zero() ? "0" : approx_string(K, c));
    }
    p.terms.push_back(std::move(ts));
  }

  p.S = build_s_set(K, rs->roots);
  if (!p.S.exact()) p.warnings.push_back("s is an upper bound: places above some primes counted as d");
  p.rho = compute_rho(K, p.form);
  const CoefficientBounds cb = compute_A_Aprime(K, p.form, p.rho);
  try {
    p.params = assemble_growth_params(*rs, p.form, p.S, p.rho, cb);
  } catch (const AssumptionViolation& e) {
    if (!p.degeneracy) throw;
    p.warnings.push_back(std::string("no growth analysis: ") + e.what());
  }
  return p;
}

Analysis analyze(std::shared_ptr<const Prepared> prep, const mpq_class& eps, std::uint64_t n_max, const VerifierConfig& cfg) {
  if (eps <= 0 || eps >= 1) throw DomainError("eps must lie in (0, 1)", "eps=" + eps.get_str());
  Analysis a;
  a.prep = prep;
  a.eps = eps;
  a.bound_eps = eps < mpq_class(1, 12) ? eps : fallback_bound_eps();
  a.n_max = n_max;
  a.config = cfg;
  a.warnings = prep->warnings;
  a.zeros = count_zeros(prep->spec(), n_max);
  a.warnings.push_back("zeros and solutions are listed up to n_max only");
  if (a.bound_eps != eps) {
    a.warnings.push_back("eps = " + eps.get_str() + " is outside (0, 1/12); the growth bound is evaluated at eps = " + a.bound_eps.get_str() +
                         ", which covers every solution for the larger eps");
  }

  if (prep->params) {
    const GrowthParams& p = *prep->params;
    GrowthVerifier v(prep->K(), p.modulus_sq, eps, cfg);
    a.solutions = enumerate_solutions(prep->spec(), v, n_max);
    a.solutions_computed = true;
    a.max_precision = v.max_precision_used();
    a.tie_tests = v.tie_tests();

    if (!prep->degeneracy) {
      a.bound = growth_bound(p, a.bound_eps);
      const LogScale count = LogScale::from_z(mpz_class(static_cast<unsigned long>(a.solutions.size())));
      a.verdict = certainly_le(count, a.bound->total);
      if (p.m == 1) {
        a.m1 = m1_bound(p, eps);
        bool ok = certainly_le(Interval::from_z(mpz_class(static_cast<unsigned long>(a.solutions.size())), kBoundPrecision), *a.m1);
        for (std::uint64_t n : a.solutions) {
          if (!certainly_lt(Interval::from_z(mpz_class(static_cast<unsigned long>(n)), kBoundPrecision), *a.m1)) ok = false;
        }
        a.verdict_m1 = ok;
      }
    }
  }
  return a;
}

}  // namespace lrs

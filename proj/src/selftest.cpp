#include "lrs/selftest.hpp"

#include "lrs/analyze.hpp"
#include "lrs/corpus.hpp"
#include "lrs/errors.hpp"
#include "lrs/exterior.hpp"
#include "lrs/splitting_field.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

namespace lrs {

namespace {

constexpr std::size_t kMaxNotes = 8;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long range(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  mpq_class rational(long num, long den) {
    mpq_class q(range(-num, num), range(1, den));
    q.canonicalize();
    return q;
  }

private:
  std::mt19937_64 g_;
};

Elem random_elem(const NumberField& K, Rng& rng, long num, long den, bool nonzero) {
  for (;;) {
    std::vector<mpq_class> c;
    for (int k = 0; k < K.degree(); ++k) c.push_back(rng.rational(num, den));
    Elem x = K.reduce(RationalPoly(std::move(c)));
    if (!nonzero || !x.is_zero()) return x;
  }
}

void fail(SuiteResult& r, const std::string& what) {
  ++r.failures;
  if (r.notes.size() < kMaxNotes) r.notes.push_back(what);
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

mpz_class factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

Magnitude product_of_norms(const LocalNorm& N, const std::vector<std::vector<Elem>>& xs, std::size_t count) {
  Magnitude m = Magnitude::of_rational(1);
  for (std::size_t t = 0; t < count; ++t) m = m * N.of(xs[t]);
  return m;
}

std::string instance_tag(const std::string& field, std::size_t i, int m, int k) {
  return field + " #" + std::to_string(i) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

}  // namespace

const std::vector<std::string>& selftest_suite_names() {
  static const std::vector<std::string> names = {"product-formula", "laplace", "heights", "growth-eq3-eq4", "weights"};
  return names;
}

std::vector<std::pair<std::string, NumberField>> product_formula_fields() {
  SplittingField cubic = splitting_field({RationalPoly{-2, 0, 0, 1}});
  return {{"Q", NumberField::rationals()},
          {"Q(sqrt5)", NumberField(RationalPoly{-1, -1, 1})},
          {"Q(i)", NumberField(RationalPoly{1, 0, 1})},
          {"split(x^3-2)", cubic.field}};
}

std::vector<std::pair<std::string, NumberField>> height_fields() {
  return {{"Q", NumberField::rationals()},
          {"Q(sqrt5)", NumberField(RationalPoly{-1, -1, 1})},
          {"Q(sqrt2)", NumberField(RationalPoly{-2, 0, 1})},
          {"Q(x^3-3x+1)", NumberField(RationalPoly{1, -3, 0, 1})}};
}

SuiteResult suite_product_formula(std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"product-formula", 0, 0, {}};
  const auto fields = product_formula_fields();
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const auto& [name, K] = fields[f];
    Rng rng(seed + 1000003 * (f + 1));
    double worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const Elem x = random_elem(K, rng, 1000000, 1000000, true);
      ++r.cases;
      const ProductFormulaResult pf = product_formula_residual(K, x, 128);
      const double w = pf.value.width().to_double();
      worst = std::max(worst, w);
      if (!pf.value.contains(mpq_class(1))) {
        fail(r, name + " #" + std::to_string(i) + ": enclosure " + pf.value.to_string(12) + " misses 1");
      } else if (!(w < 1e-25)) {
        fail(r, name + " #" + std::to_string(i) + ": width " + sci(w));
      }
    }
    r.notes.push_back(name + ": " + std::to_string(samples) + " elements, max width " + sci(worst));
  }
  return r;
}

SuiteResult suite_laplace(std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"laplace", 0, 0, {}};
  Rng rng(seed + 17);
  const RationalArith Q;
  for (std::size_t i = 0; i < samples; ++i) {
    const int m = static_cast<int>(rng.range(2, 5));
    const int p = static_cast<int>(rng.range(1, m));
    auto vec = [&] {
      std::vector<mpq_class> v;
      for (int j = 0; j < m; ++j) v.push_back(rng.rational(50, 9));
      return v;
    };
    std::vector<std::vector<mpq_class>> xs, ys, full;
    for (int t = 0; t < p; ++t) {
      xs.push_back(vec());
      ys.push_back(vec());
    }
    for (int t = 0; t < m; ++t) full.push_back(vec());
    ++r.cases;
    const std::string tag = "Q #" + std::to_string(i) + " m=" + std::to_string(m) + " p=" + std::to_string(p);
    if (laplace_identity_residual(Q, xs, ys) != 0) fail(r, tag + ": Laplace identity residual nonzero");
    if (laplace_extension_residual(Q, full) != 0) fail(r, tag + ": Laplace extension residual nonzero");
    const auto twice = star(Q, star(Q, full[0]));
    for (int j = 0; j < m; ++j) {
      const mpq_class want = (m - 1) % 2 ? mpq_class(-full[0][static_cast<std::size_t>(j)]) : full[0][static_cast<std::size_t>(j)];
      if (twice[static_cast<std::size_t>(j)] != want) {
        fail(r, tag + ": star(star(x)) != (-1)^(m-1) x");
        break;
      }
    }
  }

  // The same identities over a quadratic field.
  const NumberField K(RationalPoly{-1, -1, 1});
  const FieldArith F{K};
  const std::size_t field_samples = std::max<std::size_t>(1, samples / 10);
  for (std::size_t i = 0; i < field_samples; ++i) {
    const int m = static_cast<int>(rng.range(2, 4));
    const int p = static_cast<int>(rng.range(1, m));
    auto vec = [&] {
      std::vector<Elem> v;
      for (int j = 0; j < m; ++j) v.push_back(random_elem(K, rng, 20, 5, false));
      return v;
    };
    std::vector<std::vector<Elem>> xs, ys, full;
    for (int t = 0; t < p; ++t) {
      xs.push_back(vec());
      ys.push_back(vec());
    }
    for (int t = 0; t < m; ++t) full.push_back(vec());
    ++r.cases;
    const std::string tag = "Q(sqrt5) #" + std::to_string(i);
    if (!laplace_identity_residual(F, xs, ys).is_zero()) fail(r, tag + ": Laplace identity residual nonzero");
    if (!laplace_extension_residual(F, full).is_zero()) fail(r, tag + ": Laplace extension residual nonzero");
  }
  r.notes.push_back(std::to_string(samples) + " rational instances, " + std::to_string(field_samples) + " over Q(sqrt5)");
  return r;
}

SuiteResult suite_heights(std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"heights", 0, 0, {}};
  const auto fields = height_fields();
  Rng rng(seed + 29);
  std::size_t place_checks = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& [fname, K] = fields[i % fields.size()];
    const FieldArith F{K};
    const int m = static_cast<int>(rng.range(2, 4));
    const int k = static_cast<int>(rng.range(2, m));
    auto vec = [&] {
      for (;;) {
        std::vector<Elem> v;
        bool nz = false;
        for (int j = 0; j < m; ++j) {
          v.push_back(rng.range(0, 4) == 0 ? Elem{} : random_elem(K, rng, 6, 3, false));
          nz = nz || !v.back().is_zero();
        }
        if (nz) return v;
      }
    };
    std::vector<std::vector<Elem>> xs;
    Elem det;
    do {
      xs.clear();
      for (int t = 0; t < m; ++t) xs.push_back(vec());
      det = determinant(F, xs);
    } while (det.is_zero());
    const std::vector<Elem> y = vec();
    const Elem xy = dot(F, xs[0], y);
    const std::vector<std::vector<Elem>> head(xs.begin(), xs.begin() + k);
    const std::vector<Elem> W = wedge(F, head);

    std::vector<std::vector<Elem>> support = xs;
    support.push_back(y);
    support.push_back({xy});
    support.push_back(W);
    support.push_back({det});
    const auto places = places_for(K, support);

    // H = max_t H(x_t) over the vectors entering each lower bound.
    Magnitude Hk = Magnitude::of_zero(), Hm = Magnitude::of_zero();
    for (int t = 0; t < m; ++t) {
      const Magnitude h = height_magnitude(K, xs[static_cast<std::size_t>(t)]);
      if (t < k) Hk = max(Hk, h);
      Hm = max(Hm, h);
    }
    const mpz_class kf = factorial(static_cast<unsigned long>(k)), mf = factorial(static_cast<unsigned long>(m));
    const Magnitude lower_k = pow(Hk, -k) * Magnitude::of_rational(mpq_class(1) / kf);
    const Magnitude lower_m = pow(Hm, -m) * Magnitude::of_rational(mpq_class(1) / mf);

    ++r.cases;
    const std::string tag = instance_tag(fname, i, m, k);
    bool ok = true;
    auto check = [&](bool cond, const std::string& what, const LocalNorm* v) {
      if (cond || !ok) return;
      ok = false;
      fail(r, tag + ": " + what + (v ? " at " + v->place().to_string() : std::string()));
    };
    for (const auto& N : places) {
      ++place_checks;
      const Magnitude prod_k = product_of_norms(N, xs, static_cast<std::size_t>(k));
      const Magnitude prod_m = product_of_norms(N, xs, static_cast<std::size_t>(m));
      const Magnitude w_k = N.of(W), w_m = N.of(std::vector<Elem>{det});
      check(certainly_le(N.of(std::vector<Elem>{xy}), N.weight_power(mpz_class(m)) * N.of(xs[0]) * N.of(y)), "|x.y| <= m^s |x||y| fails", &N);
      check(certainly_le(w_k, N.weight_power(kf) * prod_k), "wedge upper bound fails", &N);
      check(certainly_le(w_m, N.weight_power(mf) * prod_m), "determinant upper bound fails", &N);
      check(certainly_le(lower_k * prod_k, w_k), "wedge lower bound H^-p/p! fails", &N);
      check(certainly_le(lower_m * prod_m, w_m), "determinant lower bound H^-m/m! fails", &N);
    }
    Magnitude rhs = Magnitude::of_rational(mpq_class(kf));
    for (int t = 0; t < k; ++t) rhs = rhs * height_magnitude(K, xs[static_cast<std::size_t>(t)]);
    check(certainly_le(height_magnitude(K, W), rhs), "H(wedge) <= k! prod H(x_t) fails", nullptr);
  }
  r.notes.push_back(std::to_string(samples) + " instances over " + std::to_string(fields.size()) + " totally real fields, " +
                    std::to_string(place_checks) + " place checks");
  return r;
}

SuiteResult suite_growth(std::size_t samples, std::uint64_t seed) {
  SuiteResult r{"growth-eq3-eq4", 0, 0, {}};
  Rng rng(seed + 43);
  std::map<std::string, RecurrenceSpec> specs;
  for (const auto& e : bundled_corpus()) specs[e.name] = e.spec;
  for (const std::string name : {"n-times-two-pow", "three-times-two-pow", "five-times-minus-three-pow", "two-pow-minus-two"}) {
    const Prepared p = prepare(specs.at(name));
    if (p.rho != 1 || !p.params) {
      fail(r, name + ": expected rho = 1");
      continue;
    }
    const NumberField& K = p.K();
    const GrowthParams& g = *p.params;
    std::map<mpz_class, std::shared_ptr<const PrimeDecomposition>> decs;
    std::vector<LocalNorm> S;
    for (const auto& v : p.S.places) {
      if (v.archimedean()) {
        S.emplace_back(K, v);
      } else {
        auto& dec = decs[v.prime];
        if (!dec) dec = std::make_shared<const PrimeDecomposition>(decompose_prime(K, v.prime));
        S.emplace_back(K, v, dec);
      }
    }
    // A exactly when every coefficient is rational, else its enclosure.
    std::optional<mpq_class> A_exact = mpq_class(1);
    for (const auto& t : p.form.terms) {
      for (const auto& c : t.coeffs) {
        mpq_class q;
        if (!K.as_rational(c, q)) {
          A_exact.reset();
          break;
        }
        A_exact = std::max(*A_exact, mpq_class(abs(q * mpq_class(p.rho))));
      }
      if (!A_exact) break;
    }
    auto A_at = [&](const LocalNorm& N) {
      if (!N.place().archimedean()) return Magnitude::of_rational(1);
      if (A_exact && N.weight() == 1) return Magnitude::of_rational(*A_exact);
      return Magnitude::of_log(mul_q(log(with_prec(g.A, 160)), N.weight()));
    };
    const Magnitude A_all = A_exact ? Magnitude::of_rational(*A_exact) : Magnitude::of_log(log(with_prec(g.A, 160)));
    const long a = g.a;

    for (std::size_t i = 0; i < samples; ++i) {
      const std::uint64_t n = static_cast<std::uint64_t>(rng.range(1, 1000));
      const mpz_class nz(static_cast<unsigned long>(n));
      ++r.cases;
      const std::string tag = name + " n=" + std::to_string(n);
      bool ok = true;
      Magnitude lhs4 = Magnitude::of_rational(1);
      for (const auto& t : p.form.terms) {
        const Elem Pn = binet_poly_at(K, t, n);
        int di = static_cast<int>(t.coeffs.size()) - 1;
        while (di > 0 && t.coeffs[static_cast<std::size_t>(di)].is_zero()) --di;
        const Elem term = K.mul(Pn, K.pow(t.root, n));
        for (const auto& N : S) {
          const Magnitude lhs = N.of(Pn);
          const Magnitude mid = N.weight_power((di + 1) * pow_z(nz, static_cast<unsigned long>(di))) * A_at(N);
          const Magnitude top = N.weight_power(a * pow_z(nz, static_cast<unsigned long>(a))) * A_at(N);
          if (ok && !(certainly_le(lhs, mid) && certainly_le(mid, top))) {
            ok = false;
            fail(r, tag + ": |P_i(n)|_v bound fails at " + N.place().to_string());
          }
          lhs4 = lhs4 * N.of(term);
        }
      }
      const Magnitude rhs4 = pow(Magnitude::of_rational(mpq_class(a * pow_z(nz, static_cast<unsigned long>(a)))) * A_all, g.m);
      if (ok && !certainly_le(lhs4, rhs4)) fail(r, tag + ": product over S exceeds (a n^a A)^m");
    }
    r.notes.push_back(name + ": " + std::to_string(samples) + " values of n, |S| = " + std::to_string(S.size()));
  }
  return r;
}

SuiteResult suite_weights() {
  SuiteResult r{"weights", 0, 0, {}};
  std::vector<std::pair<std::string, NumberField>> fields = product_formula_fields();
  for (auto& f : height_fields()) fields.push_back(std::move(f));
  for (const auto& e : bundled_corpus()) fields.emplace_back(e.name, root_system(e.spec).K());
  for (const auto& [name, K] : fields) {
    ++r.cases;
    const auto arch = archimedean_places(K);
    int r1 = 0, r2 = 0;
    for (const auto& v : arch) (v.kind == Place::Kind::Real ? r1 : r2)++;
    const mpq_class direct = mpq_class(r1 + 2 * r2) / K.degree();
    if (r1 + 2 * r2 != K.degree() || weight_sum(K) != 1 || direct != 1) {
      fail(r, name + ": weights sum to " + weight_sum(K).get_str());
    }
  }
  r.notes.push_back(std::to_string(fields.size()) + " fields");
  return r;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt) {
  std::vector<std::string> chosen = opt.suites.empty() ? selftest_suite_names() : opt.suites;
  const auto& known = selftest_suite_names();
  for (const auto& s : chosen) {
    if (std::find(known.begin(), known.end(), s) == known.end()) throw DomainError("unknown suite", s);
  }
  auto n = [&](std::size_t dflt) { return opt.samples ? opt.samples : dflt; };
  std::vector<SuiteResult> out;
  for (const auto& s : chosen) {
    if (s == "product-formula") out.push_back(suite_product_formula(n(500), opt.seed));
    else if (s == "laplace") out.push_back(suite_laplace(n(1000), opt.seed));
    else if (s == "heights") out.push_back(suite_heights(n(1000), opt.seed));
    else if (s == "growth-eq3-eq4") out.push_back(suite_growth(n(100), opt.seed));
    else if (s == "weights") out.push_back(suite_weights());
  }
  return out;
}

std::string render_selftest_text(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "suite" << std::right << std::setw(8) << "cases" << std::setw(10) << "failures"
     << "  result\n";
  for (const auto& r : results) {
    os << std::left << std::setw(18) << r.name << std::right << std::setw(8) << r.cases << std::setw(10) << r.failures << "  "
       << (r.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& note : r.notes) os << "    " << note << "\n";
  }
  return os.str();
}

nlohmann::json selftest_json(const std::vector<SuiteResult>& results, const SelftestOptions& opt) {
  nlohmann::json suites = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    suites.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}, {"notes", r.notes}});
    all = all && r.passed();
  }
  return {{"seed", opt.seed}, {"samples", opt.samples}, {"suites", suites}, {"passed", all}};
}

}  // namespace lrs

#include "lrs/binet.hpp"

#include "lrs/algebraic.hpp"
#include "lrs/errors.hpp"
#include "lrs/intfactor.hpp"

#include <algorithm>
#include <map>

namespace lrs {

RootSystem root_system(const RecurrenceSpec& spec, int degree_cap) {
  validate(spec);
  RootSystem rs;
  rs.factorization = factor_rationals(spec.characteristic_polynomial());
  std::vector<RationalPoly> polys;
  for (const auto& [f, e] : rs.factorization.factors) {
    if (!f.is_monic_integral()) throw InternalError("factor of a monic integer polynomial is not monic", f.to_string());
    polys.push_back(f);
  }
  rs.field = splitting_field(polys, degree_cap);
  for (const auto& r : rs.field.roots) {
    rs.roots.push_back(r.value);
    rs.multiplicity.push_back(rs.factorization.factors[r.factor_index].second);
    rs.factor_of.push_back(r.factor_index);
  }
  return rs;
}

int BinetForm::a() const {
  int a = 0;
  for (const auto& t : terms) a = std::max(a, t.multiplicity);
  return a;
}

namespace {

// Solve M x = b over K by Gaussian elimination with nonzero pivots.
std::vector<Elem> solve_field(const NumberField& K, std::vector<std::vector<Elem>> M, std::vector<Elem> b) {
  const std::size_t n = M.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c].is_zero()) ++p;
    if (p == n) throw InternalError("singular confluent Vandermonde system");
    std::swap(M[p], M[c]);
    std::swap(b[p], b[c]);
    Elem inv = K.inv(M[c][c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || M[r][c].is_zero()) continue;
      Elem f = K.mul(M[r][c], inv);
      for (std::size_t k = c; k < n; ++k) {
        if (!M[c][k].is_zero()) M[r][k] = K.sub(M[r][k], K.mul(f, M[c][k]));
      }
      b[r] = K.sub(b[r], K.mul(f, b[c]));
    }
  }
  std::vector<Elem> x(n);
  for (std::size_t c = 0; c < n; ++c) x[c] = K.div(b[c], M[c][c]);
  return x;
}

}  // namespace

Elem binet_poly_at(const NumberField& K, const BinetTerm& t, std::uint64_t n) {
  Elem acc;
  for (std::size_t k = t.coeffs.size(); k-- > 0;) acc = K.add(K.mul(acc, K.from_q(mpq_class(mpz_class(static_cast<unsigned long>(n))))), t.coeffs[k]);
  return acc;
}

Elem binet_eval(const NumberField& K, const BinetForm& form, std::uint64_t n) {
  Elem sum;
  for (const auto& t : form.terms) sum = K.add(sum, K.mul(binet_poly_at(K, t, n), K.pow(t.root, n)));
  return sum;
}

BinetForm binet_decompose(const RecurrenceSpec& spec, const RootSystem& rs) {
  const NumberField& K = rs.K();
  const std::size_t l = spec.order();
  BinetForm form;
  form.l = l;
  std::size_t total = 0;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    form.terms.push_back({rs.roots[i], rs.multiplicity[i], {}});
    total += static_cast<std::size_t>(rs.multiplicity[i]);
  }
  if (total != l) throw InternalError("root multiplicities do not add up to the order");

  std::vector<std::vector<Elem>> M(l, std::vector<Elem>(l));
  std::vector<Elem> b(l);
  std::vector<mpz_class> u = u_terms(spec, 2 * l + 1);
  for (std::size_t n = 0; n < l; ++n) {
    std::size_t col = 0;
    for (const auto& t : form.terms) {
      Elem an = K.pow(t.root, n);
      mpz_class nk = 1;
      for (int k = 0; k < t.multiplicity; ++k) {
        M[n][col++] = K.mul(K.from_q(mpq_class(nk)), an);
        nk *= static_cast<unsigned long>(n);
      }
    }
    b[n] = K.from_q(mpq_class(u[n]));
  }
  std::vector<Elem> x = solve_field(K, std::move(M), std::move(b));
  std::size_t col = 0;
  for (auto& t : form.terms) {
    for (int k = 0; k < t.multiplicity; ++k) t.coeffs.push_back(x[col++]);
  }
  for (std::size_t n = 0; n <= 2 * l; ++n) {
    mpq_class v;
    Elem e = binet_eval(K, form, n);
    if (!K.as_rational(e, v) || v != u[n]) throw InternalError("Binet identity fails", "n=" + std::to_string(n));
  }
  return form;
}

ComplexInterval binet_enclosure(const NumberField& K, const BinetForm& form, std::uint64_t n, Prec bits) {
  ComplexInterval sum = ComplexInterval::from_q(0, bits);
  for (const auto& t : form.terms) {
    Elem p = binet_poly_at(K, t, n);
    if (p.is_zero()) continue;
    ComplexInterval term = K.embed(p, 0, bits) * pow_ui(K.embed(t.root, 0, bits), static_cast<unsigned long>(n));
    sum = sum + term;
  }
  return sum;
}

mpz_class integrality_denominator(const NumberField& K, const Elem& x) {
  RationalPoly cp = K.charpoly(x);
  const int d = cp.degree();
  // n x has characteristic coefficients n^{d-k} c_k; each prime p needs
  // v_p(n) >= ceil(v_p(den c_k) / (d - k)).
  std::map<mpz_class, unsigned long> need;
  for (int k = 0; k < d; ++k) {
    const mpq_class& c = cp.coeffs()[static_cast<std::size_t>(k)];
    if (c.get_den() == 1) continue;
    IntFactorization f = factor_integer(c.get_den());
    if (!f.complete()) throw CapacityError("could not factor a coefficient denominator", c.get_den().get_str());
    const unsigned long j = static_cast<unsigned long>(d - k);
    for (const auto& [p, e] : f.primes) need[p] = std::max(need[p], (e + j - 1) / j);
  }
  mpz_class n = 1;
  for (const auto& [p, e] : need) n *= pow_z(p, e);
  return n;
}

mpz_class compute_rho(const NumberField& K, const BinetForm& form) {
  mpz_class rho = 1;
  for (const auto& t : form.terms) {
    for (const auto& c : t.coeffs) {
      if (c.is_zero()) continue;
      mpz_class n = integrality_denominator(K, c);
      mpz_lcm(rho.get_mpz_t(), rho.get_mpz_t(), n.get_mpz_t());
    }
  }
  return rho;
}

CoefficientBounds compute_A_Aprime(const NumberField& K, const BinetForm& form, const mpz_class& rho, Prec bits) {
  Interval one = Interval::from_si(1, bits);
  CoefficientBounds out{one, one};
  bool any = false;
  for (const auto& t : form.terms) {
    for (const auto& c : t.coeffs) {
      if (c.is_zero()) continue;
      any = true;
      Elem rc = K.mul(K.from_q(mpq_class(rho)), c);
      mpq_class q;
      if (K.as_rational(rc, q)) {
        Interval v = Interval::from_q(abs(q), bits);
        out.A = max(out.A, v);
        out.A_prime = min(out.A_prime, v);
        continue;
      }
      for (std::size_t k = 0; k < K.embedding_count(); ++k) {
        Interval v = abs(K.embed_accurate(rc, k, bits));
        out.A = max(out.A, v);
        out.A_prime = min(out.A_prime, v);
      }
    }
  }
  if (!any) throw DomainError("all Binet coefficients vanish (zero sequence)");
  return out;
}

GrowthParams assemble_growth_params(const RootSystem& rs, const BinetForm& form, const SSet& S, const mpz_class& rho,
                                    const CoefficientBounds& bounds, Prec bits) {
  const NumberField& K = rs.K();
  DominantRoots dom = dominant_roots(K, rs.roots);
  GrowthParams p;
  p.l = form.l;
  p.m = form.m();
  p.a = form.a();
  p.d = K.degree();
  p.s = S.s;
  p.s_exact = S.exact();
  p.A = bounds.A;
  p.A_prime = bounds.A_prime;
  p.rho = rho;
  mpq_class disc = discriminant(K.modulus());
  p.disc_bound = abs(disc.get_num());
  p.alpha1_abs = dominant_modulus(K, dom.modulus_sq, bits);
  p.modulus_sq = dom.modulus_sq;
  p.dominant = dom.indices;
  return p;
}

}  // namespace lrs

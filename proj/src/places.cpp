#include "lrs/places.hpp"

#include "lrs/errors.hpp"
#include "lrs/factor.hpp"
#include "lrs/intfactor.hpp"

#include <map>
#include <set>
#include <sstream>

namespace lrs {

namespace {

// Pollard-rho effort per norm. The product formula groups whatever is left
// unfactored, so it can afford a small budget; heights cannot.
constexpr std::uint64_t kRhoBudget = 4000;
constexpr std::uint64_t kHeightRhoBudget = 200000;

// x = c / D with c an integer polynomial in gamma and D > 0.
std::pair<ZPoly, mpz_class> integral_numerator(const Elem& x) {
  mpz_class den = 1;
  for (const auto& q : x.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  ZPoly c;
  for (const auto& q : x.coeffs()) c.push_back(mpz_class(q.get_num() * (den / q.get_den())));
  return {c, den};
}

mpz_class integer_norm(const NumberField& K, const ZPoly& c) {
  mpq_class n = resultant(K.modulus(), to_rational(c));
  if (n.get_den() != 1) throw InternalError("norm of an integral element is not an integer");
  return n.get_num();
}

ZPoly lift(const modp::Poly& p) {
  ZPoly r;
  for (auto c : p) r.push_back(mpz_class(static_cast<unsigned long>(c)));
  return r;
}

void add_primes(std::set<mpz_class>& out, const mpz_class& n, bool& complete, std::uint64_t budget) {
  if (n == 0 || abs(n) == 1) return;
  IntFactorization f = factor_integer(n, budget);
  for (const auto& [p, e] : f.primes) out.insert(p);
  if (!f.complete()) complete = false;
}

bool fits_word(const mpz_class& q) { return mpz_sizeinbase(q.get_mpz_t(), 2) <= 62; }

}  // namespace

std::string Place::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Real: os << "real(" << embedding << ")"; break;
    case Kind::Complex: os << "complex(" << embedding << ")"; break;
    case Kind::Finite: os << "finite(q=" << prime.get_str() << ",j=" << ideal << ",e=" << ramification << ",f=" << residue_degree << ")"; break;
  }
  return os.str();
}

std::vector<Place> archimedean_places(const NumberField& K) {
  const mpq_class d = K.degree();
  auto rs = K.roots();
  std::vector<Place> out;
  for (std::size_t k = 0; k < rs->size(); ++k) {
    if (rs->is_real(k)) {
      Place v;
      v.kind = Place::Kind::Real;
      v.embedding = k;
      v.weight = 1 / d;
      out.push_back(v);
    } else if (k < rs->conjugate(k)) {
      Place v;
      v.kind = Place::Kind::Complex;
      v.embedding = k;
      v.weight = 2 / d;
      out.push_back(v);
    }
  }
  return out;
}

mpq_class weight_sum(const NumberField& K) {
  mpq_class s = 0;
  for (const auto& v : archimedean_places(K)) s += v.weight;
  return s;
}

PrimeDecomposition decompose_prime(const NumberField& K, const mpz_class& q) {
  if (!fits_word(q)) throw CapacityError("prime too large for modular factorization", q.get_str());
  const modp::u64 p = q.get_ui();
  ModFactorization mf = factor_mod_prime(K.modulus(), q);
  PrimeDecomposition dec;
  dec.q = q;
  modp::Poly g{1}, rest{1};
  for (const auto& fac : mf.factors) {
    dec.ideals.push_back({fac.poly, fac.multiplicity, modp::degree(fac.poly)});
    g = modp::mul(g, fac.poly, p);
    for (int i = 1; i < fac.multiplicity; ++i) rest = modp::mul(rest, fac.poly, p);
  }
  // Dedekind: with F = (G * R - h) / q for lifts G of g and R of h/g,
  // Z[gamma] is q-maximal iff gcd(F, g, R) = 1 mod q.
  RationalPoly gr = to_rational(lift(g)) * to_rational(lift(rest)) - K.modulus();
  gr *= mpq_class(1) / mpq_class(q);
  modp::Poly f = modp::reduce(gr, p);
  modp::Poly common = modp::gcd(modp::gcd(f, g, p), rest, p);
  dec.regular = modp::degree(common) == 0;
  return dec;
}

std::vector<Place> finite_places(const PrimeDecomposition& dec) {
  std::vector<Place> out;
  for (std::size_t j = 0; j < dec.ideals.size(); ++j) {
    Place v;
    v.kind = Place::Kind::Finite;
    v.prime = dec.q;
    v.ideal = j;
    v.ramification = dec.ideals[j].e;
    v.residue_degree = dec.ideals[j].f;
    out.push_back(v);
  }
  return out;
}

long valuation_at(const NumberField& K, const PrimeDecomposition& dec, std::size_t j, const Elem& x) {
  if (x.is_zero()) throw DomainError("valuation of zero");
  if (!dec.regular) {
    throw UnavailableError("valuation at a prime dividing the index of Z[gamma]", "q=" + dec.q.get_str());
  }
  const PrimeIdeal& P = dec.ideals[j];
  auto [c, den] = integral_numerator(x);
  const long den_part = static_cast<long>(P.e) * static_cast<long>(valuation(den, dec.q));
  const mpz_class norm = integer_norm(K, c);
  const unsigned vn = valuation(norm, dec.q);
  if (vn == 0) return -den_part;
  long ord_c = 0;
  if (dec.ideals.size() == 1) {
    ord_c = static_cast<long>(vn) / P.f;
  } else {
    const modp::u64 p = dec.q.get_ui();
    std::vector<modp::Poly> powers;
    for (const auto& I : dec.ideals) {
      modp::Poly pw{1};
      for (int i = 0; i < I.e; ++i) pw = modp::mul(pw, I.factor, p);
      powers.push_back(pw);
    }
    auto [unit, hz] = primitive_part(K.modulus());
    (void)unit;
    std::vector<ZPoly> lifts = hensel_lift(hz, powers, p, vn + 1);
    const mpq_class r = resultant(to_rational(lifts[j]), to_rational(c));
    if (r == 0 || r.get_den() != 1) throw InternalError("local norm vanished or is not integral");
    const unsigned vr = valuation(r.get_num(), dec.q);
    if (vr % static_cast<unsigned>(P.f) != 0) throw InternalError("local norm valuation not divisible by the residue degree");
    ord_c = static_cast<long>(vr) / P.f;
  }
  return ord_c - den_part;
}

std::optional<mpq_class> FiniteAbs::rational() const {
  if (exponent.get_den() != 1) return std::nullopt;
  const mpz_class e = exponent.get_num();
  if (!mpz_fits_slong_p(e.get_mpz_t())) return std::nullopt;
  const long k = e.get_si();
  mpq_class base = k >= 0 ? mpq_class(q) : mpq_class(1) / mpq_class(q);
  return pow_q(base, static_cast<unsigned long>(k >= 0 ? k : -k));
}

Interval FiniteAbs::log(Prec prec) const { return mul_q(lrs::log(Interval::from_z(q, prec)), exponent); }

FiniteAbs abs_finite(const NumberField& K, const PrimeDecomposition& dec, std::size_t j, const Elem& x) {
  const long ord = valuation_at(K, dec, j, x);
  mpq_class exp(-static_cast<long>(dec.ideals[j].f) * ord, K.degree());
  exp.canonicalize();
  return {dec.q, exp};
}

Interval log_abs_archimedean(const NumberField& K, const Place& v, const Elem& x, Prec bits) {
  if (x.is_zero()) throw DomainError("absolute value of zero on the log scale");
  ComplexInterval s = K.embed_accurate(x, v.embedding, bits);
  return mul_q(log(abs(s)), v.weight);
}

Interval abs_archimedean(const NumberField& K, const Place& v, const Elem& x, Prec bits) {
  if (x.is_zero()) return Interval::from_si(0, bits);
  return exp(log_abs_archimedean(K, v, x, bits));
}

SSet build_s_set(const NumberField& K, const std::vector<Elem>& roots) {
  SSet S;
  S.places = archimedean_places(K);
  std::set<mpz_class> primes;
  bool complete = true;
  for (const auto& a : roots) {
    mpq_class n = K.norm(a);
    if (n.get_den() != 1) throw InternalError("norm of a characteristic root is not an integer");
    add_primes(primes, n.get_num(), complete, 0);
  }
  if (!complete) throw InternalError("norm factorization incomplete");
  const std::size_t d = static_cast<std::size_t>(K.degree());
  std::size_t s = S.places.size();
  for (const auto& q : primes) {
    if (!fits_word(q)) {
      S.bounded_primes.push_back(q);
      s += d;
      continue;
    }
    PrimeDecomposition dec = decompose_prime(K, q);
    if (!dec.regular) {
      S.bounded_primes.push_back(q);
      s += d;
      continue;
    }
    for (auto& v : finite_places(dec)) S.places.push_back(v);
    s += dec.ideals.size();
  }
  S.s = s;
  return S;
}

Interval log_height(const NumberField& K, const std::vector<Elem>& X, Prec bits) {
  std::vector<const Elem*> nz;
  for (const auto& x : X) {
    if (!x.is_zero()) nz.push_back(&x);
  }
  if (nz.empty()) throw DomainError("height of the zero vector");
  Interval total = Interval::from_si(0, bits);
  for (const auto& v : archimedean_places(K)) {
    Interval best = log_abs_archimedean(K, v, *nz[0], bits);
    for (std::size_t i = 1; i < nz.size(); ++i) best = max(best, log_abs_archimedean(K, v, *nz[i], bits));
    total = total + best;
  }
  std::set<mpz_class> primes;
  bool complete = true;
  for (const Elem* x : nz) {
    auto [c, den] = integral_numerator(*x);
    add_primes(primes, integer_norm(K, c), complete, kHeightRhoBudget);
    add_primes(primes, den, complete, 0);
  }
  if (!complete) throw UnavailableError("height needs a norm that could not be factored");
  for (const auto& q : primes) {
    if (!fits_word(q)) throw UnavailableError("height needs valuations at a very large prime", q.get_str());
    PrimeDecomposition dec = decompose_prime(K, q);
    for (std::size_t j = 0; j < dec.ideals.size(); ++j) {
      long best = valuation_at(K, dec, j, *nz[0]);
      for (std::size_t i = 1; i < nz.size(); ++i) best = std::min(best, valuation_at(K, dec, j, *nz[i]));
      if (best == 0) continue;
      mpq_class e(-static_cast<long>(dec.ideals[j].f) * best, K.degree());
      e.canonicalize();
      total = total + FiniteAbs{q, e}.log(bits);
    }
  }
  return total;
}

Interval height(const NumberField& K, const std::vector<Elem>& X, Prec bits) { return exp(log_height(K, X, bits)); }

ProductFormulaResult product_formula_residual(const NumberField& K, const Elem& x, Prec bits) {
  if (x.is_zero()) throw DomainError("product formula for zero");
  ProductFormulaResult out;
  Interval total = Interval::from_si(0, bits);
  for (const auto& v : archimedean_places(K)) total = total + log_abs_archimedean(K, v, x, bits);

  auto [c, den] = integral_numerator(x);
  const mpz_class norm_c = integer_norm(K, c);
  const long d = K.degree();
  IntFactorization nf = factor_integer(norm_c, kRhoBudget);
  IntFactorization df = factor_integer(den, 0);
  std::map<mpz_class, long> vnorm;  // v_q(N(x)) = v_q(N(c)) - d v_q(den)
  for (const auto& [p, e] : nf.primes) vnorm[p] += static_cast<long>(e);
  mpz_class cof = nf.cofactor;
  for (const auto& [p, e] : df.primes) {
    while (mpz_divisible_p(cof.get_mpz_t(), p.get_mpz_t())) {
      cof /= p;
      vnorm[p] += 1;
    }
    vnorm[p] -= d * static_cast<long>(e);
  }
  for (const auto& [q, vn] : vnorm) {
    bool done = false;
    if (fits_word(q)) {
      PrimeDecomposition dec = decompose_prime(K, q);
      if (dec.regular) {
        for (std::size_t j = 0; j < dec.ideals.size(); ++j) total = total + abs_finite(K, dec, j, x).log(bits);
        out.explicit_places += dec.ideals.size();
        done = true;
      }
    }
    if (!done) {
      mpq_class e(-vn, d);
      e.canonicalize();
      if (vn != 0) total = total + FiniteAbs{q, e}.log(bits);
      ++out.grouped_primes;
    }
  }
  if (cof != 1) {
    mpq_class e(-1, d);
    e.canonicalize();
    total = total + FiniteAbs{cof, e}.log(bits);
    out.unfactored_cofactor = true;
  }
  out.value = exp(total);
  return out;
}

}  // namespace lrs

#include "lrs/exterior.hpp"

#include "lrs/intfactor.hpp"
#include "lrs/rational_poly.hpp"

#include <set>

namespace lrs {

namespace {

constexpr std::uint64_t kNormRhoBudget = 200000;
constexpr long kMaxExactPower = 1L << 16;

void subsets_from(int m, int p, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= m - (p - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    subsets_from(m, p, i + 1, cur, out);
    cur.pop_back();
  }
}

mpq_class pow_signed(const mpq_class& x, long e) {
  if (e >= 0) return pow_q(x, static_cast<unsigned long>(e));
  return 1 / pow_q(x, static_cast<unsigned long>(-e));
}

mpz_class common_denominator(const Elem& x) {
  mpz_class den = 1;
  for (const auto& c : x.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  return den;
}

bool same_place(const ArchWitness& a, const ArchWitness& b) {
  return a.K == b.K && a.embedding == b.embedding && a.weight == b.weight;
}

// a <= b decided exactly when both sides are r * |sigma(z)|^w at one real
// place with w = 1/d: then a <= b iff sigma(((r_a/r_b)^d z_a)^2 - z_b^2) <= 0.
std::optional<bool> witnessed_le(const Magnitude& a, const Magnitude& b) {
  if (a.exponent != 0 || b.exponent != 0) return std::nullopt;
  if ((a.approx && !a.witness) || (b.approx && !b.witness)) return std::nullopt;
  const ArchWitness* w = a.witness ? &*a.witness : b.witness ? &*b.witness : nullptr;
  if (!w) return std::nullopt;
  if (a.witness && b.witness && !same_place(*a.witness, *b.witness)) return std::nullopt;
  const NumberField& K = *w->K;
  if (!K.embedding_is_real(w->embedding) || w->weight != mpq_class(1, K.degree())) return std::nullopt;
  const Elem za = a.witness ? a.witness->z : K.from_q(1);
  const Elem zb = b.witness ? b.witness->z : K.from_q(1);
  const mpq_class c = pow_q(a.rational / b.rational, static_cast<unsigned long>(K.degree()));
  const Elem lhs = K.mul(K.from_q(c), za);
  const Elem D = K.sub(K.mul(lhs, lhs), K.mul(zb, zb));
  if (D.is_zero()) return true;
  for (Prec bits = 64; bits <= 8192; bits *= 2) {
    const ComplexInterval v = K.embed_accurate(D, w->embedding, bits);
    if (v.re.is_negative()) return true;
    if (v.re.is_positive()) return false;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<int>> lex_subsets(int m, int p) {
  if (m < 0 || p < 0 || p > m) throw DomainError("lex_subsets needs 0 <= p <= m");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_from(m, p, 0, cur, out);
  return out;
}

Magnitude Magnitude::of_rational(const mpq_class& r) {
  if (r < 0) throw DomainError("a magnitude is nonnegative");
  if (r == 0) return of_zero();
  Magnitude m;
  m.rational = r;
  return m;
}

Magnitude Magnitude::of_log(Interval ln) {
  Magnitude m;
  m.approx = std::move(ln);
  return m;
}

Interval Magnitude::log(Prec prec) const {
  if (zero) return Interval::minus_infinity(prec);
  Interval v = lrs::log(Interval::from_q(rational, prec));
  if (exponent != 0) v = v + mul_q(lrs::log(Interval::from_z(q, prec)), exponent);
  if (approx) v = v + with_prec(*approx, prec);
  return v;
}

Magnitude operator*(const Magnitude& a, const Magnitude& b) {
  if (a.zero || b.zero) return Magnitude::of_zero();
  Magnitude r;
  r.rational = a.rational * b.rational;
  std::optional<Interval> extra;
  if (a.exponent == 0 || b.exponent == 0 || a.q == b.q) {
    r.q = a.exponent != 0 ? a.q : b.q;
    r.exponent = a.exponent + b.exponent;
  } else {
    // Two different prime powers; keep a's exactly and fold b's in.
    r.q = a.q;
    r.exponent = a.exponent;
    const Prec prec = b.approx ? b.approx->prec() : 160;
    extra = mul_q(log(Interval::from_z(b.q, prec)), b.exponent);
  }
  if (a.approx) r.approx = a.approx;
  if (b.approx) r.approx = r.approx ? *r.approx + *b.approx : *b.approx;
  if (extra) r.approx = r.approx ? *r.approx + *extra : *extra;
  if (!extra) {
    if (a.approx && b.approx) {
      if (a.witness && b.witness && same_place(*a.witness, *b.witness)) {
        r.witness = a.witness;
        r.witness->z = a.witness->K->mul(a.witness->z, b.witness->z);
      }
    } else if (a.approx) {
      r.witness = a.witness;
    } else if (b.approx) {
      r.witness = b.witness;
    }
  }
  return r;
}

Magnitude pow(const Magnitude& a, long e) {
  if (a.zero) {
    if (e < 0) throw DomainError("negative power of zero");
    return e == 0 ? Magnitude::of_rational(1) : a;
  }
  Magnitude r;
  r.rational = pow_signed(a.rational, e);
  r.q = a.q;
  r.exponent = a.exponent * e;
  if (a.approx) r.approx = mul_q(*a.approx, mpq_class(e));
  if (a.witness) {
    r.witness = a.witness;
    const NumberField& K = *a.witness->K;
    r.witness->z = e >= 0 ? K.pow(a.witness->z, static_cast<unsigned long>(e)) : K.inv(K.pow(a.witness->z, static_cast<unsigned long>(-e)));
  }
  return r;
}

bool certainly_le(const Magnitude& a, const Magnitude& b) {
  if (a.zero) return true;
  if (b.zero) return false;
  if (!a.approx && !b.approx) {
    // r_a q_a^{e_a} <= r_b q_b^{e_b}, raised to a common denominator D of
    // the exponents.
    mpz_class D;
    mpz_lcm(D.get_mpz_t(), a.exponent.get_den_mpz_t(), b.exponent.get_den_mpz_t());
    const mpq_class ea = a.exponent * D, eb = b.exponent * D;
    if (D.fits_slong_p() && abs(ea) <= kMaxExactPower && abs(eb) <= kMaxExactPower && D <= kMaxExactPower) {
      const long Dl = D.get_si();
      mpq_class lhs = pow_signed(a.rational / b.rational, Dl);
      lhs *= pow_signed(mpq_class(a.q), ea.get_num().get_si());
      lhs /= pow_signed(mpq_class(b.q), eb.get_num().get_si());
      return lhs <= 1;
    }
  }
  for (Prec prec : {160u, 640u, 2560u}) {
    const Interval la = a.log(prec), lb = b.log(prec);
    if (certainly_le(la, lb)) return true;
    if (certainly_lt(lb, la)) return false;
  }
  if (auto exact = witnessed_le(a, b)) return *exact;
  return false;
}

Magnitude max(const Magnitude& a, const Magnitude& b) {
  if (a.zero) return b;
  if (b.zero) return a;
  if (!a.approx && !b.approx) return certainly_le(a, b) ? b : a;
  if (certainly_le(a, b)) return b;
  if (certainly_le(b, a)) return a;
  const Prec prec = 160;
  return Magnitude::of_log(max(a.log(prec), b.log(prec)));
}

LocalNorm::LocalNorm(const NumberField& K, Place v, std::shared_ptr<const PrimeDecomposition> dec, Prec bits)
    : K_(&K), v_(std::move(v)), dec_(std::move(dec)), bits_(bits) {
  if (!v_.archimedean() && !dec_) throw DomainError("a finite place needs its prime decomposition");
}

Magnitude LocalNorm::of(const Elem& x) const {
  if (x.is_zero()) return Magnitude::of_zero();
  if (v_.archimedean()) {
    mpq_class r;
    if (K_->is_rational_field() && K_->as_rational(x, r)) return Magnitude::of_rational(abs(r));
    Magnitude m = Magnitude::of_log(log_abs_archimedean(*K_, v_, x, bits_));
    if (v_.kind == Place::Kind::Real) m.witness = ArchWitness{K_, v_.embedding, v_.weight, x};
    return m;
  }
  const FiniteAbs fa = abs_finite(*K_, *dec_, v_.ideal, x);
  if (auto r = fa.rational()) return Magnitude::of_rational(*r);
  Magnitude m;
  m.q = fa.q;
  m.exponent = fa.exponent;
  return m;
}

Magnitude LocalNorm::of(const std::vector<Elem>& X) const {
  Magnitude best = Magnitude::of_zero();
  for (const auto& x : X) best = max(best, of(x));
  return best;
}

Magnitude LocalNorm::weight_power(const mpz_class& c) const {
  if (c <= 0) throw DomainError("weight_power needs a positive integer");
  if (!v_.archimedean()) return Magnitude::of_rational(1);
  if (v_.weight == 1) return Magnitude::of_rational(mpq_class(c));
  Magnitude m = Magnitude::of_log(mul_q(log(Interval::from_z(c, bits_)), v_.weight));
  if (v_.kind == Place::Kind::Real) m.witness = ArchWitness{K_, v_.embedding, v_.weight, K_->from_q(mpq_class(c))};
  return m;
}

std::vector<LocalNorm> places_for(const NumberField& K, const std::vector<std::vector<Elem>>& vectors, Prec bits) {
  std::vector<LocalNorm> out;
  for (const auto& v : archimedean_places(K)) out.emplace_back(K, v, nullptr, bits);
  std::set<mpz_class> primes;
  auto collect = [&](const mpz_class& n, std::uint64_t budget) {
    if (n == 0 || abs(n) == 1) return;
    IntFactorization f = factor_integer(n, budget);
    if (!f.complete()) throw UnavailableError("a norm could not be factored", n.get_str());
    for (const auto& [p, e] : f.primes) primes.insert(p);
  };
  for (const auto& X : vectors) {
    for (const auto& x : X) {
      if (x.is_zero()) continue;
      const mpz_class den = common_denominator(x);
      // N(D x) = N(x) D^d is the norm of the integral numerator.
      const mpq_class nc = K.norm(x) * pow_q(mpq_class(den), static_cast<unsigned long>(K.degree()));
      collect(nc.get_num(), kNormRhoBudget);
      collect(den, 0);
    }
  }
  for (const auto& q : primes) {
    if (mpz_sizeinbase(q.get_mpz_t(), 2) > 62) continue;
    auto dec = std::make_shared<const PrimeDecomposition>(decompose_prime(K, q));
    if (!dec->regular) continue;
    for (const auto& v : finite_places(*dec)) out.emplace_back(K, v, dec, bits);
  }
  return out;
}

Magnitude height_magnitude(const NumberField& K, const std::vector<Elem>& X, Prec bits) {
  if (K.is_rational_field()) {
    // Scale to a primitive integer vector; H is then its largest entry.
    mpz_class den = 1, g = 0;
    std::vector<mpq_class> xs;
    for (const auto& x : X) {
      mpq_class r;
      if (!K.as_rational(x, r)) throw InternalError("element of Q is not rational");
      xs.push_back(r);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
    }
    mpz_class best = 0;
    for (const auto& r : xs) {
      const mpz_class n = abs(r.get_num() * (den / r.get_den()));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      if (n > best) best = n;
    }
    if (best == 0) throw DomainError("height of the zero vector");
    return Magnitude::of_rational(mpq_class(best / g));
  }
  return Magnitude::of_log(log_height(K, X, bits));
}

}  // namespace lrs

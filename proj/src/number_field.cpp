#include "lrs/number_field.hpp"

#include "lrs/errors.hpp"
#include "lrs/factor.hpp"
#include "lrs/modp.hpp"

namespace lrs {

namespace {

constexpr Prec kEmbedCap = 1 << 16;

// Characteristic polynomial of a square matrix over Q by Hessenberg reduction.
RationalPoly hessenberg_charpoly(std::vector<std::vector<mpq_class>> h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
    }
    const mpq_class t = h[m][m - 1];
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      mpq_class u = h[i][m - 1] / t;
      for (std::size_t j = 0; j < n; ++j) h[i][j] -= u * h[m][j];
      for (std::size_t j = 0; j < n; ++j) h[j][m] += u * h[j][i];
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<RationalPoly> p(n + 1);
  p[0] = RationalPoly::constant(1);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = p[m - 1] * RationalPoly(std::vector<mpq_class>{-h[m - 1][m - 1], 1});
    mpq_class t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h[i][i - 1];
      if (t == 0) break;
      p[m] -= p[i - 1] * mpq_class(h[i - 1][m - 1] * t);
    }
  }
  return p[n];
}

// n/d with |n|, d <= sqrt(m/2) and n/d = u mod m, if one exists.
bool rational_reconstruct(const mpz_class& u, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

}  // namespace

NumberField::NumberField(RationalPoly h) : h_(std::move(h)), cache_(std::make_shared<Cache>()) {
  if (h_.degree() < 1 || !h_.is_monic_integral()) {
    throw DomainError("field modulus must be monic integral of degree >= 1", h_.to_string());
  }
}

Elem NumberField::from_q(const mpq_class& q) const { return RationalPoly::constant(q); }

Elem NumberField::gamma() const { return reduce(RationalPoly::x()); }

Elem NumberField::inv(const Elem& a) const {
  if (a.is_zero()) throw DomainError("inverse of zero in a number field");
  if (a.is_constant()) return RationalPoly::constant(1 / a.lead());
  // Multi-modular: invert modulo word-size primes, combine by CRT, recover
  // rationals and verify exactly. Rational Euclid suffers coefficient swell.
  const std::size_t d = static_cast<std::size_t>(degree());
  std::vector<mpz_class> residues(d, 0);
  mpz_class modulus = 1, p = mpz_class(1) << 61;
  std::size_t used = 0, next_try = 1;
  for (int attempt = 0; attempt < 4000; ++attempt) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const modp::u64 pp = p.get_ui();
    bool bad_den = false;
    for (const auto& c : a.coeffs()) {
      if (mpz_divisible_ui_p(c.get_den_mpz_t(), pp)) bad_den = true;
    }
    if (bad_den) continue;
    modp::Poly ap = modp::reduce(a, pp), hp = modp::reduce(h_, pp);
    if (ap.empty()) continue;
    modp::Xgcd x = modp::xgcd(ap, hp, pp);
    if (modp::degree(x.g) != 0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      mpz_class si = i < x.s.size() ? mpz_class(static_cast<unsigned long>(x.s[i])) : mpz_class(0);
      mpz_class delta = si - residues[i];
      mpz_class inv_m;
      mpz_class mr = modulus % p;
      mpz_invert(inv_m.get_mpz_t(), mr.get_mpz_t(), p.get_mpz_t());
      delta = (delta * inv_m) % p;
      if (delta < 0) delta += p;
      residues[i] += modulus * delta;
    }
    modulus *= p;
    if (++used < next_try) continue;
    next_try *= 2;
    std::vector<mpq_class> cs(d);
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) ok = rational_reconstruct(residues[i], modulus, cs[i]);
    if (!ok) continue;
    Elem candidate(cs);
    if (mul(a, candidate) == from_q(1)) return candidate;
  }
  XgcdResult r = xgcd(a, h_);
  if (r.g.degree() != 0) throw InternalError("field modulus is reducible", h_.to_string());
  return r.s % h_;
}

Elem NumberField::pow(const Elem& a, unsigned long e) const {
  Elem r = from_q(1), b = a;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, b);
    if (e > 1) b = mul(b, b);
  }
  return r;
}

bool NumberField::as_rational(const Elem& a, mpq_class& out) const {
  if (!a.is_constant()) return false;
  out = a.is_zero() ? mpq_class(0) : a.lead();
  return true;
}

RationalPoly NumberField::charpoly(const Elem& a) const {
  const int d = degree();
  mpq_class q;
  if (as_rational(a, q)) {
    RationalPoly lin(std::vector<mpq_class>{-q, 1});
    RationalPoly r = RationalPoly::constant(1);
    for (int i = 0; i < d; ++i) r *= lin;
    return r;
  }
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(d), std::vector<mpq_class>(static_cast<std::size_t>(d), 0));
  Elem col = a;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeff(i);
    col = mul(col, gamma());
  }
  return hessenberg_charpoly(std::move(m));
}

RationalPoly NumberField::minpoly(const Elem& a) const {
  RationalPoly c = charpoly(a);
  return (c / gcd(c, c.derivative())).monic();
}

mpq_class NumberField::norm(const Elem& a) const {
  if (a.is_zero()) return 0;
  return resultant(h_, a);
}

mpq_class NumberField::trace(const Elem& a) const { return -charpoly(a).coeff(degree() - 1); }

bool NumberField::is_integral(const Elem& a) const { return charpoly(a).has_integer_coeffs(); }

std::shared_ptr<const RootSet> NumberField::roots(Prec bits) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->roots) cache_->roots = std::make_shared<const RootSet>(RootSet::isolate(h_, 64));
  if (cache_->roots->accuracy() < bits) {
    cache_->roots = std::make_shared<const RootSet>(cache_->roots->refined(bits));
  }
  return cache_->roots;
}

ComplexInterval NumberField::embed(const Elem& a, std::size_t k, Prec bits) const {
  const Prec work = bits + 32;
  if (a.is_zero()) return ComplexInterval(work);
  if (a.is_constant()) return ComplexInterval::from_q(a.lead(), work);
  auto rs = roots(bits);
  ComplexInterval z = rs->root(k);
  z = ComplexInterval(with_prec(z.re, std::max(work, z.prec())), with_prec(z.im, std::max(work, z.prec())));
  const auto& c = a.coeffs();
  ComplexInterval v = ComplexInterval::from_q(c.back(), work);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    v = v * z;
    v.re = v.re + Interval::from_q(c[i], work);
  }
  if (rs->is_real(k)) v.im = Interval::from_si(0, work);
  return v;
}

ComplexInterval NumberField::embed_accurate(const Elem& a, std::size_t k, Prec bits) const {
  if (a.is_zero()) return ComplexInterval(bits);
  for (Prec b = bits + 16;; b *= 2) {
    if (b > kEmbedCap) throw PrecisionError("embedding enclosure did not reach the requested accuracy", a.to_string("g"));
    ComplexInterval v = embed(a, k, b);
    Interval w = Interval::from_float(v.re.width()) + Interval::from_float(v.im.width());
    Interval mag = abs(v);
    if (!mag.is_positive()) continue;
    Interval scaled = mag * Interval::from_q(mpq_class(1, 1) / pow_q(mpq_class(2), static_cast<unsigned long>(bits)), b);
    if (certainly_le(w, scaled)) return v;
  }
}

int kdegree(const KPoly& f) { return static_cast<int>(f.size()) - 1; }

void knormalize(KPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

KPoly kfrom_rational(const RationalPoly& p) {
  KPoly r;
  for (const auto& c : p.coeffs()) r.push_back(RationalPoly::constant(c));
  knormalize(r);
  return r;
}

KPoly kadd(const NumberField&, const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  knormalize(r);
  return r;
}

KPoly ksub(const NumberField&, const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  knormalize(r);
  return r;
}

KPoly kmul(const NumberField& K, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  // Accumulate unreduced products, reduce once per coefficient.
  std::vector<RationalPoly> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = K.reduce(c);
  knormalize(r);
  return r;
}

KPoly kscale(const NumberField& K, const KPoly& a, const Elem& s) {
  KPoly r;
  for (const auto& c : a) r.push_back(K.mul(c, s));
  knormalize(r);
  return r;
}

std::pair<KPoly, KPoly> kdivmod(const NumberField& K, const KPoly& a, const KPoly& b) {
  if (b.empty()) throw DomainError("division by the zero polynomial over a number field");
  if (a.size() < b.size()) return {{}, a};
  KPoly r = a;
  const std::size_t db = b.size() - 1;
  KPoly q(a.size() - db);
  const Elem inv = K.inv(b.back());
  for (std::size_t i = a.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    Elem f = K.mul(r[i], inv);
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - K.mul(f, b[j]);
    q[i - db] = std::move(f);
  }
  r.resize(db);
  knormalize(r);
  knormalize(q);
  return {q, r};
}

KPoly kmonic(const NumberField& K, const KPoly& a) {
  if (a.empty()) return a;
  return kscale(K, a, K.inv(a.back()));
}

KPoly kgcd(const NumberField& K, const KPoly& a, const KPoly& b) {
  KPoly x = a, y = b;
  while (!y.empty()) {
    KPoly r = kdivmod(K, x, y).second;
    x = std::move(y);
    y = r.empty() ? r : kmonic(K, r);
  }
  return kmonic(K, x);
}

Elem keval(const NumberField& K, const KPoly& f, const Elem& x) {
  Elem v;
  for (std::size_t i = f.size(); i-- > 0;) v = K.mul(v, x) + f[i];
  return v;
}

KPoly kshift(const NumberField& K, const KPoly& f, const Elem& c) {
  const KPoly lin{c, K.from_q(1)};
  KPoly r;
  for (std::size_t i = f.size(); i-- > 0;) r = kadd(K, kmul(K, r, lin), KPoly{f[i]});
  return r;
}

Elem map_elem(const NumberField& L, const Elem& a, const Elem& image) {
  const auto& c = a.coeffs();
  Elem v;
  for (std::size_t i = c.size(); i-- > 0;) v = L.mul(v, image) + RationalPoly::constant(c[i]);
  return v;
}

KPoly kmap(const NumberField& L, const KPoly& f, const Elem& image) {
  KPoly r;
  for (const auto& c : f) r.push_back(map_elem(L, c, image));
  knormalize(r);
  return r;
}

RationalPoly knorm_shifted(const NumberField& K, const KPoly& f, long k) {
  const std::size_t deg = static_cast<std::size_t>(kdegree(f)) * static_cast<std::size_t>(K.degree());
  const Elem kg = K.mul(K.from_q(k), K.gamma());
  std::vector<mpq_class> xs, ys;
  for (std::size_t i = 0; i <= deg; ++i) {
    mpq_class x0(static_cast<long>(i));
    Elem arg = K.from_q(x0) - kg;
    xs.push_back(x0);
    ys.push_back(K.norm(keval(K, f, arg)));
  }
  // Newton divided differences, then expansion to the monomial basis.
  std::vector<mpq_class> c = ys;
  for (std::size_t j = 1; j <= deg; ++j) {
    for (std::size_t i = deg; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  }
  RationalPoly p = RationalPoly::constant(c[deg]);
  for (std::size_t j = deg; j-- > 0;) {
    p *= RationalPoly(std::vector<mpq_class>{-xs[j], 1});
    p += RationalPoly::constant(c[j]);
  }
  return p;
}

std::vector<TragerFactor> factor_over_field(const NumberField& K, const KPoly& f) {
  if (kdegree(f) < 1) throw DomainError("factorization over a field needs degree >= 1");
  KPoly g = kmonic(K, f);
  if (kdegree(g) == 1) return {{g, {}, 0}};
  std::vector<TragerFactor> out;
  if (K.is_rational_field()) {
    std::vector<mpq_class> cs;
    for (const auto& c : g) cs.push_back(c.is_zero() ? mpq_class(0) : c.lead());
    for (const auto& [fac, e] : factor_rationals(RationalPoly(cs)).factors) {
      RationalPoly m = fac.monic();
      out.push_back({kfrom_rational(m), m.degree() > 1 ? m : RationalPoly{}, 0});
    }
    return out;
  }
  RationalPoly norm;
  long k = 0;
  for (long attempt = 0;; ++attempt) {
    k = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
    norm = knorm_shifted(K, g, k);
    if (is_squarefree(norm)) break;
    if (attempt > 64) throw InternalError("no squarefree norm shift found");
  }
  const Elem kg = K.mul(K.from_q(k), K.gamma());
  for (const auto& [fac, e] : factor_rationals(norm).factors) {
    RationalPoly m = fac.monic();
    KPoly piece = kgcd(K, g, kshift(K, kfrom_rational(m), kg));
    if (kdegree(piece) < 1) throw InternalError("Trager factor vanished");
    out.push_back({piece, kdegree(piece) > 1 ? m : RationalPoly{}, k});
  }
  return out;
}

}  // namespace lrs

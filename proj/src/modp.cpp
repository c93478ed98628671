#include "lrs/modp.hpp"

#include "lrs/errors.hpp"

#include <algorithm>

namespace lrs::modp {

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw DomainError("inverse of zero in F_p");
  return powmod(a, p - 2, p);
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = addmod(r[i], b[i], p);
  normalize(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = submod(r[i], b[i], p);
  normalize(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  normalize(r);
  return r;
}

Poly scale(const Poly& a, u64 s, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
  normalize(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw DomainError("division by zero polynomial in F_p[x]");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a;
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  u64 inv = invmod(b.back(), p);
  for (std::size_t i = a.size(); i-- > db;) {
    u64 c = r[i];
    if (c == 0) continue;
    u64 f = mulmod(c, inv, p);
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = submod(r[i - db + j], mulmod(f, b[j], p), p);
  }
  r.resize(db);
  normalize(r);
  normalize(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, invmod(a.back(), p), p);
}

Poly gcd(const Poly& a, const Poly& b, u64 p) {
  Poly x = a, y = b;
  while (!y.empty()) {
    Poly r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, p);
}

Xgcd xgcd(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  u64 inv = invmod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  normalize(d);
  return d;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, u64 p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly b = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

Poly reduce(const RationalPoly& f, u64 p) {
  Poly r(f.coeffs().size());
  mpz_class pz(std::to_string(p));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const mpq_class& q = f.coeffs()[i];
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    if (den == 0) throw DomainError("coefficient denominator divisible by the modulus");
    u64 n = std::stoull(num.get_str()), d = std::stoull(den.get_str());
    r[i] = mulmod(n, invmod(d, p), p);
  }
  normalize(r);
  return r;
}

Poly reduce(const ZPoly& f, u64 p) {
  Poly r(f.size());
  mpz_class pz(std::to_string(p));
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_class v = f[i] % pz;
    if (v < 0) v += pz;
    r[i] = std::stoull(v.get_str());
  }
  normalize(r);
  return r;
}

bool is_squarefree(const Poly& f, u64 p) {
  if (degree(f) <= 0) return true;
  Poly d = derivative(f, p);
  if (d.empty()) return false;
  return degree(gcd(f, d, p)) == 0;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 p) {
  std::vector<std::pair<Poly, int>> out;
  Poly g = f;
  const Poly x{0, 1};
  Poly h = rem(x, g, p);
  mpz_class pz(std::to_string(p));
  for (int i = 1; degree(g) >= 2 * i; ++i) {
    h = powmod(h, pz, g, p);
    Poly d = gcd(sub(h, x, p), g, p);
    if (degree(d) > 0) {
      out.emplace_back(d, i);
      g = divmod(g, d, p).first;
      h = rem(h, g, p);
    }
  }
  if (degree(g) > 0) out.emplace_back(monic(g, p), degree(g));
  return out;
}

namespace {

Poly random_poly(int deg_bound, u64 p, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, p - 1);
  Poly a(static_cast<std::size_t>(deg_bound));
  for (auto& c : a) c = dist(rng);
  normalize(a);
  return a;
}

void equal_degree_rec(const Poly& f, int deg, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == deg) {
    out.push_back(f);
    return;
  }
  const int n = degree(f);
  mpz_class e;
  if (p != 2) {
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(deg));
    e = (e - 1) / 2;
  }
  for (;;) {
    Poly a = random_poly(n, p, rng);
    if (degree(a) <= 0) continue;
    Poly g = gcd(a, f, p);
    if (degree(g) <= 0) {
      Poly b;
      if (p == 2) {
        // Trace map a + a^2 + ... + a^{2^{deg-1}} onto F_2.
        b = a;
        Poly t = a;
        for (int i = 1; i < deg; ++i) {
          t = rem(mul(t, t, p), f, p);
          b = add(b, t, p);
        }
      } else {
        b = sub(powmod(a, e, f, p), Poly{1}, p);
      }
      g = gcd(b, f, p);
    }
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree_rec(g, deg, p, rng, out);
      equal_degree_rec(divmod(f, g, p).first, deg, p, rng, out);
      return;
    }
  }
}

// Squarefree factorization over F_p, valid in positive characteristic.
void squarefree_rec(const Poly& f, u64 p, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (degree(f) <= 0) return;
  Poly c = gcd(f, derivative(f, p), p);
  Poly w = divmod(f, c, p).first;
  int i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly z = divmod(w, y, p).first;
    if (degree(z) > 0) out.emplace_back(monic(z, p), i * mult);
    ++i;
    w = y;
    c = divmod(c, y, p).first;
  }
  if (degree(c) > 0) {
    // c is a p-th power: c(x) = d(x^p), and a^{1/p} = a in F_p.
    Poly d(static_cast<std::size_t>(degree(c)) / p + 1, 0);
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = c[k * p];
    normalize(d);
    squarefree_rec(monic(d, p), p, mult * static_cast<int>(p), out);
  }
}

}  // namespace

std::vector<Poly> equal_degree(const Poly& f, int deg, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  equal_degree_rec(f, deg, p, rng, out);
  return out;
}

std::pair<u64, std::vector<Factor>> factor(const Poly& f, u64 p, std::mt19937_64& rng) {
  if (f.empty()) throw DomainError("factorization of the zero polynomial");
  u64 lc = f.back();
  std::vector<Factor> out;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_rec(monic(f, p), p, 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [prod, deg] : distinct_degree(part, p)) {
      for (auto& g : equal_degree(prod, deg, p, rng)) out.push_back({monic(g, p), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    if (a.poly != b.poly) return std::lexicographical_compare(a.poly.rbegin(), a.poly.rend(), b.poly.rbegin(), b.poly.rend());
    return a.multiplicity < b.multiplicity;
  });
  return {lc, out};
}

}  // namespace lrs::modp

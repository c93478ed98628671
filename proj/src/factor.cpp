#include "lrs/factor.hpp"

#include "lrs/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace lrs {

namespace {

using modp::u64;

// Arithmetic in (Z/M)[x] on ZPoly with coefficients kept in [0, M).
void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zreduce(const ZPoly& a, const mpz_class& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  }
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zreduce(r, m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zreduce(r, m);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zreduce(r, m);
}

// Division by a monic polynomial mod m.
std::pair<ZPoly, ZPoly> zdivmod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) return {{}, a};
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class c = r[i] % m;
    if (c < 0) c += m;
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] -= c * b[j];
      mpz_fdiv_r(r[i - db + j].get_mpz_t(), r[i - db + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  r.resize(db);
  return {zreduce(q, m), zreduce(r, m)};
}

ZPoly from_modp(const modp::Poly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_set_ui(r[i].get_mpz_t(), a[i]);
  return r;
}

modp::Poly product_modp(const std::vector<modp::Poly>& fs, std::size_t lo, std::size_t hi, u64 p) {
  modp::Poly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = modp::mul(r, fs[i], p);
  return r;
}

// Quadratic Hensel lifting of F = g*h from modulus p to M (both monic).
void lift_pair(const ZPoly& F, ZPoly& g, ZPoly& h, ZPoly s, ZPoly t, u64 p, const mpz_class& M) {
  mpz_class m = p;
  while (m < M) {
    mpz_class m2 = m * m;
    if (m2 > M) m2 = M;
    ZPoly e = zsub(F, zmul(g, h, m2), m2);
    auto [q, r] = zdivmod(zmul(s, e, m2), h, m2);
    ZPoly g2 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
    ZPoly h2 = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{1}, m2);
    auto [c, d] = zdivmod(zmul(s, b, m2), h2, m2);
    s = zsub(s, d, m2);
    t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g2, m2), m2), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
}

void lift_tree(const ZPoly& F, const std::vector<modp::Poly>& fs, std::size_t lo, std::size_t hi, u64 p,
               const mpz_class& M, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(F);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  modp::Poly g0 = product_modp(fs, lo, mid, p);
  modp::Poly h0 = product_modp(fs, mid, hi, p);
  modp::Xgcd x = modp::xgcd(g0, h0, p);
  if (modp::degree(x.g) != 0) throw InternalError("Hensel lifting of factors that are not coprime mod p");
  ZPoly g = from_modp(g0), h = from_modp(h0);
  lift_pair(F, g, h, from_modp(x.s), from_modp(x.t), p, M);
  lift_tree(g, fs, lo, mid, p, M, out);
  lift_tree(h, fs, mid, hi, p, M, out);
}

std::vector<u64> small_primes(u64 limit) {
  std::vector<bool> sieve(limit + 1, true);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return out;
}

// Degrees reachable as sums of a sub-multiset of `degs`.
std::set<int> subset_sums(const std::vector<int>& degs) {
  std::set<int> sums{0};
  for (int d : degs) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

mpz_class sqrt_ceil(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

// Exact division over Z; returns false when b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero() || !q.has_integer_coeffs()) return false;
  quotient.assign(q.coeffs().size(), 0);
  for (std::size_t i = 0; i < quotient.size(); ++i) quotient[i] = q.coeffs()[i].get_num();
  return true;
}

ZPoly symmetric(const ZPoly& a, const mpz_class& M) {
  ZPoly r = zreduce(a, M);
  mpz_class half = M / 2;
  for (auto& c : r) {
    if (c > half) c -= M;
  }
  ztrim(r);
  return r;
}

ZPoly zprimitive(const ZPoly& a) {
  mpz_class c = content(a);
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  if (!r.empty() && r.back() < 0) {
    for (auto& x : r) x = -x;
  }
  return r;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Zassenhaus for a squarefree primitive polynomial with nonzero constant term.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  const mpz_class& lc = f.back();

  static const std::vector<u64> primes = small_primes(20000);
  struct Candidate {
    u64 p;
    std::vector<int> degs;
  };
  std::vector<Candidate> cands;
  std::set<int> allowed;
  for (int i = 0; i <= n; ++i) allowed.insert(i);
  for (u64 p : primes) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    modp::Poly fp = modp::reduce(f, p);
    if (!modp::is_squarefree(fp, p)) continue;
    std::vector<int> degs;
    for (const auto& [prod, d] : modp::distinct_degree(modp::monic(fp, p), p)) {
      for (int k = 0; k < modp::degree(prod) / d; ++k) degs.push_back(d);
    }
    if (degs.size() == 1) return {f};
    std::set<int> sums = subset_sums(degs), inter;
    std::set_intersection(allowed.begin(), allowed.end(), sums.begin(), sums.end(), std::inserter(inter, inter.begin()));
    allowed = std::move(inter);
    if (allowed.size() == 2) return {f};  // only 0 and n
    cands.push_back({p, std::move(degs)});
    if (cands.size() >= 7) break;
  }
  if (cands.empty()) throw CapacityError("no suitable prime for modular factorization");

  const Candidate& best = *std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.degs.size() < b.degs.size();
  });
  const u64 p = best.p;
  std::mt19937_64 rng(p);
  auto [lcp, mod_factors] = modp::factor(modp::reduce(f, p), p, rng);
  std::vector<modp::Poly> fs;
  for (auto& fac : mod_factors) fs.push_back(fac.poly);

  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound = 2 * abs(lc) * (mpz_class(1) << n) * sqrt_ceil(norm2);
  unsigned k = 1;
  mpz_class M = p;
  while (M <= bound) {
    M *= p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, fs, p, k);

  std::vector<ZPoly> result;
  ZPoly F = f;
  std::vector<ZPoly> remaining = std::move(lifted);
  for (std::size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    const std::size_t r = remaining.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      int deg = 0;
      for (auto i : idx) deg += static_cast<int>(remaining[i].size()) - 1;
      if (allowed.count(deg)) {
        const mpz_class flc = F.back();
        mpz_class c0 = flc;
        for (auto i : idx) c0 = (c0 * remaining[i][0]) % M;
        ZPoly c0p = symmetric(ZPoly{c0}, M);
        mpz_class cst = c0p.empty() ? mpz_class(0) : c0p[0];
        if (cst != 0 && mpz_divisible_p(mpz_class(flc * F[0]).get_mpz_t(), cst.get_mpz_t())) {
          ZPoly cand{flc};
          for (auto i : idx) cand = zmul(cand, remaining[i], M);
          cand = zprimitive(symmetric(cand, M));
          ZPoly quotient;
          if (zdivides(F, cand, quotient)) {
            result.push_back(cand);
            F = zprimitive(quotient);
            std::vector<ZPoly> rest;
            for (std::size_t i = 0, j = 0; i < r; ++i) {
              if (j < s && idx[j] == i) {
                ++j;
              } else {
                rest.push_back(std::move(remaining[i]));
              }
            }
            remaining = std::move(rest);
            found = true;
            break;
          }
        }
      }
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i-- > 0) {
        if (idx[i] != i + r - s) break;
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (F.size() > 1) result.push_back(F);
  return result;
}

}  // namespace

RationalPoly Factorization::expand() const {
  RationalPoly r = RationalPoly::constant(unit);
  for (const auto& [f, e] : factors) {
    for (int i = 0; i < e; ++i) r *= f;
  }
  return r;
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<modp::Poly>& factors, u64 p, unsigned k) {
  if (factors.empty()) throw DomainError("Hensel lifting needs at least one factor");
  const mpz_class M = pow_z(mpz_class(static_cast<unsigned long>(p)), k);
  mpz_class inv;
  mpz_class lc = f.back();
  if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t()) == 0) {
    throw DomainError("leading coefficient not invertible modulo p");
  }
  ZPoly F(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) F[i] = f[i] * inv;
  F = zreduce(F, M);
  std::vector<ZPoly> out;
  lift_tree(F, factors, 0, factors.size(), p, M, out);
  return out;
}

std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f) {
  ZPoly g = f;
  ztrim(g);
  if (g.size() <= 1) throw DomainError("factorization of a constant polynomial");
  std::vector<ZPoly> out;
  if (g[0] == 0) {
    out.push_back(ZPoly{0, 1});
    g.erase(g.begin());
    if (!g.empty() && g[0] == 0) throw DomainError("polynomial is not squarefree");
  }
  if (g.size() > 1) {
    for (auto& h : zassenhaus(zprimitive(g))) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), zpoly_less);
  return out;
}

Factorization factor_rationals(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
  Factorization out;
  for (const auto& [part, e] : squarefree_decomposition(p)) {
    if (part.degree() < 1) continue;
    auto [unit, prim] = primitive_part(part);
    (void)unit;
    for (auto& g : factor_squarefree_integer(prim)) out.factors.emplace_back(to_rational(g), e);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    const auto& x = a.first.coeffs();
    const auto& y = b.first.coeffs();
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] != y[i]) return x[i] < y[i];
    }
    return a.second < b.second;
  });
  mpq_class lead = 1;
  for (const auto& [f, e] : out.factors) lead *= pow_q(f.lead(), static_cast<unsigned long>(e));
  out.unit = p.lead() / lead;
  return out;
}

ModFactorization factor_mod_prime(const RationalPoly& p, const mpz_class& q) {
  if (q < 2 || !mpz_probab_prime_p(q.get_mpz_t(), 30)) throw DomainError("modulus is not prime", q.get_str());
  if (mpz_sizeinbase(q.get_mpz_t(), 2) > 63) throw CapacityError("prime exceeds machine word", q.get_str());
  const u64 qq = std::stoull(q.get_str());
  modp::Poly f = modp::reduce(p, qq);
  if (f.empty()) throw DomainError("polynomial vanishes modulo the prime", q.get_str());
  std::mt19937_64 rng(qq);
  auto [lc, factors] = modp::factor(f, qq, rng);
  ModFactorization out;
  out.prime = q;
  mpz_set_ui(out.lead.get_mpz_t(), lc);
  out.factors = std::move(factors);
  return out;
}

}  // namespace lrs

#include "lrs/splitting_field.hpp"

#include "lrs/errors.hpp"

#include <algorithm>
#include <deque>

namespace lrs {

namespace {

struct Pending {
  KPoly poly;
  std::size_t source;
};

Elem linear_root(const NumberField& K, const KPoly& p) {
  // p monic of degree 1: x + c0.
  return K.neg(K.div(p[0], p[1]));
}

// Solve m * c = rhs over Q for a square nonsingular m.
std::vector<mpq_class> solve(std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular system while expressing the old generator");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const mpq_class inv = 1 / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      mpq_class f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t r = n; r-- > 0;) {
    mpq_class acc = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= m[r][c] * x[c];
    x[r] = acc / m[r][r];
  }
  return x;
}

// gamma written in the powers of gamma' = theta + k*gamma, where theta is a
// root of the monic irreducible f over K. Works in the tower K[theta]/(f):
// coordinates of gamma'^j in the basis gamma^i theta^j give a linear system.
Elem old_generator_in(const NumberField& K, const KPoly& f, long k, const NumberField& L) {
  const std::size_t d = static_cast<std::size_t>(K.degree());
  const std::size_t n = static_cast<std::size_t>(kdegree(f));
  const std::size_t D = d * n;
  const Elem kg = K.mul(K.from_q(k), K.gamma());
  std::vector<std::vector<mpq_class>> m(D, std::vector<mpq_class>(D, 0));
  KPoly power{K.from_q(1)};
  for (std::size_t j = 0; j < D; ++j) {
    for (std::size_t t = 0; t < power.size(); ++t) {
      for (std::size_t i = 0; i < d; ++i) m[t * d + i][j] = power[t].coeff(static_cast<int>(i));
    }
    // power *= theta + k*gamma, reduced by f.
    KPoly next(power.size() + 1);
    for (std::size_t t = 0; t < power.size(); ++t) {
      next[t + 1] += power[t];
      next[t] += K.mul(power[t], kg);
    }
    knormalize(next);
    if (static_cast<std::size_t>(kdegree(next)) == n) {
      Elem top = next.back();
      for (std::size_t t = 0; t <= n; ++t) next[t] -= K.mul(top, f[t]);
      knormalize(next);
    }
    power = std::move(next);
  }
  std::vector<mpq_class> rhs(D, 0);
  rhs[1] = 1;  // gamma = gamma^1 theta^0
  return L.reduce(RationalPoly(solve(std::move(m), std::move(rhs))));
}

}  // namespace

SplittingField splitting_field(const std::vector<RationalPoly>& factors, int degree_cap) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1 || !factors[i].is_monic_integral()) {
      throw DomainError("splitting field inputs must be monic integral polynomials", factors[i].to_string());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[i] == factors[j]) throw DomainError("splitting field inputs must be distinct", factors[i].to_string());
    }
  }
  NumberField K = NumberField::rationals();
  std::deque<Pending> pending;
  for (std::size_t i = 0; i < factors.size(); ++i) pending.push_back({kfrom_rational(factors[i]), i});
  std::vector<FieldRoot> found;

  while (!pending.empty()) {
    Pending item = std::move(pending.front());
    pending.pop_front();
    if (kdegree(item.poly) == 1) {
      found.push_back({linear_root(K, kmonic(K, item.poly)), item.source});
      continue;
    }
    std::vector<TragerFactor> parts = factor_over_field(K, item.poly);
    const TragerFactor* adjoin = nullptr;
    std::vector<KPoly> rest;
    for (const auto& part : parts) {
      if (kdegree(part.factor) == 1) {
        found.push_back({linear_root(K, part.factor), item.source});
      } else if (!adjoin) {
        adjoin = &part;
      } else {
        rest.push_back(part.factor);
      }
    }
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) pending.push_front({*it, item.source});
    if (!adjoin) continue;

    const long new_degree = static_cast<long>(K.degree()) * kdegree(adjoin->factor);
    if (new_degree > degree_cap) {
      throw CapacityError("splitting field degree exceeds the cap of " + std::to_string(degree_cap),
                          "degree would reach " + std::to_string(new_degree));
    }
    NumberField L(adjoin->norm);
    Elem gamma_in_l, theta;
    if (K.is_rational_field()) {
      gamma_in_l = L.from_q(1);
      theta = L.gamma();
    } else {
      const long k = adjoin->shift;
      gamma_in_l = old_generator_in(K, adjoin->factor, k, L);
      if (!map_elem(L, K.modulus(), gamma_in_l).is_zero()) {
        throw InternalError("primitive element does not determine the old generator");
      }
      theta = L.gamma() - L.mul(L.from_q(k), gamma_in_l);
    }
    for (auto& r : found) r.value = map_elem(L, r.value, gamma_in_l);
    for (auto& p : pending) p.poly = kmap(L, p.poly, gamma_in_l);
    KPoly f = kmap(L, adjoin->factor, gamma_in_l);
    auto [cof, rem] = kdivmod(L, f, KPoly{L.neg(theta), L.from_q(1)});
    if (!rem.empty()) throw InternalError("adjoined element is not a root of its factor");
    found.push_back({theta, item.source});
    if (kdegree(cof) >= 1) pending.push_front({cof, item.source});
    K = L;
  }

  SplittingField out;
  out.field = K;
  auto rs = K.roots();
  out.r1 = static_cast<int>(rs->real_count());
  out.r2 = (K.degree() - out.r1) / 2;
  // Order roots within each factor by their image under the identity embedding.
  struct Keyed {
    FieldRoot root;
    Float re, im;
  };
  std::vector<Keyed> keyed;
  for (auto& r : found) {
    ComplexInterval v = K.embed(r.value, 0, 64);
    keyed.push_back({r, v.re.mid(), v.im.mid()});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.root.factor_index != b.root.factor_index) return a.root.factor_index < b.root.factor_index;
    int c = mpfr_cmp(a.re.get(), b.re.get());
    if (c != 0) return c < 0;
    return mpfr_cmp(a.im.get(), b.im.get()) < 0;
  });
  for (auto& k : keyed) out.roots.push_back(std::move(k.root));
  return out;
}

}  // namespace lrs

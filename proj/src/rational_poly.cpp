#include "lrs/rational_poly.hpp"

#include "lrs/errors.hpp"

#include <sstream>

namespace lrs {

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  normalize();
}

RationalPoly::RationalPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

RationalPoly RationalPoly::constant(const mpq_class& c) { return RationalPoly(std::vector<mpq_class>{c}); }

RationalPoly RationalPoly::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::from_integers(const std::vector<mpz_class>& coeffs) {
  std::vector<mpq_class> v;
  v.reserve(coeffs.size());
  for (const auto& z : coeffs) v.emplace_back(z);
  return RationalPoly(std::move(v));
}

void RationalPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly(), a};
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  mpq_class inv_lead = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const mpq_class& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    mpq_class f = top * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly operator/(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).first; }
RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return RationalPoly(std::move(d));
}

mpq_class RationalPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

RationalPoly RationalPoly::compose(const RationalPoly& g) const {
  RationalPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + constant(*it);
  return r;
}

RationalPoly RationalPoly::shift(const mpq_class& t) const { return compose(RationalPoly(std::vector<mpq_class>{t, 1})); }

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / lead());
}

bool RationalPoly::has_integer_coeffs() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

bool RationalPoly::is_monic_integral() const { return !is_zero() && lead() == 1 && has_integer_coeffs(); }

std::string RationalPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    mpq_class c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b;
  while (!y.is_zero()) {
    RationalPoly r = x % y;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.monic();
}

XgcdResult xgcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0 = RationalPoly::constant(1), s1;
  RationalPoly t0, t1 = RationalPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    RationalPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

mpq_class resultant(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int da = a.degree(), db = b.degree();
  if (da == 0) return pow_q(a.lead(), db);
  if (db == 0) return pow_q(b.lead(), da);
  // Res(a,b) = (-1)^{da db} lc(b)^{da - deg r} Res(b, r), r = a mod b.
  mpq_class acc = 1;
  RationalPoly x = a, y = b;
  while (true) {
    int dx = x.degree(), dy = y.degree();
    if (dy == 0) return acc * pow_q(y.lead(), dx);
    RationalPoly r = x % y;
    if (r.is_zero()) return 0;
    int dr = r.degree();
    if ((dx % 2 == 1) && (dy % 2 == 1)) acc = -acc;
    acc *= pow_q(y.lead(), dx - dr);
    x = std::move(y);
    y = std::move(r);
  }
}

mpq_class discriminant(const RationalPoly& p) {
  int n = p.degree();
  if (n < 1) throw DomainError("discriminant requires degree >= 1");
  if (n == 1) return 1;
  mpq_class r = resultant(p, p.derivative()) / p.lead();
  long e = static_cast<long>(n) * (n - 1) / 2;
  return (e % 2 == 0) ? r : mpq_class(-r);
}

std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<RationalPoly, int>> out;
  RationalPoly f = p.monic();
  if (f.degree() == 0) return out;
  RationalPoly fp = f.derivative();
  RationalPoly a = gcd(f, fp);
  RationalPoly b = f / a;
  RationalPoly c = fp / a;
  RationalPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RationalPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool is_squarefree(const RationalPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::pair<mpq_class, ZPoly> primitive_part(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("primitive part of the zero polynomial");
  mpz_class den = 1;
  for (const auto& q : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) z.push_back(mpz_class(q.get_num() * (den / q.get_den())));
  mpz_class g = content(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  mpq_class unit(g, den);
  unit.canonicalize();
  return {unit, z};
}

RationalPoly to_rational(const ZPoly& p) { return RationalPoly::from_integers(p); }

}  // namespace lrs

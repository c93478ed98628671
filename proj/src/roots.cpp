#include "lrs/roots.hpp"

#include "lrs/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lrs {

namespace {

constexpr Prec kPrecisionCap = 1 << 16;

// Plain complex floating point at a fixed precision, round-to-nearest.
struct Cf {
  Float re, im;
  explicit Cf(Prec p) : re(p), im(p) {}
};

void cset(Cf& r, const Cf& a) {
  mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), a.im.get(), MPFR_RNDN);
}

void cmul(Cf& r, const Cf& a, const Cf& b, Float& t1, Float& t2) {
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  Float re(r.re.prec());
  mpfr_sub(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_swap(r.re.get(), re.get());
}

// r = a / b
void cdiv(Cf& r, const Cf& a, const Cf& b, Float& t1, Float& t2) {
  Prec p = r.re.prec();
  Float den(p), re(p), im(p);
  mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), re.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), im.get(), den.get(), MPFR_RNDN);
}

void cabs(Float& r, const Cf& a) { mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN); }

Float with_precision(const Float& x, Prec p) {
  Float r(p);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

// Aberth-Ehrlich iteration in place; returns once corrections fall below
// 2^-(prec-8) relative, or after an iteration budget.
void aberth(const RationalPoly& poly, std::vector<Cf>& z, Prec prec) {
  const std::size_t n = z.size();
  std::vector<Float> a;
  for (const auto& c : poly.coeffs()) a.push_back(Float::from_q(c, prec));
  Float t1(prec), t2(prec), mag(prec), corr(prec), tol(prec);
  mpfr_set_ui_2exp(tol.get(), 1, -(prec - 8), MPFR_RNDN);
  Cf pv(prec), dv(prec), ratio(prec), s(prec), diff(prec), inv(prec), w(prec), one(prec), den(prec);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  const int budget = 60 + 8 * static_cast<int>(n);
  for (int iter = 0; iter < budget; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      // Horner for p and p'.
      mpfr_set(pv.re.get(), a.back().get(), MPFR_RNDN);
      mpfr_set_zero(pv.im.get(), 1);
      mpfr_set_zero(dv.re.get(), 1);
      mpfr_set_zero(dv.im.get(), 1);
      for (std::size_t k = a.size() - 1; k-- > 0;) {
        cmul(dv, dv, z[i], t1, t2);
        mpfr_add(dv.re.get(), dv.re.get(), pv.re.get(), MPFR_RNDN);
        mpfr_add(dv.im.get(), dv.im.get(), pv.im.get(), MPFR_RNDN);
        cmul(pv, pv, z[i], t1, t2);
        mpfr_add(pv.re.get(), pv.re.get(), a[k].get(), MPFR_RNDN);
      }
      if (mpfr_zero_p(pv.re.get()) && mpfr_zero_p(pv.im.get())) continue;
      if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) {
        mpfr_set_ui_2exp(dv.re.get(), 1, -(prec / 2), MPFR_RNDN);
      }
      cdiv(ratio, pv, dv, t1, t2);
      mpfr_set_zero(s.re.get(), 1);
      mpfr_set_zero(s.im.get(), 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        mpfr_sub(diff.re.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
        mpfr_sub(diff.im.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
        if (mpfr_zero_p(diff.re.get()) && mpfr_zero_p(diff.im.get())) {
          mpfr_set_ui_2exp(diff.re.get(), 1, -(prec / 2), MPFR_RNDN);
        }
        cdiv(inv, one, diff, t1, t2);
        mpfr_add(s.re.get(), s.re.get(), inv.re.get(), MPFR_RNDN);
        mpfr_add(s.im.get(), s.im.get(), inv.im.get(), MPFR_RNDN);
      }
      // w = ratio / (1 - ratio * s)
      cmul(den, ratio, s, t1, t2);
      mpfr_ui_sub(den.re.get(), 1, den.re.get(), MPFR_RNDN);
      mpfr_neg(den.im.get(), den.im.get(), MPFR_RNDN);
      if (mpfr_zero_p(den.re.get()) && mpfr_zero_p(den.im.get())) {
        cset(w, ratio);
      } else {
        cdiv(w, ratio, den, t1, t2);
      }
      mpfr_sub(z[i].re.get(), z[i].re.get(), w.re.get(), MPFR_RNDN);
      mpfr_sub(z[i].im.get(), z[i].im.get(), w.im.get(), MPFR_RNDN);
      cabs(corr, w);
      cabs(mag, z[i]);
      if (mpfr_cmp_ui(mag.get(), 1) < 0) mpfr_set_ui(mag.get(), 1, MPFR_RNDN);
      mpfr_mul(mag.get(), mag.get(), tol.get(), MPFR_RNDN);
      if (mpfr_greater_p(corr.get(), mag.get())) converged = false;
    }
    if (converged) return;
  }
}

ComplexInterval point(const Float& re, const Float& im) {
  return ComplexInterval(Interval::from_float(re), Interval::from_float(im));
}

Interval radius_interval(const Float& r) { return Interval::from_float(r); }

}  // namespace

std::size_t RootSet::real_count() const { return static_cast<std::size_t>(std::count(real_.begin(), real_.end(), true)); }

ComplexInterval RootSet::root(std::size_t k) const {
  Prec p = centers_re_[k].prec();
  Float lo(p), hi(p);
  mpfr_sub(lo.get(), centers_re_[k].get(), radii_[k].get(), MPFR_RNDD);
  mpfr_add(hi.get(), centers_re_[k].get(), radii_[k].get(), MPFR_RNDU);
  Interval re(lo, hi);
  if (real_[k]) return ComplexInterval(re, Interval::from_si(0, p));
  Float ilo(p), ihi(p);
  mpfr_sub(ilo.get(), centers_im_[k].get(), radii_[k].get(), MPFR_RNDD);
  mpfr_add(ihi.get(), centers_im_[k].get(), radii_[k].get(), MPFR_RNDU);
  return ComplexInterval(re, Interval(ilo, ihi));
}

// Computes inclusion radii at precision `prec` for the current centers and
// checks disjointness, realness and conjugate pairing.
bool RootSet::certify(Prec prec) {
  const std::size_t n = size();
  const auto& coeffs = poly_.coeffs();
  std::vector<Interval> a;
  for (const auto& c : coeffs) a.push_back(Interval::from_q(c, prec));
  std::vector<ComplexInterval> z;
  for (std::size_t i = 0; i < n; ++i) z.push_back(point(centers_re_[i], centers_im_[i]));

  radii_.assign(n, Float(prec));
  const Interval deg = Interval::from_si(static_cast<long>(n), prec);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexInterval pv(ComplexInterval(a.back(), Interval::from_si(0, prec)));
    for (std::size_t k = a.size() - 1; k-- > 0;) {
      pv = pv * z[i];
      pv.re = pv.re + a[k];
    }
    ComplexInterval den(a.back(), Interval::from_si(0, prec));
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) den = den * (z[i] - z[j]);
    }
    Interval d2 = abs2(den);
    if (!d2.is_positive()) return false;
    Interval r = deg * sqrt(abs2(pv) / d2);
    radii_[i] = r.hi();
  }
  auto disjoint = [&](const ComplexInterval& ci, std::size_t i, std::size_t j) {
    Interval sum = radius_interval(radii_[i]) + radius_interval(radii_[j]);
    return certainly_lt(sqr(sum), abs2(ci - z[j]));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!disjoint(z[i], i, j)) return false;
    }
  }
  real_.assign(n, false);
  conj_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Interval im = abs(z[i].im);
    if (certainly_lt(radius_interval(radii_[i]), im)) continue;
    ComplexInterval c = conj(z[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && !disjoint(c, i, j)) return false;
    }
    real_[i] = true;
    conj_[i] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (real_[i]) continue;
    ComplexInterval c = conj(z[i]);
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && !real_[j] && !disjoint(c, i, j)) {
        conj_[i] = j;
        ++hits;
      }
    }
    if (hits != 1) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (conj_[conj_[i]] != i) return false;
    if (real_[i]) mpfr_set_zero(centers_im_[i].get(), 1);
  }
  // Guaranteed relative accuracy in bits.
  Prec acc = kPrecisionCap;
  for (std::size_t i = 0; i < n; ++i) {
    if (mpfr_zero_p(radii_[i].get())) continue;
    Float mag(prec);
    mpfr_hypot(mag.get(), centers_re_[i].get(), centers_im_[i].get(), MPFR_RNDD);
    mpfr_exp_t lb = mpfr_cmp_ui(mag.get(), 1) >= 0 ? mpfr_get_exp(mag.get()) - 1 : 0;
    mpfr_exp_t bits = lb - mpfr_get_exp(radii_[i].get());
    acc = std::min<Prec>(acc, std::max<mpfr_exp_t>(0, bits));
  }
  accuracy_ = acc;
  return true;
}

RootSet RootSet::isolate(const RationalPoly& p, Prec prec) {
  if (p.degree() < 1) throw DomainError("root isolation needs degree >= 1");
  if (!is_squarefree(p)) throw DomainError("root isolation needs a squarefree polynomial", p.to_string());
  RootSet rs;
  rs.poly_ = p;
  const std::size_t n = static_cast<std::size_t>(p.degree());
  Prec work = std::max<Prec>(prec, 64);
  if (n == 1) {
    mpq_class r = -p.coeff(0) / p.coeff(1);
    Interval box = Interval::from_q(r, work);
    rs.centers_re_.push_back(box.lo());
    rs.centers_im_.emplace_back(work);
    Float rad(work);
    mpfr_sub(rad.get(), box.hi().get(), box.lo().get(), MPFR_RNDU);
    rs.radii_.push_back(rad);
    rs.real_ = {true};
    rs.conj_ = {0};
    rs.accuracy_ = kPrecisionCap;
    if (!rad.is_zero()) {
      Float mag(work);
      mpfr_abs(mag.get(), box.lo().get(), MPFR_RNDD);
      mpfr_exp_t lb = mpfr_cmp_ui(mag.get(), 1) >= 0 ? mpfr_get_exp(mag.get()) - 1 : 0;
      rs.accuracy_ = std::max<mpfr_exp_t>(0, lb - mpfr_get_exp(rad.get()));
    }
    return rs;
  }

  // Initial points on a circle enclosing all roots (Cauchy bound).
  mpq_class bound = 0;
  for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, mpq_class(abs(p.coeff(i) / p.lead())));
  bound += 1;
  std::vector<Cf> z;
  {
    Float ang(work), r = Float::from_q(bound, work), pi2(work), c(work), s(work);
    mpfr_const_pi(pi2.get(), MPFR_RNDN);
    mpfr_mul_ui(pi2.get(), pi2.get(), 2, MPFR_RNDN);
    for (std::size_t k = 0; k < n; ++k) {
      mpfr_mul_ui(ang.get(), pi2.get(), static_cast<unsigned long>(k), MPFR_RNDN);
      mpfr_div_ui(ang.get(), ang.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_add_d(ang.get(), ang.get(), 0.7, MPFR_RNDN);
      mpfr_sin_cos(s.get(), c.get(), ang.get(), MPFR_RNDN);
      Cf zk(work);
      mpfr_mul(zk.re.get(), r.get(), c.get(), MPFR_RNDN);
      mpfr_mul(zk.im.get(), r.get(), s.get(), MPFR_RNDN);
      z.push_back(std::move(zk));
    }
  }
  for (;;) {
    aberth(p, z, work);
    rs.centers_re_.clear();
    rs.centers_im_.clear();
    for (auto& zk : z) {
      rs.centers_re_.push_back(zk.re);
      rs.centers_im_.push_back(zk.im);
    }
    if (rs.certify(work)) break;
    if (work >= kPrecisionCap) throw PrecisionError("root isolation did not certify", p.to_string());
    work *= 2;
    for (auto& zk : z) {
      zk.re = with_precision(zk.re, work);
      zk.im = with_precision(zk.im, work);
    }
  }

  // Canonical order: reals ascending, then non-real by (re, im).
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (rs.real_[a] != rs.real_[b]) return static_cast<bool>(rs.real_[a]);
    int c = mpfr_cmp(rs.centers_re_[a].get(), rs.centers_re_[b].get());
    if (c != 0) return c < 0;
    return mpfr_cmp(rs.centers_im_[a].get(), rs.centers_im_[b].get()) < 0;
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[idx[k]] = k;
  RootSet sorted;
  sorted.poly_ = rs.poly_;
  sorted.accuracy_ = rs.accuracy_;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = idx[k];
    sorted.centers_re_.push_back(rs.centers_re_[i]);
    sorted.centers_im_.push_back(rs.centers_im_[i]);
    sorted.radii_.push_back(rs.radii_[i]);
    sorted.real_.push_back(rs.real_[i]);
    sorted.conj_.push_back(pos[rs.conj_[i]]);
  }
  if (sorted.accuracy_ < prec) return sorted.refined(prec);
  return sorted;
}

RootSet RootSet::refined(Prec bits) const {
  if (accuracy_ >= bits) return *this;
  const std::size_t n = size();
  if (poly_.degree() == 1) return isolate(poly_, bits + 64);
  Prec work = std::max<Prec>(bits + 32, 2 * centers_re_[0].prec());
  for (;;) {
    if (work > kPrecisionCap) throw PrecisionError("root refinement exceeded the precision cap", poly_.to_string());
    std::vector<Cf> z;
    for (std::size_t k = 0; k < n; ++k) {
      Cf zk(work);
      zk.re = with_precision(centers_re_[k], work);
      zk.im = with_precision(centers_im_[k], work);
      z.push_back(std::move(zk));
    }
    aberth(poly_, z, work);
    RootSet next;
    next.poly_ = poly_;
    for (auto& zk : z) {
      next.centers_re_.push_back(zk.re);
      next.centers_im_.push_back(zk.im);
    }
    bool ok = next.certify(work) && next.accuracy_ >= bits;
    // Each new disc must lie inside the old disc of the same index, so the
    // designated root of every index is preserved.
    for (std::size_t k = 0; ok && k < n; ++k) {
      ComplexInterval d = point(next.centers_re_[k], next.centers_im_[k]) - point(centers_re_[k], centers_im_[k]);
      Interval reach = sqrt(abs2(d)) + radius_interval(next.radii_[k]);
      if (!certainly_le(reach, radius_interval(radii_[k]))) ok = false;
      if (next.real_[k] != real_[k] || next.conj_[k] != conj_[k]) ok = false;
    }
    if (ok) return next;
    work *= 2;
  }
}

}  // namespace lrs

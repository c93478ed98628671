#include "lrs/report.hpp"

#include <sstream>

namespace lrs {

using nlohmann::json;

namespace {

constexpr int kDigits = 30;

json z_list(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json n_list(const std::vector<std::uint64_t>& v) {
  json out = json::array();
  for (auto n : v) out.push_back(n);
  return out;
}

json spec_json(const RecurrenceSpec& s) {
  return {{"order", s.order()}, {"coeffs", z_list(s.coeffs)}, {"init", z_list(s.initials)}};
}

json binet_json(const Prepared& p) {
  const SplittingField& F = p.rs->field;
  json field = {{"h", F.field.modulus().to_string("g")},
                {"d", F.degree()},
                {"r1", F.r1},
                {"r2", F.r2},
                {"identity_embedding", {{"g", p.gamma_approx}}}};
  json terms = json::array();
  for (const auto& t : p.terms) {
    terms.push_back({{"min_poly", t.min_poly},
                     {"root", t.root_approx},
                     {"multiplicity", t.multiplicity},
                     {"coeffs", t.coeffs},
                     {"coeffs_approx", t.coeffs_approx}});
  }
  return {{"field", field}, {"terms", terms}};
}

json tau_json(const TauTerms& t) {
  return {{"x", t.x.get_str()},
          {"t1", ln_json(t.t1)},
          {"t2_eps", ln_json(t.t2_eps)},
          {"t2_x", ln_json(t.t2_x)},
          {"t3", ln_json(t.t3)},
          {"as_printed", ln_json(t.as_printed())},
          {"headline", ln_json(t.headline())}};
}

json params_json(const Analysis& a) {
  const Prepared& p = *a.prep;
  if (!p.params) return nullptr;
  const GrowthParams& g = *p.params;
  json out = {{"l", g.l},
              {"m", g.m},
              {"a", g.a},
              {"d", g.d},
              {"s", g.s},
              {"A", interval_json(g.A)},
              {"A_prime", interval_json(g.A_prime)},
              {"rho", g.rho.get_str()},
              {"disc_bound", g.disc_bound.get_str()},
              {"alpha1_abs", interval_json(g.alpha1_abs)},
              {"dominant_unique", g.dominant.size() == 1}};
  if (a.bound) {
    out["bound_eps"] = a.bound_eps.get_str();
    out["tau"] = tau_json(a.bound->tau);
    out["rho_term"] = ln_json(a.bound->rho_term);
    out["equations"] = ln_json(a.bound->equations);
    out["schmidt"] = ln_json(a.bound->schmidt);
  }
  return out;
}

json degenerate_json(const Prepared& p) {
  if (!p.degeneracy) return {{"degenerate", false}, {"witness", nullptr}};
  const auto& w = *p.degeneracy;
  return {{"degenerate", true},
          {"witness",
           {{"i", w.i + 1}, {"j", w.j + 1}, {"order", w.order}, {"ratio", w.ratio.to_string("g")}, {"ratio_approx", p.degeneracy_ratio}}}};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

json ln_json(const LogScale& x) { return {{"ln", x.ln_upper(kDigits)}}; }

json interval_json(const Interval& x) {
  return {{"lo", x.lo().to_string(kDigits, MPFR_RNDD)}, {"hi", x.hi().to_string(kDigits, MPFR_RNDU)}};
}

json report_json(const Analysis& a) {
  const Prepared& p = *a.prep;
  json j;
  j["input"] = spec_json(p.input);
  j["minimality"] = {{"minimal", !p.minimal.reduced}, {"recurrence", spec_json(p.spec())}};
  j["degenerate"] = degenerate_json(p);
  j["binet"] = binet_json(p);
  j["params"] = params_json(a);
  j["eps"] = a.eps.get_str();
  j["tau_ln"] = a.bound ? ln_json(a.bound->tau.headline()) : json(nullptr);
  j["bound_ln"] = a.bound ? ln_json(a.bound->total) : json(nullptr);
  j["branch"] = a.bound ? json(a.bound->rho_is_one ? "rho=1" : "rho!=1") : json(nullptr);
  if (a.m1) {
    json m = interval_json(*a.m1);
    m["holds"] = a.verdict_m1.value_or(false);
    j["m1_bound"] = m;
  } else {
    j["m1_bound"] = nullptr;
  }
  json emp = {{"n_max", a.n_max}, {"zeros", n_list(a.zeros)}};
  if (a.solutions_computed) {
    emp["solutions"] = n_list(a.solutions);
    emp["count"] = a.solutions.size();
  } else {
    emp["solutions"] = nullptr;
    emp["count"] = nullptr;
  }
  j["empirical"] = emp;
  if (a.verdict) {
    j["verdict"] = *a.verdict && a.verdict_m1.value_or(true);
  } else {
    j["verdict"] = nullptr;
  }
  j["precision"] = {{"bound_bits", kBoundPrecision},
                    {"verifier_start_bits", a.config.prec_start},
                    {"verifier_cap_bits", a.config.prec_cap},
                    {"verifier_max_bits_used", a.max_precision},
                    {"exact_tie_tests", a.tie_tests},
                    {"log", "natural"}};
  j["exactness_flags"] = {{"disc_bound", "upper bound"},
                          {"s", p.S.exact() ? "exact" : "upper bound"},
                          {"A", "certified interval"},
                          {"A_prime", "certified interval"},
                          {"rho", "exact"},
                          {"solutions", "certified"}};
  j["warnings"] = a.warnings;
  return j;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string render_text(const Analysis& a) {
  const Prepared& p = *a.prep;
  std::ostringstream os;
  os << "recurrence   " << p.spec().to_string() << "\n";
  if (p.minimal.reduced) os << "input        " << p.input.to_string() << " (not minimal)\n";
  const SplittingField& F = p.rs->field;
  os << "field        h = " << F.field.modulus().to_string("g") << ", d = " << F.degree() << ", r1 = " << F.r1 << ", r2 = " << F.r2 << "\n";
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const auto& t = p.terms[i];
    os << "root " << i + 1 << "       " << t.root_approx << "  (" << t.min_poly << ", multiplicity " << t.multiplicity << ")\n";
    for (std::size_t k = 0; k < t.coeffs.size(); ++k) os << "  a_" << i + 1 << k << "       " << t.coeffs[k] << " ~ " << t.coeffs_approx[k] << "\n";
  }
  if (p.degeneracy) os << "degenerate   ratio " << p.degeneracy->ratio.to_string("g") << " has order " << p.degeneracy->order << "\n";
  if (p.params) {
    const GrowthParams& g = *p.params;
    os << "params       l=" << g.l << " m=" << g.m << " a=" << g.a << " d=" << g.d << " s=" << g.s << (g.s_exact ? "" : " (upper bound)")
       << " rho=" << g.rho.get_str() << " |disc| <= " << g.disc_bound.get_str() << "\n";
    os << "A            " << g.A.to_string(12) << "\n";
    os << "A'           " << g.A_prime.to_string(12) << "\n";
    os << "|alpha_1|    " << g.alpha1_abs.to_string(12) << "\n";
  }
  os << "eps          " << a.eps.get_str() << "\n";
  if (a.bound && a.bound_eps != a.eps) os << "bound eps    " << a.bound_eps.get_str() << "\n";
  if (a.bound) {
    os << "branch       " << (a.bound->rho_is_one ? "rho = 1" : "rho != 1") << "\n";
    os << "ln tau       " << a.bound->tau.headline().ln_upper(12) << "\n";
    os << "ln bound     " << a.bound->total.ln_upper(12) << "\n";
  }
  if (a.m1) os << "m=1 bound    " << a.m1->to_string(12) << "\n";
  if (a.solutions_computed) os << "solutions    " << a.solutions.size() << " in [0, " << a.n_max << "]: {" << join(a.solutions) << "}\n";
  os << "zeros        {" << join(a.zeros) << "}\n";
  if (a.verdict) os << "verdict      " << ((*a.verdict && a.verdict_m1.value_or(true)) ? "count within bound" : "BOUND VIOLATED") << "\n";
  for (const auto& w : a.warnings) os << "note         " << w << "\n";
  return os.str();
}

json error_json(const std::string& code, const std::string& message, const std::string& context) {
  return {{"error", {{"code", code}, {"message", message}, {"context", context}}}};
}

std::string render_error_text(const std::string& code, const std::string& message, const std::string& context) {
  std::string s = "error [" + code + "]: " + message;
  if (!context.empty()) s += " (" + context + ")";
  return s + "\n";
}

}  // namespace lrs

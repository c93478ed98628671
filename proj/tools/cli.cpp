#include "cli.hpp"

#include "lrs/analyze.hpp"
#include "lrs/errors.hpp"
#include "lrs/parse.hpp"
#include "lrs/report.hpp"
#include "lrs/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace lrs {

namespace {

struct AnalyzeArgs {
  std::string coeffs, init, eps, nmax = "1000", prec_start = "64", prec_cap, format = "json", output, config;
  bool force = false;
};

struct SelftestArgs {
  std::vector<std::string> suites;
  std::size_t samples = 0;
  std::uint64_t seed = 42;
  std::string format = "text", output;
};

int exit_code_for(const std::string& code) {
  if (code == "domain_error") return kExitUsage;
  if (code == "degenerate") return kExitDegenerate;
  if (code == "assumption_violation") return kExitAssumption;
  return kExitLimit;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write output file", path);
  f << text;
}

int report_error(const std::string& code, const std::string& message, const std::string& context, const std::string& format,
                 std::ostream& out, std::ostream& err) {
  if (format == "json") out << render_json(error_json(code, message, context));
  err << render_error_text(code, message, context);
  return exit_code_for(code);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  const mpq_class q = parse_rational(s);
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p()) throw DomainError(what + " must be a nonnegative integer", s);
  return q.get_num().get_ui();
}

// Values from --config fill in options that were not given as flags.
void merge_config(CLI::App& sub, AnalyzeArgs& a) {
  if (a.config.empty()) return;
  const auto cfg = read_config_file(a.config);
  std::map<std::string, std::string*> strings = {{"coeffs", &a.coeffs},   {"init", &a.init},         {"eps", &a.eps},
                                                 {"nmax", &a.nmax},       {"prec-start", &a.prec_start}, {"prec-cap", &a.prec_cap},
                                                 {"format", &a.format},   {"output", &a.output}};
  for (const auto& [key, value] : cfg) {
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (!opt) throw DomainError("unknown config key", key);
    if (opt->count() > 0) continue;
    if (key == "force") {
      a.force = value == "1" || value == "true" || value == "yes";
    } else if (auto it = strings.find(key); it != strings.end()) {
      *it->second = value;
    } else {
      throw DomainError("config key cannot be set from a file", key);
    }
  }
}

int cmd_analyze(CLI::App& sub, AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  merge_config(sub, a);
  if (a.format != "json" && a.format != "text") throw DomainError("format must be json or text", a.format);
  if (a.coeffs.empty() || a.init.empty() || a.eps.empty()) throw DomainError("--coeffs, --init and --eps are required");
  RecurrenceSpec spec{parse_int_list(a.coeffs), parse_int_list(a.init)};
  if (spec.coeffs.size() != spec.initials.size()) {
    throw DomainError("--coeffs and --init must have the same length",
                      std::to_string(spec.coeffs.size()) + " vs " + std::to_string(spec.initials.size()));
  }
  const mpq_class eps = parse_rational(a.eps);
  if (eps <= 0 || eps >= 1) throw DomainError("eps must lie in (0, 1)", "eps=" + eps.get_str());
  VerifierConfig cfg;
  cfg.prec_start = static_cast<Prec>(parse_u64(a.prec_start, "--prec-start"));
  cfg.prec_cap = a.prec_cap.empty() ? default_precision_cap() : static_cast<Prec>(parse_u64(a.prec_cap, "--prec-cap"));
  if (cfg.prec_start < 64 || cfg.prec_cap < cfg.prec_start) throw DomainError("need 64 <= --prec-start <= --prec-cap");
  const std::uint64_t n_max = parse_u64(a.nmax, "--nmax");

  auto prep = std::make_shared<const Prepared>(prepare(spec, a.force));
  const Analysis an = analyze(prep, eps, n_max, cfg);
  emit(a.format == "json" ? render_json(report_json(an)) : render_text(an), a.output, out);
  if (an.verdict && !(*an.verdict && an.verdict_m1.value_or(true))) {
    err << "error: empirical count exceeds the bound\n";
    return kExitLimit;
  }
  return kExitOk;
}

int cmd_selftest(SelftestArgs& s, std::ostream& out) {
  if (s.format != "json" && s.format != "text") throw DomainError("format must be json or text", s.format);
  SelftestOptions opt;
  for (const auto& item : s.suites) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) opt.suites.push_back(name);
    }
  }
  opt.samples = s.samples;
  opt.seed = s.seed;
  const auto results = run_selftest(opt);
  emit(s.format == "json" ? render_json(selftest_json(results, opt)) : render_selftest_text(results), s.output, out);
  for (const auto& r : results) {
    if (!r.passed()) return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth-inequality analyzer for integer linear recurrences", "lrs-growth"};
  app.require_subcommand(1);

  AnalyzeArgs a;
  CLI::App* an = app.add_subcommand("analyze", "Bound and enumerate solutions of |u_n| < |alpha_1|^{n(1-eps)}");
  an->add_option("--coeffs", a.coeffs, "a_1,...,a_l in u_{n+l} = a_1 u_{n+l-1} + ... + a_l u_n");
  an->add_option("--init", a.init, "u_0,...,u_{l-1}");
  an->add_option("--eps", a.eps, "eps in (0, 1), as p/q or an exact decimal; the bound uses 1/13 when eps >= 1/12");
  an->add_option("--nmax", a.nmax, "enumerate n in [0, nmax] (default 1000)");
  an->add_option("--prec-start", a.prec_start, "starting precision in bits (default 64)");
  an->add_option("--prec-cap", a.prec_cap, "precision cap in bits (default 4096 or LRS_GROWTH_PRECISION_CAP)");
  an->add_flag("--force", a.force, "analyse degenerate input (bounds omitted)");
  an->add_option("--format", a.format, "json or text (default json)");
  an->add_option("--output", a.output, "write the report to a file");
  an->add_option("--config", a.config, "key=value file; flags override its values");

  SelftestArgs s;
  CLI::App* st = app.add_subcommand("selftest", "Run the built-in property suites");
  st->add_option("--suite", s.suites, "suite name(s): product-formula, laplace, heights, growth-eq3-eq4, weights");
  st->add_option("--samples", s.samples, "samples per suite (default: suite specific)");
  st->add_option("--seed", s.seed, "generator seed (default 42)");
  st->add_option("--format", s.format, "text or json (default text)");
  st->add_option("--output", s.output, "write the table to a file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string format = an->parsed() ? a.format : s.format;
  try {
    if (an->parsed()) return cmd_analyze(*an, a, out, err);
    return cmd_selftest(s, out);
  } catch (const Error& e) {
    return report_error(e.code(), e.what(), e.context(), format, out, err);
  } catch (const std::exception& e) {
    return report_error("internal_error", e.what(), "", format, out, err);
  }
}

}  // namespace lrs

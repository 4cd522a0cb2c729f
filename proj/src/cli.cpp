#include "efg/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "efg/congruence.hpp"
#include "efg/errors.hpp"
#include "efg/formal_group.hpp"
#include "efg/lseries.hpp"
#include "efg/point_count.hpp"
#include "efg/weierstrass.hpp"

namespace efg::cli {

namespace {

struct CommandConfig {
  std::string g2, g3, a, b, ainvs;
  std::optional<std::size_t> order;
  std::int64_t pmax = 23;
  std::optional<std::int64_t> p;
  std::int64_t nmax = 25;
  std::string source = "genfun";
  std::string format = "text";
  std::string output;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CurveForm { invariants, short_form, ainvs };

CurveForm curve_form(const CommandConfig& c) {
  const bool inv = !c.g2.empty() || !c.g3.empty();
  const bool sf = !c.a.empty() || !c.b.empty();
  const bool gen = !c.ainvs.empty();
  if (inv + sf + gen != 1)
    throw UsageError("give exactly one curve: --g2/--g3, --a/--b or --ainvs");
  if (inv && (c.g2.empty() || c.g3.empty())) throw UsageError("--g2 and --g3 go together");
  if (sf && (c.a.empty() || c.b.empty())) throw UsageError("--a and --b go together");
  return inv ? CurveForm::invariants : (sf ? CurveForm::short_form : CurveForm::ainvs);
}

WeierstrassModel parse_ainvs(const std::string& s) {
  std::vector<Rational> v;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(Rational::parse(item));
  if (v.size() != 5) throw UsageError("--ainvs needs five comma-separated values a1,a2,a3,a4,a6");
  return {v[0], v[1], v[2], v[3], v[4]};
}

struct ModelChoice {
  WeierstrassModel model;
  std::optional<Integer> scale;  // set when converted from (g2, g3)
};

ModelChoice model_of(const CommandConfig& c) {
  switch (curve_form(c)) {
    case CurveForm::invariants: {
      auto conv = curve_convert({Rational::parse(c.g2), Rational::parse(c.g3)});
      return {conv.model, conv.scale};
    }
    case CurveForm::short_form:
      return {WeierstrassModel::short_form(Rational::parse(c.a), Rational::parse(c.b)), {}};
    case CurveForm::ainvs:
      return {parse_ainvs(c.ainvs), {}};
  }
  throw UsageError("unreachable");
}

CurveInvariants invariants_of(const CommandConfig& c) {
  switch (curve_form(c)) {
    case CurveForm::invariants:
      return {Rational::parse(c.g2), Rational::parse(c.g3)};
    case CurveForm::short_form:
      // y^2 = x^3 + a x + b is y'^2 = 4x^3 + 4a x + 4b with y' = 2y
      return {Rational(-4) * Rational::parse(c.a), Rational(-4) * Rational::parse(c.b)};
    case CurveForm::ainvs: {
      const WeierstrassModel m = parse_ainvs(c.ainvs);
      return {m.c4() / Rational(12), m.c6() / Rational(216)};
    }
  }
  throw UsageError("unreachable");
}

Json model_json(const ModelChoice& mc) {
  Json j = to_json(mc.model);
  if (mc.scale) j["scale"] = mc.scale->get_str();
  return j;
}

std::string series_text(const std::string& name, const TruncatedSeries& s) {
  std::ostringstream os;
  os << name << " mod T^" << s.order() << "\n";
  for (std::size_t n = 0; n < s.order(); ++n)
    if (!s[n].is_zero()) os << "  " << std::setw(4) << n << "  " << s[n] << "\n";
  return os.str();
}

// -- subcommands ------------------------------------------------------------

Report cmd_bernoulli(const CommandConfig& c) {
  const std::size_t n = c.order.value_or(25);
  if (n < 1) throw UsageError("--order must be at least 1");
  const auto b = bernoulli_classical(n);
  Report r;
  r.json = Json::array();
  std::ostringstream os;
  for (std::size_t k = 0; k < b.size(); ++k) {
    r.json.push_back(b[k].str());
    os << std::setw(4) << k << "  " << b[k] << "\n";
  }
  r.text = os.str();
  return r;
}

Report cmd_hurwitz_bh(const CommandConfig& c) {
  const CurveInvariants inv = invariants_of(c);
  const std::size_t n = c.order.value_or(25);
  BHSequence seq;
  if (c.source == "genfun")
    seq = hurwitz_bernoulli_genfun(inv, n);
  else if (c.source == "eisenstein")
    seq = hurwitz_bernoulli_eisenstein(inv, n);
  else
    throw UsageError("--source must be genfun or eisenstein");
  Report r{to_json(seq), {}, false};
  std::ostringstream os;
  os << "source " << to_string(seq.source) << "  g2 = " << seq.g2 << "  g3 = " << seq.g3 << "\n";
  for (const auto& [k, v] : seq.values) os << std::setw(4) << k << "  " << v << "\n";
  r.text = os.str();
  return r;
}

Report cmd_wp_expand(const CommandConfig& c) {
  const CurveInvariants inv = invariants_of(c);
  const WpExpansion wp = wp_laurent(inv, c.order.value_or(12));
  const bool ode_ok = wp_ode_residual(wp).all_zero();
  Report r{to_json(wp), {}, !ode_ok};
  r.json["ode_residual_zero"] = ode_ok;
  std::ostringstream os;
  os << "p(z) = z^-2 + sum c_n z^(2n),  g2 = " << wp.g2 << "  g3 = " << wp.g3 << "\n";
  os << std::setw(4) << "n" << "  " << std::setw(30) << std::left << "c_n" << std::right
     << "  G_(2n+2)\n";
  for (std::size_t n = 1; n <= wp.order(); ++n)
    os << std::setw(4) << n << "  " << std::setw(30) << std::left << wp.c(n).str() << std::right
       << "  " << wp.eisenstein(n) << "\n";
  os << "ODE residual " << (ode_ok ? "zero" : "NONZERO") << "\n";
  r.text = os.str();
  return r;
}

Report cmd_formal_log(const CommandConfig& c) {
  const ModelChoice mc = model_of(c);
  const FormalGroupData fg = build_formal_group(mc.model, c.order.value_or(25), false);
  Report r;
  r.json = Json{{"model", model_json(mc)}, {"f_log", to_json(fg.f_log)}, {"omega", to_json(fg.omega)}};
  Json b = Json::object();
  for (std::size_t n = 1; n < fg.f_log.order(); ++n)
    b[std::to_string(n)] = (Rational(static_cast<long>(n)) * fg.f_log[n]).str();
  r.json["b_n"] = std::move(b);
  r.text = "model " + mc.model.id() + "\n" + series_text("f_log", fg.f_log);
  return r;
}

Report cmd_formal_exp(const CommandConfig& c) {
  const ModelChoice mc = model_of(c);
  const FormalGroupData fg = build_formal_group(mc.model, c.order.value_or(25), false);
  Report r;
  r.json = Json{{"model", model_json(mc)}, {"f_exp", to_json(fg.f_exp)}};
  r.text = "model " + mc.model.id() + "\n" + series_text("f_exp", fg.f_exp);
  return r;
}

Report cmd_group_law(const CommandConfig& c) {
  const ModelChoice mc = model_of(c);
  const FormalGroupData fg = build_formal_group(mc.model, c.order.value_or(12));
  Report r;
  r.json = to_json(fg);
  r.json["model"] = model_json(mc);
  std::ostringstream os;
  os << "F(X, Y) for " << mc.model.id() << " mod total degree " << fg.order << "\n";
  for (const auto& [k, v] : fg.F_geom.terms())
    os << "  X^" << k.first << " Y^" << k.second << "  " << v << "\n";
  r.text = os.str();
  return r;
}

Report cmd_ap(const CommandConfig& c) {
  const ModelChoice mc = model_of(c);
  Report r;
  if (c.p) {
    const std::int64_t p = *c.p;
    if (!is_prime(p)) throw UsageError("--p must be prime");
    const ReductionType t = reduction_type(mc.model, p);
    const std::int64_t ap = t == ReductionType::good ? ap_good(mc.model, p) : ap_bad(mc.model, p, t);
    r.json = to_json(p, ApEntry{ap, t});
    std::ostringstream os;
    os << std::setw(6) << "p" << std::setw(6) << "a_p" << "  type\n"
       << std::setw(6) << p << std::setw(6) << ap << "  " << to_string(t) << "\n";
    r.text = os.str();
    return r;
  }
  const ApTable table = ap_table(mc.model, c.pmax);
  r.json = to_json(table);
  std::ostringstream os;
  os << std::setw(6) << "p" << std::setw(6) << "a_p" << "  type\n";
  for (const auto& [p, e] : table.entries)
    os << std::setw(6) << p << std::setw(6) << e.ap << "  " << to_string(e.type) << "\n";
  for (const auto& [p, why] : table.unsupported)
    os << std::setw(6) << p << std::setw(6) << "-" << "  unclassified\n";
  r.text = os.str();
  return r;
}

Report cmd_an(const CommandConfig& c) {
  const ModelChoice mc = model_of(c);
  const AnTable table = an_table(mc.model, c.nmax);
  Report r{to_json(table), {}, false};
  r.json["model"] = model_json(mc);
  std::ostringstream os;
  os << std::setw(6) << "n" << std::setw(8) << "a_n" << "\n";
  for (const auto& [n, a] : table.values) os << std::setw(6) << n << std::setw(8) << a << "\n";
  for (const auto& note : table.notes) os << "note: " << note << "\n";
  r.text = os.str();
  return r;
}

Report cmd_honda(const CommandConfig& c) {
  const ModelChoice mc = model_of(c);
  const CongruenceReport rep = honda_check(mc.model, c.pmax, c.order.value_or(25));
  Report r{to_json(rep), {}, !rep.all_pass()};
  std::ostringstream os;
  os << "curve " << rep.curve_id << "\n"
     << std::setw(6) << "p" << std::setw(14) << "b_p" << std::setw(8) << "a_p" << "  pass\n";
  for (const auto& x : rep.records)
    os << std::setw(6) << x.p << std::setw(14) << x.b_p.get_str() << std::setw(8) << x.a_p << "  "
       << (x.pass ? "yes" : "NO") << "\n";
  for (const auto& s : rep.skipped) os << "skip p = " << s.p << ": " << s.reason << "\n";
  os << rep.passed << " passed, " << rep.failed << " failed\n";
  r.text = os.str();
  return r;
}

Report cmd_asd(const CommandConfig& c) {
  if (!c.p) throw UsageError("asd needs --p");
  const ModelChoice mc = model_of(c);
  const AsdReport rep = asd_check(mc.model, *c.p, c.order.value_or(25));
  Report r{to_json(rep), {}, !rep.all_pass()};
  std::ostringstream os;
  os << "curve " << rep.curve_id << "  p = " << rep.p << "  a_p = " << rep.a_p << "\n"
     << std::setw(4) << "n" << std::setw(12) << "modulus" << std::setw(12) << "residue" << "  pass\n";
  for (const auto& x : rep.records)
    os << std::setw(4) << x.n << std::setw(12) << x.modulus.get_str() << std::setw(12)
       << x.residue.get_str() << "  " << (x.pass ? "yes" : "NO") << "\n";
  r.text = os.str();
  return r;
}

Report cmd_bh_compare(const CommandConfig& c) {
  const ComparisonReport rep = bh_comparison(invariants_of(c), c.order.value_or(12));
  Report r{to_json(rep), {}, !structure_ok(rep)};
  std::ostringstream os;
  os << "g2 = " << rep.g2 << "  g3 = " << rep.g3 << "\n"
     << std::setw(4) << "k" << std::setw(28) << "genfun" << std::setw(28) << "eisenstein"
     << std::setw(12) << "ratio" << "\n";
  for (const auto& x : rep.records)
    os << std::setw(4) << x.k << std::setw(28) << x.genfun.str() << std::setw(28)
       << (x.eisenstein ? x.eisenstein->str() : "-") << std::setw(12)
       << (x.ratio ? x.ratio->str() : "-") << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  r.text = os.str();
  return r;
}

Report cmd_eq10(const CommandConfig& c) {
  const ModelChoice mc = model_of(c);
  const Eq10Result res = eq10_check(mc.model, c.order.value_or(12));
  Report r{to_json(res), {}, !res.pass};
  r.json["model"] = model_json(mc);
  std::ostringstream os;
  os << "curve " << mc.model.id() << "  total degree < " << res.order << ": "
     << (res.pass ? "routes agree" : "routes DIFFER") << "\n";
  if (res.first_difference)
    os << "first difference at X^" << res.first_difference->first << " Y^"
       << res.first_difference->second << ": " << res.geometric << " vs " << res.exp_log << "\n";
  r.text = os.str();
  return r;
}

struct Subcommand {
  const char* name;
  const char* help;
  Report (*run)(const CommandConfig&);
  bool curve;
};

const std::vector<Subcommand>& subcommands() {
  static const std::vector<Subcommand> table = {
      {"bernoulli", "Classical Bernoulli numbers from T/(e^T - 1) = sum B_n T^n / n!", cmd_bernoulli,
       false},
      {"hurwitz-bh",
       "Hurwitz-Bernoulli numbers: T/f_E(T) = sum BH_n T^n / n! (genfun) or BH_k = 2k G_k "
       "(eisenstein)",
       cmd_hurwitz_bh, true},
      {"wp-expand",
       "Laurent expansion p(z) = 1/z^2 + 2 sum G_(2n+2) z^(2n)/(2n)! on y^2 = 4x^3 - g2 x - g3",
       cmd_wp_expand, true},
      {"formal-log", "Formal logarithm f_L(T), compared against sum a_n/n T^n", cmd_formal_log, true},
      {"formal-exp", "Formal exponential f_E with f_E(f_L(T)) = T", cmd_formal_exp, true},
      {"group-law", "Formal group law F(X, Y) = f_E(f_L(X) + f_L(Y))", cmd_group_law, true},
      {"ap", "a_p = p + 1 - #E(F_p), coefficients of L_E(s) = sum a_n n^-s", cmd_ap, true},
      {"an", "Dirichlet coefficients a_n of L_E(s) = sum a_n n^-s", cmd_an, true},
      {"honda", "Honda congruence p [T^p] f_L = a_p (mod p) for f_L(T) = sum a_n/n T^n", cmd_honda,
       true},
      {"asd", "Three-term congruence b_np - a_p b_n + p b_n/p = 0 (mod p^(1+ord_p n))", cmd_asd, true},
      {"bh-compare", "Compare T/f_E(T) = sum BH_n T^n/n! against BH_k = 2k G_k", cmd_bh_compare,
       true},
      {"eq10", "Check F(X, Y) = f_E(f_L(X) + f_L(Y)) against the chord construction", cmd_eq10,
       true},
  };
  return table;
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  if (format == Format::json) return report.json.dump(2) + "\n";
  return report.text;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formal groups, Hurwitz-Bernoulli numbers and L-series of elliptic curves", "efg"};
  app.require_subcommand(1);
  CommandConfig cfg;
  std::map<const CLI::App*, const Subcommand*> dispatch;

  for (const auto& sc : subcommands()) {
    CLI::App* sub = app.add_subcommand(sc.name, sc.help);
    if (sc.curve) {
      sub->add_option("--g2", cfg.g2, "g2 of y^2 = 4x^3 - g2 x - g3 (integer or p/q)");
      sub->add_option("--g3", cfg.g3, "g3 of y^2 = 4x^3 - g2 x - g3 (integer or p/q)");
      sub->add_option("--a", cfg.a, "a of y^2 = x^3 + a x + b");
      sub->add_option("--b", cfg.b, "b of y^2 = x^3 + a x + b");
      sub->add_option("--ainvs", cfg.ainvs, "general model a1,a2,a3,a4,a6");
    }
    sub->add_option("--order", cfg.order, "truncation order / largest index");
    if (std::string(sc.name) == "ap" || std::string(sc.name) == "honda")
      sub->add_option("--pmax", cfg.pmax, "largest prime (default 23)");
    if (std::string(sc.name) == "ap" || std::string(sc.name) == "asd")
      sub->add_option("--p", cfg.p, "a single prime");
    if (std::string(sc.name) == "an") sub->add_option("--nmax", cfg.nmax, "largest n (default 25)");
    if (std::string(sc.name) == "hurwitz-bh")
      sub->add_option("--source", cfg.source, "genfun or eisenstein (default genfun)");
    sub->add_option("--format", cfg.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", cfg.output, "write to this file instead of standard output");
    dispatch[sub] = &sc;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Subcommand* sc = dispatch.at(app.get_subcommands().front());
  try {
    Report report = sc->run(cfg);
    const std::string bytes =
        emit_report(report, cfg.format == "json" ? Format::json : Format::text);
    if (cfg.output.empty()) {
      out << bytes;
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) {
        err << "cannot open " << cfg.output << "\n";
        return 2;
      }
      f << bytes;
    }
    return report.failed ? 1 : 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace efg::cli

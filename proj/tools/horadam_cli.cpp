// Command-line front end: exact evaluation of Horadam and Lucas sequence
// terms, closed-form partial sums (with a direct-summation fallback when a
// closed form is undefined), generating functions, series expansion, and
// the self-verification grid.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "horadam/closed_forms.hpp"
#include "horadam/genfunc.hpp"
#include "horadam/sequence.hpp"
#include "horadam/verify.hpp"

namespace {

using horadam::Rational;
using horadam::SeqKind;
using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFailed = 4;

struct Options {
  std::string a = "0";
  std::string b = "1";
  std::string p;
  std::string q;
  std::string kind = "w";
  std::string z = "1";
  std::string output = "plain";
  std::string scale = "small";
  long long n = 1;
  long long r = 1;
  long long s = 0;
  long long k = 0;
  long long m = 0;
};

SeqKind parse_kind(const std::string& text) {
  if (text == "u") return SeqKind::U;
  if (text == "v") return SeqKind::V;
  if (text == "w") return SeqKind::W;
  throw horadam::DomainError("kind must be one of u, v, w");
}

horadam::HoradamParams params_from(const Options& opt) {
  return horadam::make_params(Rational::parse(opt.a), Rational::parse(opt.b),
                              Rational::parse(opt.p), Rational::parse(opt.q));
}

bool json_output(const Options& opt) {
  if (opt.output == "json") return true;
  if (opt.output == "plain") return false;
  throw horadam::DomainError("output must be plain or json");
}

void print_value(const Rational& value, bool as_json) {
  if (as_json) {
    json j;
    j["value"] = value.str();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
}

std::vector<std::string> coeff_strings(const std::vector<Rational>& coeffs) {
  std::vector<std::string> out;
  out.reserve(coeffs.size());
  for (const Rational& c : coeffs) out.push_back(c.str());
  return out;
}

int run_term(const Options& opt) {
  Rational value =
      term_by_recurrence(params_from(opt), parse_kind(opt.kind), opt.n);
  print_value(value, json_output(opt));
  return 0;
}

int run_sum(const Options& opt) {
  horadam::HoradamParams params = params_from(opt);
  horadam::SumSpec spec{parse_kind(opt.kind), opt.n,
                        opt.r,                opt.s,
                        opt.k,                Rational::parse(opt.z)};
  horadam::TermCache cache(params);
  Rational value(0);
  try {
    value = spec.n == 1 ? sum_linear(cache, spec) : sum_power(cache, spec);
  } catch (const horadam::DenominatorVanishes& e) {
    if (std::getenv("HORADAM_NO_FALLBACK") != nullptr) {
      std::cerr << "error: degenerate denominator: " << e.what() << "\n";
      return kExitDomain;
    }
    std::cerr << "warning: degenerate denominator (" << e.what()
              << "); falling back to direct summation\n";
    value = brute_sum(cache, spec);
  }
  print_value(value, json_output(opt));
  return 0;
}

int run_gf(const Options& opt) {
  horadam::RationalFn fn = gf_power(params_from(opt), parse_kind(opt.kind),
                                    opt.n, opt.r, opt.s);
  if (json_output(opt)) {
    json j;
    j["num"] = coeff_strings(fn.num.coeffs());
    j["den"] = coeff_strings(fn.den.coeffs());
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(fn) << "\n";
  }
  return 0;
}

int run_series(const Options& opt) {
  horadam::RationalFn fn = gf_power(params_from(opt), parse_kind(opt.kind),
                                    opt.n, opt.r, opt.s);
  std::vector<Rational> coeffs = series_coeffs(fn, opt.m);
  if (json_output(opt)) {
    json j;
    j["coeffs"] = coeff_strings(coeffs);
    std::cout << j.dump() << "\n";
  } else {
    std::string line;
    for (const Rational& c : coeffs) {
      if (!line.empty()) line += " ";
      line += c.str();
    }
    std::cout << line << "\n";
  }
  return 0;
}

int run_verify(const Options& opt) {
  horadam::verify::Scale scale;
  if (opt.scale == "small") {
    scale = horadam::verify::Scale::Small;
  } else if (opt.scale == "full") {
    scale = horadam::verify::Scale::Full;
  } else {
    throw horadam::DomainError("scale must be small or full");
  }
  horadam::verify::Report report = horadam::verify::run_all(scale);
  bool ok = horadam::verify::print_report(report, std::cout);
  return ok ? 0 : kExitVerifyFailed;
}

void add_param_options(CLI::App* cmd, Options& opt, bool with_ab = true) {
  cmd->add_option("-p", opt.p, "recurrence coefficient p (rational)")
      ->required();
  cmd->add_option("-q", opt.q, "recurrence coefficient q (rational)")
      ->required();
  if (with_ab) {
    cmd->add_option("-a", opt.a, "initial value w_0 (rational, default 0)");
    cmd->add_option("-b", opt.b, "initial value w_1 (rational, default 1)");
  }
  cmd->add_option("--kind", opt.kind, "sequence kind: u, v or w (default w)")
      ->check(CLI::IsMember({"u", "v", "w"}));
  cmd->add_option("--output", opt.output, "output format: plain or json")
      ->check(CLI::IsMember({"plain", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact evaluation of Horadam/Lucas sequence terms, closed-form sums "
      "with indices in arithmetic progression, and generating functions"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* term = app.add_subcommand("term", "evaluate one sequence term");
  add_param_options(term, opt);
  term->add_option("--n", opt.n, "term index (any integer)")->required();

  CLI::App* sum = app.add_subcommand(
      "sum", "closed-form partial sum of w_{r*j+s}^n * z^j for j = 0..k");
  add_param_options(sum, opt);
  sum->add_option("--n", opt.n, "power of each term (default 1)");
  sum->add_option("--r", opt.r, "index step (default 1)");
  sum->add_option("--s", opt.s, "index offset (default 0)");
  sum->add_option("--k", opt.k, "upper summation limit, >= -1")->required();
  sum->add_option("--z", opt.z, "weight z (rational, default 1)");

  CLI::App* gf = app.add_subcommand(
      "gf", "generating function of w_{r*j+s}^n as a rational function");
  add_param_options(gf, opt);
  gf->add_option("--n", opt.n, "power of each term (default 1)");
  gf->add_option("--r", opt.r, "index step (default 1)");
  gf->add_option("--s", opt.s, "index offset (default 0)");

  CLI::App* series = app.add_subcommand(
      "series", "series coefficients of the generating function");
  add_param_options(series, opt);
  series->add_option("--n", opt.n, "power of each term (default 1)");
  series->add_option("--r", opt.r, "index step (default 1)");
  series->add_option("--s", opt.s, "index offset (default 0)");
  series->add_option("--m", opt.m, "number of coefficients")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "run the self-verification grid and report pass/fail counts");
  verify->add_option("--scale", opt.scale, "grid size: small or full")
      ->check(CLI::IsMember({"small", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (term->parsed()) return run_term(opt);
    if (sum->parsed()) return run_sum(opt);
    if (gf->parsed()) return run_gf(opt);
    if (series->parsed()) return run_series(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const horadam::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const horadam::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

// Acceptance suite: runs every verification block at full scale plus the
// command-line golden tests, printing one pass/fail line per criterion.
// Usage: acceptance_tests [path-to-cli-binary]

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "horadam/genfunc.hpp"
#include "horadam/sequence.hpp"
#include "horadam/verify.hpp"

namespace {

using horadam::Rational;
using horadam::verify::BlockResult;
using horadam::verify::Scale;

struct Criterion {
  std::string name;
  BlockResult result;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 = no limit stated
};

template <typename Fn>
Criterion timed(const std::string& name, double limit_seconds, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  BlockResult result = fn();
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return Criterion{name, std::move(result), elapsed.count(), limit_seconds};
}

bool report(const Criterion& criterion) {
  bool ok = criterion.result.ok() &&
            (criterion.limit_seconds == 0.0 ||
             criterion.seconds < criterion.limit_seconds);
  std::printf("[%s] %s: %lld checks, %lld failures (%.1fs",
              ok ? "PASS" : "FAIL", criterion.name.c_str(),
              criterion.result.checked, criterion.result.failed,
              criterion.seconds);
  if (criterion.limit_seconds > 0.0)
    std::printf(", limit %.0fs", criterion.limit_seconds);
  std::printf(")\n");
  for (const std::string& sample : criterion.result.samples)
    std::printf("       %s\n", sample.c_str());
  std::fflush(stdout);
  return ok;
}

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliRun run_cli(const std::string& cli, const std::string& args,
               const std::string& env = "") {
  std::string tag = std::to_string(getpid());
  std::string out_file = "/tmp/horadam_acceptance." + tag + ".out";
  std::string err_file = "/tmp/horadam_acceptance." + tag + ".err";
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli + "' " + args +
                    " >" + out_file + " 2>" + err_file;
  int status = std::system(cmd.c_str());
  CliRun run;
  run.exit_code = WEXITSTATUS(status);
  run.out = slurp(out_file);
  run.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return run;
}

void expect(BlockResult& block, bool ok, const std::string& what) {
  ++block.checked;
  if (ok) return;
  ++block.failed;
  if (block.samples.size() < 5) block.samples.push_back(what);
}

BlockResult cli_golden(const std::string& cli) {
  BlockResult block{"cli golden"};

  CliRun fib_sum = run_cli(
      cli, "sum --kind u -p 1 -q -1 -a 0 -b 1 --n 1 --r 1 --s 0 --k 4 --z 1");
  expect(block, fib_sum.exit_code == 0 && fib_sum.out == "7\n",
         "fibonacci partial sum: exit " + std::to_string(fib_sum.exit_code) +
             ", stdout \"" + fib_sum.out + "\"");

  CliRun fib_series =
      run_cli(cli, "series --kind u -p 1 -q -1 --n 1 --r 1 --s 0 --m 7");
  expect(block,
         fib_series.exit_code == 0 && fib_series.out == "0 1 1 2 3 5 8\n",
         "fibonacci series: exit " + std::to_string(fib_series.exit_code) +
             ", stdout \"" + fib_series.out + "\"");

  CliRun degenerate =
      run_cli(cli, "sum --kind u -p 3 -q 2 --n 1 --r 1 --s 0 --k 3 --z 1/2");
  expect(block, degenerate.exit_code == 0 && degenerate.out == "17/8\n",
         "degenerate sum fallback: exit " +
             std::to_string(degenerate.exit_code) + ", stdout \"" +
             degenerate.out + "\"");
  expect(block,
         degenerate.err.find("degenerate denominator") != std::string::npos,
         "fallback warning missing from diagnostics: \"" + degenerate.err +
             "\"");

  CliRun no_fallback =
      run_cli(cli, "sum --kind u -p 3 -q 2 --n 1 --r 1 --s 0 --k 3 --z 1/2",
              "HORADAM_NO_FALLBACK=1");
  expect(block, no_fallback.exit_code == 2,
         "HORADAM_NO_FALLBACK: expected exit 2, got " +
             std::to_string(no_fallback.exit_code));

  CliRun bad_parse = run_cli(cli, "term --kind u -p 1.5 -q -1 --n 3");
  expect(block, bad_parse.exit_code == 1,
         "decimal input: expected exit 1, got " +
             std::to_string(bad_parse.exit_code));

  CliRun bad_params = run_cli(cli, "term --kind u -p 2 -q 1 --n 3");
  expect(block, bad_params.exit_code == 2,
         "degenerate discriminant: expected exit 2, got " +
             std::to_string(bad_params.exit_code));

  // JSON output parses and re-renders identically.
  for (const std::string& args :
       {std::string("term --kind w -a 3 -b 2 -p 1 -q -1 --n 3 --output json"),
        std::string("sum --kind v -p 1 -q -1 --n 2 --r 1 --s 0 --k 5 --z 1 "
                    "--output json"),
        std::string("gf --kind u -p 1 -q -1 --n 2 --r 1 --s 0 --output json"),
        std::string("series --kind u -p 1 -q -1 --n 1 --r 1 --s 0 --m 7 "
                    "--output json")}) {
    CliRun run = run_cli(cli, args);
    bool round_trips = false;
    if (run.exit_code == 0) {
      try {
        nlohmann::json parsed = nlohmann::json::parse(run.out);
        round_trips = parsed.dump() + "\n" == run.out;
      } catch (const nlohmann::json::exception&) {
      }
    }
    expect(block, round_trips, "json round-trip failed for: " + args);
  }

  return block;
}

// The highlighted Fibonacci square-sum series from the round-trip criterion.
BlockResult fibonacci_squares() {
  BlockResult block{"fibonacci squares"};
  horadam::HoradamParams fib = horadam::make_params(
      Rational(0), Rational(1), Rational(1), Rational(-1));
  horadam::RationalFn fn =
      horadam::gf_power(fib, horadam::SeqKind::U, 2, 1, 0);
  std::vector<Rational> coeffs = horadam::series_coeffs(fn, 7);
  std::vector<Rational> expected{Rational(0),  Rational(1),  Rational(1),
                                 Rational(4),  Rational(9),  Rational(25),
                                 Rational(64)};
  expect(block, coeffs == expected,
         "series of the Fibonacci square generating function");
  return block;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "tools/horadam";

  std::vector<Criterion> criteria;
  criteria.push_back(timed("oracle grid: closed-form sums equal direct summation",
                           60.0, [] { return check_oracle_grid(Scale::Full); }));
  criteria.push_back(
      timed("term agreement: closed form vs recurrence and index reflection",
            5.0, [] { return check_term_consistency(Scale::Full); }));
  criteria.push_back(timed("pair-sum engine: randomized ring arguments", 0.0,
                           [] { return check_pair_engine(Scale::Full); }));
  criteria.push_back(timed(
      "generating functions: series round-trip", 30.0, [] {
        BlockResult combined = check_genfunc_roundtrip(Scale::Full);
        BlockResult fib = fibonacci_squares();
        combined.checked += fib.checked;
        combined.failed += fib.failed;
        for (const std::string& sample : fib.samples)
          combined.samples.push_back(sample);
        return combined;
      }));
  criteria.push_back(timed("fixed r=1, s=0 specializations vs general operations",
                           0.0, [] { return check_special_cases(Scale::Full); }));
  criteria.push_back(timed("surd cancellation across the grid", 0.0,
                           [] { return check_surd_free(Scale::Full); }));
  criteria.push_back(
      timed("cli golden tests", 0.0, [&] { return cli_golden(cli); }));

  bool all_ok = true;
  for (const Criterion& criterion : criteria)
    all_ok = report(criterion) && all_ok;

  std::printf("%s\n", all_ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return all_ok ? 0 : 1;
}

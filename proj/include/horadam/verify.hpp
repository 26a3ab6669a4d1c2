#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horadam::verify {

// Grid size for the verification harness. Small keeps a CLI run around a
// second; Full is the complete desk-scale grid.
enum class Scale { Small, Full };

struct BlockResult {
  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> samples;  // first few failure descriptions

  bool ok() const { return failed == 0; }
};

struct Report {
  std::vector<BlockResult> blocks;

  long long checked() const;
  long long failed() const;
  bool ok() const { return failed() == 0; }
};

// Closed forms of the linear and power sums against the direct-summation
// oracle over the parameter grid; also checks that DenominatorVanishes is
// raised exactly when a closed-form denominator is zero.
BlockResult check_oracle_grid(Scale scale);

// Closed-form term evaluation against the recurrence for indices in
// [-20, 20], the negative-index identities, and kind specializations.
BlockResult check_term_consistency(Scale scale);

// The generic pair-sum engine against direct accumulation on randomized
// ring arguments, including degenerate geometric ratios.
BlockResult check_pair_engine(Scale scale);

// series_coeffs(gf_power(...)) against recurrence term powers, and
// gf_linear against gf_power at n = 1.
BlockResult check_genfunc_roundtrip(Scale scale);

// The fixed r = 1, s = 0 specializations against the general operations.
BlockResult check_special_cases(Scale scale);

// Every rational-returning operation across the grid completes without a
// surd residue.
BlockResult check_surd_free(Scale scale);

// All blocks above, in order.
Report run_all(Scale scale);

// One line per block plus a total; returns report.ok().
bool print_report(const Report& report, std::ostream& os);

}  // namespace horadam::verify

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qumond::verify {

struct CheckResult {
  std::string check_id;
  std::string lemma;
  double observed = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct Options {
  int n = 64;
  double half_width = 2.0;
  std::uint64_t seed = 20260823;
  int blowup_i_max = 20;
  double only_q = 0.0;                 // restrict blowup checks to one q (0 = all)
  std::vector<std::string> only;      // keep checks whose id or lemma contains any entry
  std::map<std::string, double> tol;  // per-check bound overrides by check_id
};

/// Runs the acceptance checks (the full suite, filtered by opts.only) and
/// returns one row per sub-check.
std::vector<CheckResult> run_checks(const Options& opts);

bool all_passed(const std::vector<CheckResult>& results);

/// CSV: header comment with the seed, then check_id,lemma,observed,bound,pass.
void write_report_csv(std::ostream& out, const std::vector<CheckResult>& results,
                      std::uint64_t seed);

}  // namespace qumond::verify

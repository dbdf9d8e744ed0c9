#pragma once

#include <iosfwd>

#include "admperm/kr_sets.hpp"

namespace admperm {

// Exit-code contract, stable for CI: 0 success, 1 mathematical check
// failure, 2 usage/config error, 3 resource budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::string case_label;         // verify: "e6" or "e7"
  std::string type_label = "E6";
  std::string coweight = "rho1";  // "rho<i>" or comma-separated rationals
  std::string set_kind = "both";  // adm | perm | both
  int workers = 0;                // 0 = hardware concurrency
  std::size_t budget_mb = 6144;
  std::string cache_dir;
  std::string json_out;
  std::string list_out;
  int max_rank = 3;
  // check: element given either as JSON or as the pair of words meaning
  // w2 t_mu w1^{-1}.
  std::string element_json;
  std::vector<int> left_word;
  std::vector<int> right_word;
  bool words_given = false;
  std::string recheck_path;
};

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_recheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Resolves "rho<i>" or an explicit comma-separated rational vector.
QVec parse_coweight_selector(const RootDatum& datum, const std::string& selector);

}  // namespace admperm

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "admperm/runs.hpp"

namespace {

std::vector<int> parse_word(const std::string& csv) {
  std::vector<int> w;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string part =
        csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!part.empty()) w.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for mu-admissible and mu-permissible sets of "
               "(extended) affine Weyl groups"};
  app.require_subcommand(1);

  admperm::RunConfig cfg;
  if (const char* env = std::getenv("ADMPERM_CACHE_DIR")) cfg.cache_dir = env;

  auto* verify = app.add_subcommand(
      "verify", "Verify the published E6/E7 counterexample element");
  verify->add_option("case", cfg.case_label, "e6 or e7")->required();
  verify->add_option("--json", cfg.json_out, "write the certificate JSON here");

  auto* enumerate =
      app.add_subcommand("enumerate", "Enumerate Adm(mu) and/or Perm(mu)");
  enumerate->add_option("--type", cfg.type_label, "root system type, e.g. E6")
      ->required();
  enumerate->add_option("--coweight", cfg.coweight,
                        "rho<i> or explicit p/q,... vector")
      ->required();
  enumerate->add_option("--set", cfg.set_kind, "adm, perm or both");
  enumerate->add_option("--workers", cfg.workers, "parallel workers (default: all)");
  enumerate->add_option("--budget-mb", cfg.budget_mb, "memory budget in MiB");
  enumerate->add_option("--cache", cfg.cache_dir,
                        "cache directory (also: ADMPERM_CACHE_DIR)");
  enumerate->add_option("--json", cfg.json_out, "write the report JSON here");
  enumerate->add_option("--list", cfg.list_out,
                        "stream the elements to this JSONL file");

  auto* check = app.add_subcommand("check", "Check one element");
  check->add_option("--type", cfg.type_label)->required();
  check->add_option("--coweight", cfg.coweight)->required();
  check->add_option("--element", cfg.element_json,
                    "element as {\"lambda\": [...], \"word\": [...]}");
  std::string left_csv, right_csv;
  check->add_option("--left-word", left_csv, "word of w2 (comma separated)");
  check->add_option("--right-word", right_csv,
                    "word of w1; the element is w2 t_mu w1^{-1}");
  check->add_option("--json", cfg.json_out, "write the certificate JSON here");

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "Run the brute-force oracle validation suites");
  crosscheck->add_option("--max-rank", cfg.max_rank, "largest rank for the all-pairs suites (1..4)");

  auto* recheck =
      app.add_subcommand("recheck", "Re-validate a certificate JSON file");
  recheck->add_option("file", cfg.recheck_path, "certificate path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return admperm::kExitConfig;
  }

  try {
    if (verify->parsed()) return admperm::run_verify(cfg, std::cout, std::cerr);
    if (enumerate->parsed()) return admperm::run_enumerate(cfg, std::cout, std::cerr);
    if (check->parsed()) {
      if (!left_csv.empty() || !right_csv.empty()) {
        cfg.left_word = parse_word(left_csv);
        cfg.right_word = parse_word(right_csv);
        cfg.words_given = true;
      }
      return admperm::run_check(cfg, std::cout, std::cerr);
    }
    if (crosscheck->parsed()) return admperm::run_crosscheck(cfg, std::cout, std::cerr);
    if (recheck->parsed()) return admperm::run_recheck(cfg, std::cout, std::cerr);
  } catch (const admperm::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return admperm::kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return admperm::kExitConfig;
  }
  return admperm::kExitConfig;
}

#include "admperm/runs.hpp"

#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "admperm/io.hpp"
#include "admperm/oracles.hpp"
#include "json.hpp"

namespace admperm {

namespace {

int resolved_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

EnumOptions make_enum_options(const RunConfig& cfg, std::ostream& err) {
  EnumOptions opt;
  opt.workers = resolved_workers(cfg);
  opt.budget_bytes = cfg.budget_mb << 20;
  opt.cache_dir = cfg.cache_dir;
  opt.list_path = cfg.list_out;
  opt.collect_elements = !cfg.list_out.empty();
  auto mutex = std::make_shared<std::mutex>();
  opt.progress = [&err, mutex](const std::string& line) {
    std::lock_guard<std::mutex> lock(*mutex);
    err << line << "\n";
  };
  return opt;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << "\n";
}

void print_enum_report(std::ostream& out, const EnumReport& r) {
  out << r.kind << " |" << r.kind << "(" << r.mu_desc << ")| = " << r.cardinality
      << "  (type " << r.type_label << ", " << r.workers << " workers, "
      << r.wall_seconds << "s)\n";
}

}  // namespace

QVec parse_coweight_selector(const RootDatum& datum, const std::string& selector) {
  if (selector.rfind("rho", 0) == 0) {
    int i = std::stoi(selector.substr(3));
    if (i < 1 || i > datum.rank)
      throw std::invalid_argument("coweight index out of range: " + selector);
    return datum.fundamental_coweights[i - 1];
  }
  QVec v;
  std::size_t pos = 0;
  while (pos <= selector.size()) {
    std::size_t comma = selector.find(',', pos);
    std::string part = selector.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    v.push_back(Rat::parse(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(v.size()) != datum.dim)
    throw std::invalid_argument("coweight vector has wrong dimension");
  return v;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CounterexampleCase c;
  if (cfg.case_label == "e6" || cfg.case_label == "E6") {
    c = CounterexampleCase::kE6;
  } else if (cfg.case_label == "e7" || cfg.case_label == "E7") {
    c = CounterexampleCase::kE7;
  } else {
    err << "usage: verify {e6|e7}; got '" << cfg.case_label << "'\n";
    return kExitConfig;
  }
  CounterexampleReport report = verify_counterexample(c);
  out << "counterexample verification: " << report.case_label << "\n";
  for (const SubCheck& sc : report.checks) {
    out << "  [" << (sc.pass ? "PASS" : "FAIL") << "] " << sc.name;
    if (!sc.detail.empty()) out << "  (" << sc.detail << ")";
    out << "\n";
  }
  out << "summary: perm=" << (report.perm.permissible ? "true" : "false")
      << " adm=" << (report.pair.admissible ? "true" : "false")
      << " haines=" << (report.haines ? "true" : "false") << " => "
      << (report.all_pass ? "ALL CHECKS PASS" : "CHECKS FAILED") << "\n";
  if (!cfg.json_out.empty())
    write_file(cfg.json_out, counterexample_report_to_json(report));
  return report.all_pass ? kExitOk : kExitCheckFailed;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.set_kind != "adm" && cfg.set_kind != "perm" && cfg.set_kind != "both") {
    err << "enumerate: --set must be adm, perm or both\n";
    return kExitConfig;
  }
  try {
    RootDatum datum = build_root_datum(cfg.type_label);
    Coweight mu = make_coweight(datum, parse_coweight_selector(datum, cfg.coweight));
    EnumOptions opt = make_enum_options(cfg, err);
    KrEnumerator en(datum, mu, opt);

    nlohmann::json j;
    int exit_code = kExitOk;
    if (cfg.set_kind == "both") {
      BothReport b = en.enumerate_both();
      print_enum_report(out, b.adm);
      print_enum_report(out, b.perm);
      out << "adm=" << b.adm.cardinality << " perm=" << b.perm.cardinality
          << " diff=" << b.difference
          << " subset=" << (b.subset_ok ? "ok" : "VIOLATED") << "\n";
      j["adm"] = nlohmann::json::parse(enum_report_to_json(b.adm));
      j["perm"] = nlohmann::json::parse(enum_report_to_json(b.perm));
      j["subset_ok"] = b.subset_ok;
      j["difference"] = b.difference;
      if (!b.subset_ok) {
        err << "enumerate: admissible set is not contained in the permissible set\n";
        exit_code = kExitCheckFailed;
      }
    } else {
      EnumReport r = cfg.set_kind == "adm" ? en.enumerate_adm() : en.enumerate_perm();
      print_enum_report(out, r);
      j = nlohmann::json::parse(enum_report_to_json(r));
    }
    if (!cfg.json_out.empty()) write_file(cfg.json_out, j.dump(2));
    return exit_code;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "enumerate: " << e.what() << "\n";
    return kExitConfig;
  }
}

int run_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    RootDatum datum = build_root_datum(cfg.type_label);
    Coweight mu = make_coweight(datum, parse_coweight_selector(datum, cfg.coweight));
    if (!mu.integral) {
      err << "check: coweight is not in X_*\n";
      return kExitConfig;
    }
    ExtAffElt x = aff_identity(datum);
    if (cfg.words_given) {
      WeylElt w2 = from_word(datum, cfg.left_word);
      WeylElt w1 = from_word(datum, cfg.right_word);
      x = aff_mul(datum,
                  aff_mul(datum, aff_from_finite(datum, w2),
                          aff_translation(datum, mu.vec)),
                  aff_from_finite(datum, weyl_inverse(w1)));
    } else if (!cfg.element_json.empty()) {
      x = element_from_json(datum, cfg.element_json);
    } else {
      err << "check: provide --element or --left-word/--right-word\n";
      return kExitConfig;
    }

    PermResult perm = is_permissible(datum, mu, x);
    // He-Lam applies on W t_mu W; everywhere else fall back to the direct
    // Bruhat search.
    std::optional<HeLamPair> pair;
    bool admissible;
    try {
      pair = helam_pair(datum, mu, x);
      admissible = pair->admissible;
    } catch (const std::invalid_argument&) {
      admissible = is_admissible_direct(datum, mu, x);
    }
    bool haines = haines_necessary(datum, mu, x);

    out << "perm=" << (perm.permissible ? "true" : "false");
    if (!perm.permissible) out << " (" << perm.failure << ")";
    out << " adm=" << (admissible ? "true" : "false")
        << " haines=" << (haines ? "true" : "false") << "\n";
    std::string cert = certificate_to_json(datum, mu, x, perm,
                                           pair ? &*pair : nullptr, &haines);
    if (!cfg.json_out.empty())
      write_file(cfg.json_out, cert);
    else
      out << cert << "\n";
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "check: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "check: malformed element: " << e.what() << "\n";
    return kExitConfig;
  }
}

int run_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_rank < 1 || cfg.max_rank > 4) {
    err << "crosscheck: --max-rank must be between 1 and 4\n";
    return kExitConfig;
  }
  CrosscheckOptions opt;
  opt.max_rank = cfg.max_rank;
  bool ok = run_crosscheck_suites(opt, out);
  out << (ok ? "crosscheck: all suites passed\n" : "crosscheck: FAILED\n");
  return ok ? kExitOk : kExitCheckFailed;
}

int run_recheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.recheck_path);
  if (!in) {
    err << "recheck: cannot open " << cfg.recheck_path << "\n";
    return kExitConfig;
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  RecheckResult res = recheck_certificate(text);
  out << (res.ok ? "recheck: ok" : "recheck: FAILED") << " -- " << res.detail << "\n";
  return res.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace admperm

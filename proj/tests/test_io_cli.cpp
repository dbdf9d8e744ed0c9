#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "admperm/io.hpp"
#include "admperm/runs.hpp"

using namespace admperm;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("admperm_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("element stream lines round trip") {
  RootDatum d = build_root_datum("E6");
  ExtAffElt x = aff_make(d, d.fundamental_coweights[0], from_word(d, {1, 3, 1}));
  std::string line =
      element_stream_line(d, x.lambda, reduced_word(d, x.w));
  ExtAffElt back = element_from_json(d, line);
  CHECK(back == x);
  CHECK_THROWS(element_from_json(d, "{\"lambda\": [\"1\"], \"word\": []}"));
  CHECK_THROWS(element_from_json(d, "not json"));
}

TEST_CASE("group index cache round trip and validation") {
  TempDir tmp;
  RootDatum d = build_root_datum("B3");
  GroupIndex idx = GroupIndex::build(d, true);
  save_group_index_cache(tmp.path.string(), d, idx);
  auto loaded = load_group_index_cache(tmp.path.string(), d, true);
  REQUIRE(loaded.has_value());
  CHECK(loaded->size() == idx.size());
  for (std::uint32_t id = 0; id < idx.size(); ++id) {
    CHECK(loaded->length(id) == idx.length(id));
    CHECK(loaded->inverse(id) == idx.inverse(id));
    for (int i = 1; i <= d.rank; ++i)
      CHECK(loaded->left_mul(i, id) == idx.left_mul(i, id));
  }
  // corrupting the payload invalidates the checksum
  std::string file = tmp.path.string() + "/index_B3.bin";
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(200);
    char byte = 0x5a;
    f.write(&byte, 1);
  }
  CHECK_FALSE(load_group_index_cache(tmp.path.string(), d, true).has_value());
  // a cache for another type is not picked up
  RootDatum c3 = build_root_datum("C3");
  CHECK_FALSE(load_group_index_cache(tmp.path.string(), c3, true).has_value());
}

TEST_CASE("interval cache round trip") {
  TempDir tmp;
  std::map<std::string, unsigned long long> counts = {{"1.", 2}, {"2.1.", 4}};
  save_interval_cache(tmp.path.string(), "A2", counts);
  auto loaded = load_interval_cache(tmp.path.string(), "A2");
  CHECK(loaded == counts);
  CHECK(load_interval_cache(tmp.path.string(), "C2").empty());
}

TEST_CASE("enumerate reuses caches and stays correct") {
  TempDir tmp;
  RunConfig cfg;
  cfg.type_label = "C3";
  cfg.coweight = "rho3";
  cfg.set_kind = "adm";
  cfg.workers = 2;
  cfg.cache_dir = tmp.path.string();
  std::ostringstream out1, err1, out2, err2;
  CHECK(run_enumerate(cfg, out1, err1) == kExitOk);
  CHECK(std::filesystem::exists(tmp.path / "index_C3.bin"));
  CHECK(std::filesystem::exists(tmp.path / "intervals_C3.json"));
  CHECK(run_enumerate(cfg, out2, err2) == kExitOk);
  CHECK(out1.str().substr(0, out1.str().find("(")) ==
        out2.str().substr(0, out2.str().find("(")));
  CHECK(out1.str().find("= 79") != std::string::npos);
}

TEST_CASE("run_verify exit codes and JSON output") {
  TempDir tmp;
  RunConfig cfg;
  cfg.case_label = "e6";
  cfg.json_out = (tmp.path / "cert.json").string();
  std::ostringstream out, err;
  CHECK(run_verify(cfg, out, err) == kExitOk);
  CHECK(out.str().find("ALL CHECKS PASS") != std::string::npos);
  std::ifstream in(cfg.json_out);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(recheck_certificate(text).ok);

  RunConfig bad;
  bad.case_label = "e5";
  std::ostringstream out2, err2;
  CHECK(run_verify(bad, out2, err2) == kExitConfig);
}

TEST_CASE("run_enumerate exit codes") {
  RunConfig cfg;
  cfg.type_label = "A2";
  cfg.coweight = "rho1";
  cfg.set_kind = "both";
  cfg.workers = 1;
  std::ostringstream out, err;
  CHECK(run_enumerate(cfg, out, err) == kExitOk);
  CHECK(out.str().find("adm=7 perm=7 diff=0 subset=ok") != std::string::npos);

  cfg.set_kind = "nonsense";
  std::ostringstream o2, e2;
  CHECK(run_enumerate(cfg, o2, e2) == kExitConfig);

  cfg.set_kind = "adm";
  cfg.coweight = "rho9";
  std::ostringstream o3, e3;
  CHECK(run_enumerate(cfg, o3, e3) == kExitConfig);

  cfg.coweight = "rho1";
  cfg.budget_mb = 0;
  std::ostringstream o4, e4;
  CHECK(run_enumerate(cfg, o4, e4) == kExitBudget);
}

TEST_CASE("run_enumerate streams elements") {
  TempDir tmp;
  RunConfig cfg;
  cfg.type_label = "A2";
  cfg.coweight = "rho1";
  cfg.set_kind = "adm";
  cfg.workers = 1;
  cfg.list_out = (tmp.path / "adm.jsonl").string();
  std::ostringstream out, err;
  CHECK(run_enumerate(cfg, out, err) == kExitOk);
  std::ifstream in(cfg.list_out);
  REQUIRE(in.good());
  RootDatum d = build_root_datum("A2");
  Coweight mu = make_coweight(d, d.fundamental_coweights[0]);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ExtAffElt x = element_from_json(d, line);
    CHECK(is_admissible_helam(d, mu, x));
    ++n;
  }
  CHECK(n == 7);
}

TEST_CASE("run_check verdict lines and element forms") {
  RunConfig cfg;
  cfg.type_label = "E6";
  cfg.coweight = "rho1";
  cfg.left_word = {4, 5, 6, 2, 4, 5};
  cfg.right_word = {2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1};
  cfg.words_given = true;
  std::ostringstream out, err;
  CHECK(run_check(cfg, out, err) == kExitOk);
  CHECK(out.str().find("perm=true adm=false") != std::string::npos);

  // t_mu as an explicit element
  RunConfig cfg2;
  cfg2.type_label = "E6";
  cfg2.coweight = "rho1";
  cfg2.element_json =
      R"({"lambda": ["0","0","0","0","0","-2/3","-2/3","2/3"], "word": []})";
  std::ostringstream out2, err2;
  CHECK(run_check(cfg2, out2, err2) == kExitOk);
  CHECK(out2.str().find("perm=true adm=true") != std::string::npos);

  // t_{2mu}: permissibility fails at the origin vertex
  RunConfig cfg3;
  cfg3.type_label = "E6";
  cfg3.coweight = "rho1";
  cfg3.element_json =
      R"({"lambda": ["0","0","0","0","0","-4/3","-4/3","4/3"], "word": []})";
  std::ostringstream out3, err3;
  CHECK(run_check(cfg3, out3, err3) == kExitOk);
  CHECK(out3.str().find("perm=false") != std::string::npos);
  CHECK(out3.str().find("adm=false") != std::string::npos);

  RunConfig bad;
  bad.type_label = "E6";
  bad.coweight = "rho1";
  bad.element_json = "{broken";
  std::ostringstream out4, err4;
  CHECK(run_check(bad, out4, err4) == kExitConfig);

  RunConfig none;
  none.type_label = "E6";
  none.coweight = "rho1";
  std::ostringstream out5, err5;
  CHECK(run_check(none, out5, err5) == kExitConfig);
}

TEST_CASE("run_crosscheck validates the rank limit") {
  RunConfig cfg;
  cfg.max_rank = 9;
  std::ostringstream out, err;
  CHECK(run_crosscheck(cfg, out, err) == kExitConfig);
  cfg.max_rank = 1;
  std::ostringstream out2, err2;
  CHECK(run_crosscheck(cfg, out2, err2) == kExitOk);
}

TEST_CASE("run_recheck on files") {
  TempDir tmp;
  RunConfig v;
  v.case_label = "e7";
  v.json_out = (tmp.path / "e7.json").string();
  std::ostringstream out, err;
  REQUIRE(run_verify(v, out, err) == kExitOk);

  RunConfig rc;
  rc.recheck_path = v.json_out;
  std::ostringstream out2, err2;
  CHECK(run_recheck(rc, out2, err2) == kExitOk);

  rc.recheck_path = (tmp.path / "missing.json").string();
  std::ostringstream out3, err3;
  CHECK(run_recheck(rc, out3, err3) == kExitConfig);
}

TEST_CASE("coweight selector parsing") {
  RootDatum d = build_root_datum("E6");
  CHECK(parse_coweight_selector(d, "rho1") == d.fundamental_coweights[0]);
  CHECK(parse_coweight_selector(d, "0,0,0,0,0,-2/3,-2/3,2/3") ==
        d.fundamental_coweights[0]);
  CHECK_THROWS_AS(parse_coweight_selector(d, "rho7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coweight_selector(d, "1,2"), std::invalid_argument);
}

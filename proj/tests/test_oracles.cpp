#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "admperm/oracles.hpp"

using namespace admperm;

TEST_CASE("cover-closure oracle agrees with basic Bruhat facts") {
  RootDatum d = build_root_datum("A2");
  BruhatOracle oracle(d);
  CHECK(oracle.elements().size() == 6);
  int e = oracle.index_of(weyl_identity(d));
  for (std::size_t k = 0; k < oracle.elements().size(); ++k) {
    CHECK(oracle.le(e, static_cast<int>(k)));  // identity below everything
    CHECK(oracle.le(static_cast<int>(k), static_cast<int>(k)));
  }
  // antisymmetry and the length filter
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t w = 0; w < 6; ++w) {
      if (u != w && oracle.le(u, w)) {
        CHECK_FALSE(oracle.le(w, u));
        CHECK(length(d, oracle.elements()[u]) < length(d, oracle.elements()[w]));
      }
    }
}

TEST_CASE("bruhat transitivity on C2, exhaustively") {
  RootDatum d = build_root_datum("C2");
  BruhatOracle oracle(d);
  int n = static_cast<int>(oracle.elements().size());
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      for (int v = 0; v < n; ++v)
        if (oracle.le(u, w) && oracle.le(w, v)) CHECK(oracle.le(u, v));
}

TEST_CASE("hull oracle on A1 is the segment") {
  RootDatum d = build_root_datum("A1");
  const QVec& mu = d.fundamental_coweights[0];  // (1/2, -1/2)
  HullOracle oracle(d, mu);
  CHECK(oracle.member(mu));
  CHECK(oracle.member(qvec_neg(mu)));
  CHECK(oracle.member(QVec(d.dim)));
  CHECK(oracle.member(qvec_scaled(mu, Rat(1, 3))));
  CHECK_FALSE(oracle.member(qvec_scaled(mu, Rat(3, 2))));
}

TEST_CASE("hull oracle matches the dominance test on C2 corner cases") {
  RootDatum d = build_root_datum("C2");
  const QVec& mu = d.fundamental_coweights[1];
  HullOracle oracle(d, mu);
  for (const QVec& v : sample_coroot_span(d, 500, 99))
    CHECK(oracle.member(v) == in_hull(d, v, mu).has_value());
  for (const QVec& p : orbit(d, mu)) {
    CHECK(oracle.member(p));
    CHECK(in_hull(d, p, mu).has_value());
  }
}

TEST_CASE("affine ball radius and growth") {
  RootDatum d = build_root_datum("A2");
  auto ball0 = affine_ball(d, 0);
  CHECK(ball0.size() == 1);
  auto ball1 = affine_ball(d, 1);
  CHECK(ball1.size() == 4);  // identity + three affine generators
  auto ball3 = affine_ball(d, 3);
  for (const auto& [x, dist] : ball3) {
    CHECK(dist <= 3);
    CHECK(omega_class(d, x).is_zero());
  }
}

TEST_CASE("minuscule coset fact checker detects a violation") {
  // For the non-minuscule rho_1 of C2 the box contains interior lattice
  // points outside the orbit, so the checker must say no.
  RootDatum d = build_root_datum("C2");
  std::string detail;
  CHECK(check_minuscule_coset_fact(d, d.fundamental_coweights[1], &detail));
  CHECK_FALSE(check_minuscule_coset_fact(d, d.fundamental_coweights[0], &detail));
  CHECK_FALSE(detail.empty());
}

TEST_CASE("crosscheck driver runs clean at max rank 2") {
  CrosscheckOptions opt;
  opt.max_rank = 2;
  opt.hull_samples = 100;
  opt.affine_radius = 5;
  std::ostringstream out;
  CHECK(run_crosscheck_suites(opt, out));
  CHECK(out.str().find("FAIL") == std::string::npos);
  CHECK(out.str().find("(a)") != std::string::npos);
  CHECK(out.str().find("(f)") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "admperm/finite_weyl.hpp"

using namespace admperm;

namespace {

QVec qv(std::initializer_list<const char*> entries) {
  QVec v;
  for (const char* e : entries) v.push_back(Rat::parse(e));
  return v;
}

}  // namespace

TEST_CASE("root counts and marks per type") {
  struct Expect {
    const char* label;
    int nroots;
    std::vector<long long> marks;
  };
  std::vector<Expect> table = {
      {"A1", 2, {1}},
      {"A2", 6, {1, 1}},
      {"A3", 12, {1, 1, 1}},
      {"A4", 20, {1, 1, 1, 1}},
      {"B3", 18, {1, 2, 2}},
      {"C2", 8, {2, 1}},
      {"C3", 18, {2, 2, 1}},
      {"D4", 24, {1, 2, 1, 1}},
      {"E6", 72, {1, 2, 2, 3, 2, 1}},
      {"E7", 126, {2, 2, 3, 4, 3, 2, 1}},
  };
  for (const Expect& e : table) {
    CAPTURE(e.label);
    RootDatum d = build_root_datum(e.label);
    CHECK(d.num_roots() == e.nroots);
    CHECK(d.marks == e.marks);
  }
  CHECK_THROWS_AS(build_root_datum("E8"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("A5"), std::invalid_argument);
}

TEST_CASE("root/coroot pairing and dual basis invariants") {
  for (const char* label : {"A2", "B3", "C3", "D4", "E6", "E7"}) {
    CAPTURE(label);
    RootDatum d = build_root_datum(label);
    for (int r = 0; r < d.num_roots(); ++r)
      CHECK(qvec_dot(d.roots[r], d.coroots[r]) == Rat(2));
    for (int i = 1; i <= d.rank; ++i)
      for (int j = 1; j <= d.rank; ++j)
        CHECK(pairing(d, d.simple_root(i), d.fundamental_coweights[j - 1]) ==
              (i == j ? Rat(1) : Rat(0)));
    // highest root = sum of marks times simple roots
    QVec sum(d.dim);
    for (int i = 1; i <= d.rank; ++i)
      sum = qvec_add(sum, qvec_scaled(d.simple_root(i), Rat(d.marks[i - 1])));
    CHECK(sum == d.highest_root());
  }
}

TEST_CASE("negative roots mirror the positive order") {
  RootDatum d = build_root_datum("E6");
  int npos = d.num_positive();
  for (int r = 0; r < npos; ++r) {
    CHECK(d.roots[npos + r] == qvec_neg(d.roots[r]));
    CHECK(d.negation[r] == npos + r);
  }
}

TEST_CASE("E6/E7 explicit lists agree with closure from the base") {
  for (const char* label : {"E6", "E7"}) {
    CAPTURE(label);
    RootDatum d = build_root_datum(label);
    // Closure: orbit of the simple roots under the simple reflections.
    std::set<QVec> closure;
    std::vector<QVec> queue;
    for (int i = 1; i <= d.rank; ++i) {
      closure.insert(d.simple_root(i));
      queue.push_back(d.simple_root(i));
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int i = 1; i <= d.rank; ++i) {
        QVec img = qvec_sub(queue[k], qvec_scaled(d.simple_root(i),
                                                  qvec_dot(queue[k], d.simple_coroot(i))));
        if (closure.insert(img).second) queue.push_back(img);
      }
    }
    std::set<QVec> datum_roots(d.roots.begin(), d.roots.end());
    CHECK(closure == datum_roots);
  }
}

TEST_CASE("E6 realization satisfies the ambient subspace constraint") {
  RootDatum d = build_root_datum("E6");
  for (const QVec& r : d.roots) {
    CHECK(r[5] == r[6]);
    CHECK(r[5] == -r[7]);
  }
  for (const QVec& f : d.fundamental_coweights) {
    CHECK(f[5] == f[6]);
    CHECK(f[5] == -f[7]);
  }
  RootDatum d7 = build_root_datum("E7");
  for (const QVec& r : d7.roots) CHECK(r[6] == -r[7]);
}

TEST_CASE("alcove vertices match the reference coordinates") {
  RootDatum e6 = build_root_datum("E6");
  std::vector<QVec> v6 = alcove_vertices(e6);
  REQUIRE(v6.size() == 7);
  CHECK(v6[0] == qv({"0", "0", "0", "0", "0", "-2/3", "-2/3", "2/3"}));
  CHECK(v6[1] == qv({"1/4", "1/4", "1/4", "1/4", "1/4", "-1/4", "-1/4", "1/4"}));
  CHECK(v6[2] == qv({"-1/4", "1/4", "1/4", "1/4", "1/4", "-5/12", "-5/12", "5/12"}));
  CHECK(v6[3] == qv({"0", "0", "1/3", "1/3", "1/3", "-1/3", "-1/3", "1/3"}));
  CHECK(v6[4] == qv({"0", "0", "0", "1/2", "1/2", "-1/3", "-1/3", "1/3"}));
  CHECK(v6[5] == qv({"0", "0", "0", "0", "1", "-1/3", "-1/3", "1/3"}));
  CHECK(qvec_is_zero(v6[6]));

  RootDatum e7 = build_root_datum("E7");
  std::vector<QVec> v7 = alcove_vertices(e7);
  REQUIRE(v7.size() == 8);
  CHECK(v7[0] == qv({"0", "0", "0", "0", "0", "0", "-1/2", "1/2"}));
  CHECK(v7[1] == qv({"1/4", "1/4", "1/4", "1/4", "1/4", "1/4", "-1/2", "1/2"}));
  CHECK(v7[2] == qv({"-1/6", "1/6", "1/6", "1/6", "1/6", "1/6", "-1/2", "1/2"}));
  CHECK(v7[3] == qv({"0", "0", "1/4", "1/4", "1/4", "1/4", "-1/2", "1/2"}));
  CHECK(v7[4] == qv({"0", "0", "0", "1/3", "1/3", "1/3", "-1/2", "1/2"}));
  CHECK(v7[5] == qv({"0", "0", "0", "0", "1/2", "1/2", "-1/2", "1/2"}));
  CHECK(v7[6] == qv({"0", "0", "0", "0", "0", "1", "-1/2", "1/2"}));
  CHECK(qvec_is_zero(v7[7]));
}

TEST_CASE("pairing reference values") {
  RootDatum e6 = build_root_datum("E6");
  CHECK(pairing(e6, e6.highest_root(), e6.fundamental_coweights[0]) == Rat(1));
  CHECK(pairing(e6, e6.simple_root(2), e6.fundamental_coweights[1]) == Rat(1));
  RootDatum e7 = build_root_datum("E7");
  CHECK(pairing(e7, e7.highest_root(), e7.fundamental_coweights[6]) == Rat(1));
  CHECK_THROWS_AS(pairing(e6, QVec{Rat(1)}, e6.fundamental_coweights[0]),
                  std::invalid_argument);
}

TEST_CASE("minuscule detection") {
  RootDatum e6 = build_root_datum("E6");
  CHECK(is_minuscule(e6, make_coweight(e6, e6.fundamental_coweights[0])));
  CHECK(is_minuscule(e6, make_coweight(e6, e6.fundamental_coweights[5])));
  CHECK(is_minuscule(e6, make_coweight(e6, QVec(e6.dim))));
  // rho_4 pairs to 3 with the highest root; a direct scan agrees.
  Coweight rho4 = make_coweight(e6, e6.fundamental_coweights[3]);
  CHECK_FALSE(is_minuscule(e6, rho4));
  bool scan_found_big = false;
  for (const QVec& alpha : e6.roots) {
    Rat p = qvec_dot(alpha, rho4.vec);
    if (p > Rat(1) || p < Rat(-1)) scan_found_big = true;
  }
  CHECK(scan_found_big);
  RootDatum e7 = build_root_datum("E7");
  CHECK(is_minuscule(e7, make_coweight(e7, e7.fundamental_coweights[6])));
  CHECK_FALSE(is_minuscule(e7, make_coweight(e7, e7.fundamental_coweights[0])));
}

TEST_CASE("coroot lattice membership") {
  RootDatum e6 = build_root_datum("E6");
  CHECK(in_coroot_lattice(e6, e6.simple_coroot(1)));
  // index of Q(R^vee) in P(R^vee) is 3 for E6
  const QVec& rho1 = e6.fundamental_coweights[0];
  CHECK_FALSE(in_coroot_lattice(e6, rho1));
  CHECK_FALSE(in_coroot_lattice(e6, qvec_add(rho1, rho1)));
  CHECK(in_coroot_lattice(e6, qvec_scaled(rho1, Rat(3))));
  // orbit differences land in the coroot lattice
  for (const QVec& p : orbit(e6, rho1))
    CHECK(in_coroot_lattice(e6, qvec_sub(p, rho1)));
}

TEST_CASE("coweight integrality flag") {
  RootDatum e6 = build_root_datum("E6");
  CHECK(make_coweight(e6, e6.fundamental_coweights[0]).integral);
  CHECK(make_coweight(e6, e6.simple_coroot(3)).integral);
  CHECK_FALSE(
      make_coweight(e6, qvec_scaled(e6.fundamental_coweights[0], Rat(1, 2))).integral);
}

TEST_CASE("json serialization golden files") {
  for (const char* label : {"A2", "C2"}) {
    CAPTURE(label);
    RootDatum d = build_root_datum(label);
    std::string got = root_datum_to_json(d);
    std::string path = std::string(GOLDEN_DIR) + "/rootdatum_" +
                       (label == std::string("A2") ? "a2" : "c2") + ".json";
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string want((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    while (!want.empty() && (want.back() == '\n' || want.back() == ' '))
      want.pop_back();
    CHECK(got == want);
  }
}

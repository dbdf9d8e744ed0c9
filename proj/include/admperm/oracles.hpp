#pragma once

#include <iosfwd>

#include "admperm/kr_sets.hpp"

namespace admperm {

/// Brute-force Bruhat order on a small Weyl group: transitive closure of
/// the reflection-cover relation. Independent of the greedy subword test.
class BruhatOracle {
 public:
  explicit BruhatOracle(const RootDatum& datum);

  const std::vector<WeylElt>& elements() const { return elements_; }
  int index_of(const WeylElt& w) const;
  bool le(int u, int w) const { return le_[u][w]; }

 private:
  const RootDatum& datum_;
  std::vector<WeylElt> elements_;
  std::map<std::vector<uint16_t>, int> lookup_;
  std::vector<std::vector<bool>> le_;
};

/// Brute-force membership in conv(W mu) by exhaustive support-hyperplane
/// enumeration over orbit-point subsets, in simple-coroot coordinates.
/// Independent of the dominance-order test.
class HullOracle {
 public:
  HullOracle(const RootDatum& datum, const QVec& mu);

  bool member(const QVec& v) const;
  std::size_t num_constraints() const { return normals_.size(); }

 private:
  const RootDatum& datum_;
  std::vector<QVec> normals_;  // constraint: n . x >= c in coroot coordinates
  std::vector<Rat> offsets_;
};

/// Distances from the identity in the left Cayley graph of W_a on the
/// affine generators, out to the given radius.
std::vector<std::pair<ExtAffElt, int>> affine_ball(const RootDatum& datum,
                                                   int max_len);

/// Exhaustively confirms P_mu intersect (mu + Q(R^vee)) = W mu over the
/// bounding coefficient box of the orbit.
bool check_minuscule_coset_fact(const RootDatum& datum, const QVec& mu,
                                std::string* detail);

/// Deterministic sample points in the span of the coroots.
std::vector<QVec> sample_coroot_span(const RootDatum& datum, int count,
                                     std::uint64_t seed);

struct CrosscheckOptions {
  int max_rank = 3;
  int hull_samples = 1000;
  int affine_radius = 8;
};

/// Runs the cross-validation suites (a)-(f); prints one line per sub-suite
/// and returns false at the first failure.
bool run_crosscheck_suites(const CrosscheckOptions& options, std::ostream& out);

}  // namespace admperm

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "admperm/rootdata.hpp"

namespace admperm {

/// Finite Weyl group element, stored as the permutation it induces on the
/// root list of its datum.
struct WeylElt {
  std::vector<uint16_t> perm;

  bool operator==(const WeylElt& o) const { return perm == o.perm; }
  bool operator!=(const WeylElt& o) const { return perm != o.perm; }
  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i) return false;
    return true;
  }
};

WeylElt weyl_identity(const RootDatum& datum);
WeylElt weyl_generator(const RootDatum& datum, int i);

/// Group product: (u * w)(v) = u(w(v)).
WeylElt weyl_mul(const WeylElt& u, const WeylElt& w);
WeylElt weyl_inverse(const WeylElt& w);

/// Product of simple reflections, left to right. Indices are 1-based.
WeylElt from_word(const RootDatum& datum, const std::vector<int>& word);

/// Number of positive roots sent to negative roots.
int length(const RootDatum& datum, const WeylElt& w);

/// Reduced word by greedy smallest-index left-descent extraction.
std::vector<int> reduced_word(const RootDatum& datum, const WeylElt& w);

/// Action on the ambient cocharacter space.
QVec act(const RootDatum& datum, const WeylElt& w, const QVec& v);

/// Matrix of the action on the full ambient space (columns are images of
/// the coordinate basis vectors).
QMatrix matrix_of(const RootDatum& datum, const WeylElt& w);

/// Greedy subword test for the Bruhat order: u <= w.
bool bruhat_le(const RootDatum& datum, const WeylElt& u, const WeylElt& w);

enum class CosetSide { kLeft, kRight };

/// Minimal-length representative of w W_I (kLeft) or W_I w (kRight).
/// I contains 1-based simple indices.
WeylElt min_coset_rep(const RootDatum& datum, const WeylElt& w,
                      const std::vector<int>& I, CosetSide side);

/// W-orbit of mu, BFS order with smallest generator index first; the orbit
/// starts at mu itself.
std::vector<QVec> orbit(const RootDatum& datum, const QVec& mu);

/// Some u with u(mu) = lambda (the BFS witness). Throws if lambda is not in
/// the orbit.
WeylElt orbit_witness(const RootDatum& datum, const QVec& mu, const QVec& lambda);

/// { i : <alpha_i, mu> = 0 }, 1-based.
std::vector<int> stabilizer_simple_indices(const RootDatum& datum, const QVec& mu);

/// Longest element of the parabolic subgroup W_I (I = all indices gives w_0).
WeylElt longest_element(const RootDatum& datum, const std::vector<int>& I);

struct DominantRep {
  QVec dominant;  // w(v)
  WeylElt w;
};

/// Applies the smallest-index negative-pairing reflection until dominant.
DominantRep dominant_representative(const RootDatum& datum, const QVec& v);

/// Certificate that v lies in the convex hull of the W-orbit of mu:
/// mu - dominant equals sum coefficients[i] * alpha_i^vee with all
/// coefficients >= 0, and dominant = w(v).
struct DominanceCertificate {
  QVec dominant;
  WeylElt w;
  QVec coefficients;
};

/// Membership of v in conv(W mu) for dominant mu, by dominance reduction.
/// Throws std::invalid_argument when mu - v^+ leaves the span of the
/// coroots (malformed input).
std::optional<DominanceCertificate> in_hull(const RootDatum& datum, const QVec& v,
                                            const QVec& mu);

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full BFS enumeration of W over a scaled regular cocharacter orbit.
///
/// Elements are identified with integer coordinate keys; id 0 is the
/// identity and ids are sorted by length (BFS generation order). With
/// tables enabled, left/right generator multiplication and inversion are
/// O(1) array lookups; without them every operation falls back to exact
/// vector arithmetic plus a hash probe.
class GroupIndex {
 public:
  static GroupIndex build(const RootDatum& datum, bool with_tables,
                          std::size_t budget_bytes = kDefaultBudget);

  static constexpr std::size_t kDefaultBudget = 6ULL << 30;

  std::uint32_t size() const { return size_; }
  bool has_tables() const { return has_tables_; }
  int rank() const { return rank_; }
  int length(std::uint32_t id) const { return lengths_[id]; }

  /// id of s_i * w (1-based generator index).
  std::uint32_t left_mul(int i, std::uint32_t id) const;
  /// id of w * s_i; requires tables.
  std::uint32_t right_mul(std::uint32_t id, int i) const;
  /// id of w^{-1}; requires tables.
  std::uint32_t inverse(std::uint32_t id) const;

  std::vector<int> reduced_word(std::uint32_t id) const;
  std::uint32_t id_of_word(const std::vector<int>& word) const;
  std::uint32_t id_of(const RootDatum& datum, const WeylElt& w) const;
  WeylElt element(const RootDatum& datum, std::uint32_t id) const;

  /// Greedy subword Bruhat test through the tables; requires tables.
  bool bruhat_le_ids(std::uint32_t u, std::uint32_t w) const;
  bool bruhat_le_word(std::uint32_t u, const std::vector<int>& word_of_w) const;

  // Cache-file interface; see io.hpp for the binary format.
  const std::vector<std::uint8_t>& raw_lengths() const { return lengths_; }
  const std::vector<std::int32_t>& raw_keys() const { return keys_; }
  const std::vector<std::uint32_t>& raw_left() const { return left_; }
  const std::vector<std::uint32_t>& raw_right() const { return right_; }
  const std::vector<std::uint32_t>& raw_inv() const { return inv_; }
  static GroupIndex from_raw(const RootDatum& datum, bool with_tables,
                             std::vector<std::uint8_t> lengths,
                             std::vector<std::int32_t> keys,
                             std::vector<std::uint32_t> left,
                             std::vector<std::uint32_t> right,
                             std::vector<std::uint32_t> inv);

 private:
  GroupIndex() = default;
  void build_hash();
  std::uint32_t lookup_key(const std::int32_t* key) const;
  void reflect_key(int i, const std::int32_t* in, std::int32_t* out) const;
  void prepare_reflection_data(const RootDatum& datum);

  std::uint32_t size_ = 0;
  int rank_ = 0;
  int dim_ = 0;
  bool has_tables_ = false;
  std::vector<std::uint8_t> lengths_;
  std::vector<std::int32_t> keys_;  // size_ * dim_
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> hash_;  // open addressing, power-of-two size
  std::uint64_t hash_mask_ = 0;
  // integer reflection data: s_i(v) = v - (dot(alpha_num_i, v)/alpha_den_i) * coroot_i
  std::vector<std::vector<std::int64_t>> alpha_num_;
  std::vector<std::int64_t> alpha_den_;
  std::vector<std::vector<std::int64_t>> coroot_num_;
  std::vector<std::int64_t> coroot_den_;
  std::vector<std::int32_t> base_key_;
};

}  // namespace admperm

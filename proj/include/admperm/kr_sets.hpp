#pragma once

#include <functional>
#include <memory>
#include <string>

#include "admperm/affine_weyl.hpp"

namespace admperm {

/// Hull certificate for one alcove vertex: the displacement x(a_i) - a_i
/// together with its dominance data.
struct VertexMembership {
  QVec displacement;
  DominanceCertificate cert;
};

/// Machine-checkable evidence for mu-permissibility: one hull certificate
/// per vertex a_1..a_{l+1}, plus integer coordinates of x(0) - mu in the
/// coroot basis (the translation-coset witness).
struct PermCertificate {
  std::vector<VertexMembership> vertices;
  std::vector<long long> translation_coords;
};

struct PermResult {
  bool permissible = false;
  std::optional<PermCertificate> certificate;
  // 0 = translation-coset condition failed; i >= 1 = hull test failed at a_i.
  int failing_vertex = -1;
  std::string failure;
};

PermResult is_permissible(const RootDatum& datum, const Coweight& mu,
                          const ExtAffElt& x);

/// Record of one greedy subword run for z2 <= z1.
struct SubwordTrace {
  std::vector<int> word_of_z1;
  std::vector<bool> applied;       // letters that lowered the left side
  std::vector<int> residue_word;   // reduced word of the residue; empty iff le
};

/// Canonical pair of the bijection W^{I(mu)} x W -> W t_mu W,
/// (z1, z2) -> z2 t_mu z1^{-1}.
struct HeLamPair {
  WeylElt z1;
  WeylElt z2;
  bool admissible = false;
  SubwordTrace trace;
};

/// Throws std::invalid_argument when x is not in W t_mu W.
HeLamPair helam_pair(const RootDatum& datum, const Coweight& mu, const ExtAffElt& x);

bool is_admissible_helam(const RootDatum& datum, const Coweight& mu, const ExtAffElt& x);

/// Direct definition: x <= t_{w(mu)} for some w, searched over the orbit
/// translations. Independent cross-check of the He-Lam route.
bool is_admissible_direct(const RootDatum& datum, const Coweight& mu, const ExtAffElt& x);

/// Necessary condition for admissibility: x <= t_{x(0)}.
bool haines_necessary(const RootDatum& datum, const Coweight& mu, const ExtAffElt& x);

struct EnumOptions {
  int workers = 1;
  std::size_t budget_bytes = GroupIndex::kDefaultBudget;
  std::string cache_dir;        // empty disables index/interval caching
  bool collect_elements = false;
  std::string list_path;        // JSONL element stream when nonempty
  std::function<void(const std::string&)> progress;
};

struct EnumReport {
  std::string type_label;
  std::string mu_desc;
  std::string kind;  // "adm" or "perm"
  unsigned long long cardinality = 0;
  std::string stream_location;
  double wall_seconds = 0;
  int workers = 1;
  // (orbit index of lambda, group id of w) for x = t_lambda w; filled when
  // collect_elements is set.
  std::vector<std::pair<int, std::uint32_t>> elements;
};

struct BothReport {
  EnumReport adm;
  EnumReport perm;
  bool subset_ok = false;
  unsigned long long difference = 0;
};

/// Shared enumeration engine: builds the group index with multiplication
/// tables once and serves both set enumerations over it.
class KrEnumerator {
 public:
  KrEnumerator(const RootDatum& datum, const Coweight& mu, const EnumOptions& options);
  ~KrEnumerator();

  EnumReport enumerate_adm();
  EnumReport enumerate_perm();
  /// Runs both, verifies Adm subset of Perm elementwise, reports the
  /// difference count.
  BothReport enumerate_both();

  const GroupIndex& index() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

EnumReport enumerate_adm(const RootDatum& datum, const Coweight& mu,
                         const EnumOptions& options);
EnumReport enumerate_perm(const RootDatum& datum, const Coweight& mu,
                          const EnumOptions& options);

enum class CounterexampleCase { kE6, kE7 };

struct SubCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CounterexampleReport {
  std::string case_label;
  std::vector<SubCheck> checks;
  bool all_pass = false;
  // Underlying data, for certificate output and further inspection.
  std::shared_ptr<RootDatum> datum;
  Coweight mu;
  ExtAffElt x;
  PermResult perm;
  HeLamPair pair;
  bool haines = false;
};

/// Builds the published E6/E7 element x = w2 t_mu w1^{-1} and runs every
/// sub-check against the embedded reference data. Optional override for the
/// w2 word is the negative-control hook.
CounterexampleReport verify_counterexample(CounterexampleCase c,
                                           const std::vector<int>* override_w2_word = nullptr);

}  // namespace admperm

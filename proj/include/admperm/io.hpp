#pragma once

#include <map>
#include <optional>
#include <string>

#include "admperm/kr_sets.hpp"

namespace admperm {

/// One JSON-lines record for an extended affine element t_lambda * w:
/// {"lambda": ["p/q", ...], "word": [i, ...]}.
std::string element_stream_line(const RootDatum& datum, const QVec& lambda,
                                const std::vector<int>& word);

/// Parses the {"lambda", "word"} object form back into an element.
ExtAffElt element_from_json(const RootDatum& datum, const std::string& json_text);

/// Full machine-readable certificate for one element check; all rationals
/// are "p/q" strings. The document is self-contained: recheck_certificate
/// revalidates it from the root datum alone, with no group enumeration.
std::string certificate_to_json(const RootDatum& datum, const Coweight& mu,
                                const ExtAffElt& x, const PermResult& perm,
                                const HeLamPair* pair, const bool* haines_verdict);

std::string counterexample_report_to_json(const CounterexampleReport& report);

struct RecheckResult {
  bool ok = false;
  std::string detail;
};

/// Re-validates a certificate document: certificate arithmetic, the greedy
/// subword run for the He-Lam pair, and the Haines verdict.
RecheckResult recheck_certificate(const std::string& json_text);

// Versioned binary cache for a GroupIndex with tables; the loader validates
// the group order and a checksum and returns nullopt on any mismatch.
void save_group_index_cache(const std::string& cache_dir, const RootDatum& datum,
                            const GroupIndex& index);
std::optional<GroupIndex> load_group_index_cache(const std::string& cache_dir,
                                                 const RootDatum& datum,
                                                 bool with_tables);

// Bruhat interval counts keyed by the canonical reduced word of z1.
std::map<std::string, unsigned long long> load_interval_cache(
    const std::string& cache_dir, const std::string& type_label);
void save_interval_cache(const std::string& cache_dir, const std::string& type_label,
                         const std::map<std::string, unsigned long long>& counts);

std::string enum_report_to_json(const EnumReport& report);

}  // namespace admperm

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "permrep/permutation.hpp"
#include "permrep/rewrite.hpp"
#include "permrep/rule.hpp"

namespace permrep {

/// Hard cap on the search universe: all lengths up to this bound.
inline constexpr int kMaxUniverseLen = 11;

/// Number of permutations of length 0..max_len.
std::uint64_t permutation_count(int max_len);

/// Dense interning of permutations: id = offset(n) + lexicographic rank,
/// so ids are ordered by (length, lexicographic).
std::uint32_t perm_rank(const Permutation& p);
Permutation perm_unrank(int n, std::uint32_t rank);
std::uint32_t perm_id(const Permutation& p);
Permutation perm_from_id(std::uint32_t id);
std::uint32_t total_ids(int max_len);

/// Every permutation of length 0..max_len exactly once, in (length,
/// lexicographic) order. max_len is capped at kMaxUniverseLen.
void enumerate_permutations(int max_len, const std::function<void(const Permutation&)>& fn);

struct PartitionClass {
  std::uint32_t id = 0;       // index in min_rep order
  Permutation min_rep;        // least member by (length, lex)
  std::uint64_t size = 0;     // members of length <= max_len
  std::vector<Permutation> members;  // present only when requested
};

/// Equivalence classes of all permutations of length <= max_len under one
/// rule, computed over the bounded universe of length <= max_len + slack.
/// Merges are sound; separations hold only within the ceiling, so the
/// partition can over-refine the true classes, never under-refine.
struct Partition {
  Rule rule;
  int max_len = 0;
  int slack = 0;
  bool has_members = false;
  std::vector<PartitionClass> classes;
  std::string engine_version;

  int ceiling() const { return max_len + slack; }
};

/// Unions every permutation in the universe with its forward neighbors
/// (each bidirectional edge inside the universe is the forward edge of its
/// longer endpoint), then restricts classes to length <= max_len.
/// threads = 0 picks the hardware concurrency; the result does not depend
/// on the thread count.
Partition compute_partition(const Rule& r, int max_len, int slack, bool keep_members,
                            int threads = 0);

/// Class index for every id < total_ids(max_len), numbered in min_rep
/// order exactly as in compute_partition.
std::vector<std::uint32_t> class_labels(const Rule& r, int max_len, int slack, int threads = 0);

/// Versioned single-document serialization; keys sorted, classes sorted by
/// min_rep, members omitted unless kept. Byte-stable for identical inputs.
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

struct CertificateStep {
  std::variant<ForwardMove, BackwardMove> move;
  Permutation result;

  bool is_forward() const { return std::holds_alternative<ForwardMove>(move); }

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/// A replayable move sequence witnessing equivalence of `start` with the
/// final step's result (or with `start` itself when empty).
struct Certificate {
  Permutation start;
  std::vector<CertificateStep> steps;

  const Permutation& final_perm() const { return steps.empty() ? start : steps.back().result; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Bidirectional breadth-first search over the universe of length <=
/// ceiling. Returns a shortest certificate, or nullopt when no path exists
/// within the ceiling (inconclusive; a larger ceiling may still connect).
std::optional<Certificate> find_path(const Rule& r, const Permutation& from,
                                     const Permutation& to, int ceiling);

/// Re-executes every step through the rewrite engine and returns the final
/// permutation. Throws on any mismatch: certificates are untrusted input.
Permutation replay(const Certificate& c, const Rule& r);

/// Searches for a path from p to any identity permutation within ceiling
/// |p| + slack. Returns nullopt when none found within the ceiling.
std::optional<Certificate> reach_identity(const Rule& r, const Permutation& p, int slack);

/// Identity-reachability witnesses for every permutation of length <=
/// max_len at once (one multi-source search instead of one per input).
/// Entry i corresponds to the permutation with id i.
std::vector<std::optional<Certificate>> identity_witnesses(const Rule& r, int max_len, int slack);

}  // namespace permrep

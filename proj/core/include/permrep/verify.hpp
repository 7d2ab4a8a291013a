#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permrep/explore.hpp"
#include "permrep/rule.hpp"

namespace permrep {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);

/// One named check. A failed merge (search connects permutations the class
/// theory separates) is always Fail; a missing merge within the ceiling is
/// only Inconclusive.
struct Check {
  std::string name;
  std::string anchor;  // the claim being checked, as a stable slug
  CheckStatus status = CheckStatus::Pass;
  std::string details;
};

struct Report {
  std::string subject;  // rule text or other scope line
  int max_len = 0;
  int slack = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  CheckStatus overall() const;
};

/// Reconciles the searched partition with the signature fibers and runs the
/// category-specific checks. If auto_escalate is set and the search is
/// still split beyond the theory count, slack grows until the counts agree
/// or the universe guard is hit.
Report verify_rule(const Rule& r, int max_len, int slack, bool auto_escalate, int threads = 0);

/// Same checks, but run against a previously computed partition (which must
/// carry member lists). No escalation is possible.
Report verify_partition(const Partition& partition);

/// Checks that reverse complement maps classes under beta bijectively onto
/// classes under rc(beta) at the same scale.
Report verify_symmetry(const StarString& beta, int max_len, int slack, int threads = 0);

/// For drop-only rules: random maximal forward-reduction orders from random
/// inputs of length <= 10 must all reach one permutation, equal to the
/// primitive (and to the leftmost-copy reduction where that is defined).
Report verify_confluence(const Rule& r, int samples, std::uint64_t seed);

/// Exhaustively checks down/up adjacency symmetry: sigma in down(p) iff
/// p in up(sigma), over all p of length <= max_len (max 8).
Report verify_inverse_adjacency(const Rule& r, int max_len);

/// Counts 123-avoiding permutations per length by brute force, checks them
/// against the Catalan recurrence, and cross-checks drop-only class counts.
Report catalan_check(int max_len);

std::string report_to_text(const Report& r);
std::string report_to_json_string(const Report& r);
std::string reports_to_json_string(const std::vector<Report>& rs);

}  // namespace permrep

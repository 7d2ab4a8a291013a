#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "permrep/permutation.hpp"

namespace permrep {

/// The four structural families of the 18 replacement rules 123 <-> beta.
enum class RuleCategory { Decreasing, DropOnly, Shift, SwitchNeighborDrop };

enum class Direction { Bidirectional, Forward, Backward };

/// One of the 18 rules 123 <-> beta, where beta is a length-3 star string
/// with exactly one star and two distinct integers from {1,2,3}.
class Rule {
public:
  Rule() = default;

  /// Validates beta against the 18 legal patterns.
  static Rule from_beta(const StarString& beta);
  static Rule from_beta_text(std::string_view beta_text);

  const StarString& beta() const { return beta_; }
  /// beta rendered with '*' for the star, e.g. "3*2".
  std::string beta_text() const { return beta_.text(); }
  /// Canonical bidirectional spelling, e.g. "123<->3*2".
  std::string text() const { return "123<->" + beta_.text(); }

  /// Star position s in {1,2,3}.
  int star_pos() const { return star_pos_; }
  /// The element of {1,2,3} absent from beta.
  int missing_rank() const { return missing_rank_; }
  /// Integer of beta at position t (t != star_pos).
  int role(int t) const { return beta_.at(t); }
  /// beta's integers read left to right.
  int first_int() const { return first_int_; }
  int second_int() const { return second_int_; }

  RuleCategory category() const { return category_; }

  Rule reverse_complement() const;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;

private:
  StarString beta_;
  int star_pos_ = 0;
  int missing_rank_ = 0;
  int first_int_ = 0;
  int second_int_ = 0;
  RuleCategory category_ = RuleCategory::Decreasing;
};

struct ParsedRule {
  Rule rule;
  Direction direction = Direction::Bidirectional;
};

/// Accepts "123<->B", "123->B", or "B->123" where B is a three-character
/// beta pattern over digits and '*'.
ParsedRule parse_rule(const std::string& text);

/// The 18 legal rules in a stable order (category-major, beta text minor).
const std::vector<Rule>& all_rules();

std::string to_string(RuleCategory category);

}  // namespace permrep

#include "permrep/rule.hpp"

#include <algorithm>
#include <stdexcept>

namespace permrep {

Rule Rule::from_beta(const StarString& beta) {
  if (beta.size() != 3 || beta.star_count() != 1)
    throw std::invalid_argument("beta must have length 3 with exactly one star: '" + beta.text() +
                                "'");
  Rule r;
  r.beta_ = beta;
  int ints_seen = 0;
  for (int t = 1; t <= 3; ++t) {
    if (beta.is_star(t)) {
      r.star_pos_ = t;
      continue;
    }
    const int v = beta.at(t);
    if (v < 1 || v > 3)
      throw std::invalid_argument("beta integers must come from {1,2,3}: '" + beta.text() + "'");
    if (ints_seen++ == 0)
      r.first_int_ = v;
    else
      r.second_int_ = v;
  }
  r.missing_rank_ = 6 - r.first_int_ - r.second_int_;

  // Positions of the two integers, left to right.
  const int t1 = r.star_pos_ == 1 ? 2 : 1;
  const int t2 = r.star_pos_ == 3 ? 2 : 3;
  if (r.first_int_ > r.second_int_) {
    r.category_ = RuleCategory::Decreasing;
  } else if (r.first_int_ == t1 && r.second_int_ == t2) {
    r.category_ = RuleCategory::DropOnly;
  } else if ((r.first_int_ == t1 - 1 && r.second_int_ == t2 - 1) ||
             (r.first_int_ == t1 + 1 && r.second_int_ == t2 + 1)) {
    r.category_ = RuleCategory::Shift;
  } else {
    r.category_ = RuleCategory::SwitchNeighborDrop;
  }
  return r;
}

Rule Rule::from_beta_text(std::string_view beta_text) {
  return from_beta(StarString::parse(std::string(beta_text)));
}

Rule Rule::reverse_complement() const {
  std::vector<int> entries(3);
  for (int t = 1; t <= 3; ++t) {
    const int v = beta_.at(4 - t);
    entries[static_cast<std::size_t>(t - 1)] = v == StarString::kStar ? StarString::kStar : 4 - v;
  }
  return from_beta(StarString(std::move(entries)));
}

ParsedRule parse_rule(const std::string& text) {
  const auto bi = text.find("<->");
  if (bi != std::string::npos) {
    if (text.substr(0, bi) != "123")
      throw std::invalid_argument("rule must be written 123<->B, 123->B, or B->123: '" + text +
                                  "'");
    return {Rule::from_beta_text(text.substr(bi + 3)), Direction::Bidirectional};
  }
  const auto ar = text.find("->");
  if (ar == std::string::npos)
    throw std::invalid_argument("rule must be written 123<->B, 123->B, or B->123: '" + text + "'");
  const std::string lhs = text.substr(0, ar);
  const std::string rhs = text.substr(ar + 2);
  if (lhs == "123") return {Rule::from_beta_text(rhs), Direction::Forward};
  if (rhs == "123") return {Rule::from_beta_text(lhs), Direction::Backward};
  throw std::invalid_argument("one side of the rule must be 123: '" + text + "'");
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> out;
    for (int s = 1; s <= 3; ++s) {
      for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
          if (a == b) continue;
          std::vector<int> entries(3, StarString::kStar);
          bool first = true;
          for (int t = 1; t <= 3; ++t) {
            if (t == s) continue;
            entries[static_cast<std::size_t>(t - 1)] = first ? a : b;
            first = false;
          }
          out.push_back(Rule::from_beta(StarString(std::move(entries))));
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const Rule& x, const Rule& y) {
      if (x.category() != y.category()) return x.category() < y.category();
      return x.beta_text() < y.beta_text();
    });
    return out;
  }();
  return rules;
}

std::string to_string(RuleCategory category) {
  switch (category) {
    case RuleCategory::Decreasing: return "decreasing";
    case RuleCategory::DropOnly: return "drop-only";
    case RuleCategory::Shift: return "shift";
    case RuleCategory::SwitchNeighborDrop: return "switch-neighbor-drop";
  }
  return "unknown";
}

}  // namespace permrep

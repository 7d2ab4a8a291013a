#include "permrep/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace permrep {

namespace {

const Permutation& pattern_123() {
  static const Permutation p({1, 2, 3});
  return p;
}

bool beta_is(const Rule& r, const char* text) { return r.beta_text() == text; }

}  // namespace

std::string to_string(FiveClass label) {
  switch (label) {
    case FiveClass::Empty: return "EMPTY";
    case FiveClass::One: return "ONE";
    case FiveClass::Twelve: return "TWELVE";
    case FiveClass::Pair123_21: return "{123,21}";
    case FiveClass::Bulk: return "BULK";
  }
  return "?";
}

std::string to_string(const ClassSignature& sig) {
  struct Visitor {
    std::string operator()(FiveClass f) const { return "five(" + to_string(f) + ")"; }
    std::string operator()(const Avoider& a) const { return "avoider(" + to_string(a.tau) + ")"; }
    std::string operator()(const ShiftLabel& s) const {
      return s.is_rid ? "rid(" + std::to_string(s.length) + ")" : "bulk";
    }
    std::string operator()(const SwitchTriple& t) const {
      return "triple(m=" + std::to_string(t.m) + ",p=" + std::to_string(t.p) +
             ",v=" + std::to_string(t.v) + ")";
    }
    std::string operator()(const IsolatedRid& r) const {
      return "rid(" + std::to_string(r.length) + ")";
    }
  };
  return std::visit(Visitor{}, sig);
}

FiveClass classify_decreasing(const Permutation& p) {
  static const Permutation one({1});
  static const Permutation twelve({1, 2});
  static const Permutation twenty_one({2, 1});
  if (p.empty()) return FiveClass::Empty;
  if (p == one) return FiveClass::One;
  if (p == twelve) return FiveClass::Twelve;
  if (p == pattern_123() || p == twenty_one) return FiveClass::Pair123_21;
  return FiveClass::Bulk;
}

std::vector<Permutation> p_canonical_trace(const Permutation& p, const Rule& gamma) {
  if (!beta_is(gamma, "12*") && !beta_is(gamma, "1*3"))
    throw std::invalid_argument("leftmost-copy reduction is defined for 12* and 1*3 only");
  std::vector<Permutation> trace{p};
  for (;;) {
    const auto occ = occurrences(trace.back(), pattern_123());
    if (occ.empty()) break;
    const auto& t = occ.front();  // lexicographically first copy
    trace.push_back(apply_forward(trace.back(), gamma, ForwardMove{t[0], t[1], t[2]}));
  }
  return trace;
}

Permutation p_canonical(const Permutation& p, const Rule& gamma) {
  return p_canonical_trace(p, gamma).back();
}

Permutation primitive(const Permutation& p, const Rule& r) {
  if (r.category() != RuleCategory::DropOnly)
    throw std::invalid_argument("primitive is defined for drop-only rules only");
  Permutation cur = p;
  for (;;) {
    const auto sites = forward_sites(cur, r);
    if (sites.empty()) return cur;
    cur = apply_forward(cur, r, sites.front());
  }
}

ShiftLabel shift_label(const Permutation& p) {
  if (is_reverse_identity(p)) return ShiftLabel::reverse_identity(p.size());
  return ShiftLabel::bulk();
}

namespace {

// Signature under 13*: left-to-right minima govern.
ClassSignature switch_signature_13(const Permutation& p) {
  if (is_reverse_identity(p)) return IsolatedRid{p.size()};
  const auto mins = extrema_positions(p, ExtremaKind::LeftRightMin);
  std::vector<bool> is_min(static_cast<std::size_t>(p.size()) + 1, false);
  for (int pos : mins) is_min[static_cast<std::size_t>(pos)] = true;

  int leftmost_non_min = 0;
  int largest_non_min = 0;
  for (int pos = 1; pos <= p.size(); ++pos) {
    if (is_min[static_cast<std::size_t>(pos)]) continue;
    if (leftmost_non_min == 0) leftmost_non_min = pos;
    largest_non_min = std::max(largest_non_min, p.at(pos));
  }
  int below = 0;
  for (int pos : mins)
    if (p.at(pos) < largest_non_min) ++below;
  return SwitchTriple{static_cast<int>(mins.size()), leftmost_non_min - 1, below};
}

// Signature under 1*2: the rightmost non-minimum counted from the right and
// the smallest non-minimum govern.
ClassSignature switch_signature_12(const Permutation& p) {
  if (is_reverse_identity(p)) return IsolatedRid{p.size()};
  const auto mins = extrema_positions(p, ExtremaKind::LeftRightMin);
  std::vector<bool> is_min(static_cast<std::size_t>(p.size()) + 1, false);
  for (int pos : mins) is_min[static_cast<std::size_t>(pos)] = true;

  int rightmost_non_min = 0;
  int smallest_non_min = p.size() + 1;
  for (int pos = 1; pos <= p.size(); ++pos) {
    if (is_min[static_cast<std::size_t>(pos)]) continue;
    rightmost_non_min = pos;
    smallest_non_min = std::min(smallest_non_min, p.at(pos));
  }
  int below = 0;
  for (int pos : mins)
    if (p.at(pos) < smallest_non_min) ++below;
  return SwitchTriple{static_cast<int>(mins.size()), p.size() - rightmost_non_min, below};
}

}  // namespace

ClassSignature switch_signature(const Permutation& p, const Rule& r) {
  if (r.category() != RuleCategory::SwitchNeighborDrop)
    throw std::invalid_argument("switch signature is defined for switch rules only");
  if (beta_is(r, "13*")) return switch_signature_13(p);
  if (beta_is(r, "1*2")) return switch_signature_12(p);
  if (beta_is(r, "*13")) return switch_signature_13(reverse_complement(p));
  return switch_signature_12(reverse_complement(p));  // 2*3
}

Permutation switch_canonical(const SwitchTriple& sig, const Rule& r) {
  if (r.category() != RuleCategory::SwitchNeighborDrop)
    throw std::invalid_argument("switch canonical is defined for switch rules only");

  const bool rc_side = beta_is(r, "*13") || beta_is(r, "2*3");
  const bool minima_from_left = beta_is(r, "13*") || beta_is(r, "*13");

  const int n = sig.m + 1;
  const int pos = minima_from_left ? sig.p + 1 : n - sig.p;
  const int val = sig.v + 1;
  if (pos < 1 || pos > n || val < 1 || val > n)
    throw std::invalid_argument("unrealizable triple " + to_string(ClassSignature{sig}));

  std::vector<int> values(static_cast<std::size_t>(n), 0);
  values[static_cast<std::size_t>(pos - 1)] = val;
  int next = n;
  for (int q = 1; q <= n; ++q) {
    if (q == pos) continue;
    if (next == val) --next;
    values[static_cast<std::size_t>(q - 1)] = next--;
  }
  Permutation result{std::move(values)};
  if (rc_side) result = reverse_complement(result);

  if (switch_signature(result, r) != ClassSignature{sig})
    throw std::invalid_argument("unrealizable triple " + to_string(ClassSignature{sig}));
  return result;
}

ClassSignature signature_of(const Rule& r, const Permutation& p) {
  switch (r.category()) {
    case RuleCategory::Decreasing: return classify_decreasing(p);
    case RuleCategory::DropOnly: return Avoider{primitive(p, r)};
    case RuleCategory::Shift: return shift_label(p);
    case RuleCategory::SwitchNeighborDrop: return switch_signature(p, r);
  }
  throw std::logic_error("unreachable");
}

bool same_class(const Rule& r, const Permutation& p, const Permutation& q) {
  return signature_of(r, p) == signature_of(r, q);
}

}  // namespace permrep

#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "permrep/permutation.hpp"
#include "permrep/rewrite.hpp"
#include "permrep/rule.hpp"

namespace permrep {

/// Class labels under the nine decreasing rules: {e}, {1}, {12}, {123,21},
/// and the bulk class holding everything else.
enum class FiveClass { Empty, One, Twelve, Pair123_21, Bulk };

/// Class label under the two shift rules: each reverse identity is its own
/// class; everything else is one bulk class.
struct ShiftLabel {
  bool is_rid = false;
  int length = 0;  // meaningful only when is_rid

  static ShiftLabel reverse_identity(int n) { return {true, n}; }
  static ShiftLabel bulk() { return {false, 0}; }

  friend bool operator==(const ShiftLabel&, const ShiftLabel&) = default;
  friend auto operator<=>(const ShiftLabel&, const ShiftLabel&) = default;
};

/// Class label under the drop-only rules: the 123-avoiding primitive.
struct Avoider {
  Permutation tau;

  friend bool operator==(const Avoider&, const Avoider&) = default;
  friend auto operator<=>(const Avoider&, const Avoider&) = default;
};

/// Class label for non-monotone permutations under the switch rules.
struct SwitchTriple {
  int m = 0;  // number of extremal elements in the governing scan
  int p = 0;  // position component
  int v = 0;  // relative value component

  friend bool operator==(const SwitchTriple&, const SwitchTriple&) = default;
  friend auto operator<=>(const SwitchTriple&, const SwitchTriple&) = default;
};

/// Reverse identities are isolated under shift and switch rules.
struct IsolatedRid {
  int length = 0;

  friend bool operator==(const IsolatedRid&, const IsolatedRid&) = default;
  friend auto operator<=>(const IsolatedRid&, const IsolatedRid&) = default;
};

using ClassSignature = std::variant<FiveClass, Avoider, ShiftLabel, SwitchTriple, IsolatedRid>;

std::string to_string(FiveClass label);
std::string to_string(const ClassSignature& sig);

/// Label under any decreasing rule (identical for all nine).
FiveClass classify_decreasing(const Permutation& p);

/// The deterministic leftmost-copy reduction for gamma in {12*, 1*3}:
/// while a 123 occurrence exists, rewrite the lexicographically first one.
/// The fixed point avoids 123.
Permutation p_canonical(const Permutation& p, const Rule& gamma);

/// Every state of the reduction, starting with p and ending at the fixed
/// point (so the result has one more entry than the number of steps).
std::vector<Permutation> p_canonical_trace(const Permutation& p, const Rule& gamma);

/// Repeatedly applies the first forward site until the permutation avoids
/// 123. For drop-only rules the result is independent of site choices.
Permutation primitive(const Permutation& p, const Rule& r);

/// Label under either shift rule (identical for both).
ShiftLabel shift_label(const Permutation& p);

/// Signature under a switch rule: IsolatedRid for reverse identities, else
/// a SwitchTriple. For 13*: m = #left-to-right minima, p = position of the
/// leftmost non-minimum minus 1, v = #minima below the largest non-minimum.
/// For 1*2: p counts the rightmost non-minimum from the right (minus 1) and
/// v counts minima below the smallest non-minimum. *13 and 2*3 use the
/// reverse complement of p under 13* and 1*2 respectively.
ClassSignature switch_signature(const Permutation& p, const Rule& r);

/// Shortest member of the class with the given triple. Throws if the triple
/// fails the signature round-trip (unrealizable triple).
Permutation switch_canonical(const SwitchTriple& sig, const Rule& r);

/// Dispatch on the rule category to the operation above.
ClassSignature signature_of(const Rule& r, const Permutation& p);

bool same_class(const Rule& r, const Permutation& p, const Permutation& q);

}  // namespace permrep

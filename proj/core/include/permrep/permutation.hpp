#pragma once

#include <compare>
#include <string>
#include <vector>

namespace permrep {

/// A permutation of {1..n}, possibly empty. Values and positions are 1-based
/// throughout the public API; the empty permutation prints as "e".
class Permutation {
public:
  Permutation() = default;
  /// Validates that `values` is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation reverse_identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  /// Value at 1-based position `pos`.
  int at(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

enum class PermStyle { Compact, Separated };

/// Accepts "e", a run of digits 1-9 (compact, n <= 9), or whitespace/comma
/// separated positive integers. Rejects anything that is not a bijection.
Permutation parse_permutation(const std::string& text);

/// Compact style requires n <= 9; the empty permutation prints as "e" in
/// both styles.
std::string format_permutation(const Permutation& p, PermStyle style);

/// Compact when n <= 9, separated otherwise. Round-trips with
/// parse_permutation for every permutation.
std::string to_string(const Permutation& p);

/// Renumbers pairwise-distinct integers onto {1..n}, preserving relative
/// order. Rejects duplicates.
Permutation normalize(const std::vector<int>& entries);

/// Reverse the sequence and complement values (x -> n+1-x). An involution.
Permutation reverse_complement(const Permutation& p);

enum class ExtremaKind { LeftRightMin, LeftRightMax, RightLeftMin, RightLeftMax };

/// 1-based positions (ascending) of the strict extrema in the given scan
/// direction. A left-to-right minimum is smaller than everything before it.
std::vector<int> extrema_positions(const Permutation& p, ExtremaKind kind);

/// All strictly increasing position tuples of p whose values are
/// order-isomorphic to `pattern`, in lexicographic order of tuples.
/// Empty result means p avoids the pattern. Pattern length is capped at 6.
std::vector<std::vector<int>> occurrences(const Permutation& p, const Permutation& pattern);

bool contains(const Permutation& p, const Permutation& pattern);
bool avoids(const Permutation& p, const Permutation& pattern);

/// A string of pairwise-distinct positive integers and stars. Stars may
/// repeat. The star is stored as 0 and written as '*'.
class StarString {
public:
  static constexpr int kStar = 0;

  StarString() = default;
  explicit StarString(std::vector<int> entries);

  /// Accepts a run of digit/'*' characters, or whitespace-separated tokens.
  static StarString parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool is_star(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)] == kStar; }
  int at(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }
  const std::vector<int>& entries() const { return entries_; }
  int star_count() const;

  std::string text() const;

  friend bool operator==(const StarString&, const StarString&) = default;
  friend auto operator<=>(const StarString&, const StarString&) = default;

private:
  std::vector<int> entries_;
};

/// Star-pattern occurrences: stars of `pattern` align with stars of `s`, and
/// the integer entries, read in order, are order-isomorphic.
std::vector<std::vector<int>> star_occurrences(const StarString& s, const StarString& pattern);

enum class MonotoneKind { Identity, ReverseIdentity, Both, Neither };

struct MonotoneResult {
  MonotoneKind kind = MonotoneKind::Neither;
  int length = 0;

  friend bool operator==(const MonotoneResult&, const MonotoneResult&) = default;
};

/// Labels identities and reverse identities; lengths 0 and 1 are both at
/// once and report MonotoneKind::Both.
MonotoneResult monotone_kind(const Permutation& p);

bool is_identity(const Permutation& p);
bool is_reverse_identity(const Permutation& p);

}  // namespace permrep

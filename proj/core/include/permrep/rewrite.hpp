#pragma once

#include <compare>
#include <vector>

#include "permrep/permutation.hpp"
#include "permrep/rule.hpp"

namespace permrep {

/// One forward step: a chosen occurrence of 123 at positions i < j < k.
struct ForwardMove {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const ForwardMove&, const ForwardMove&) = default;
  friend auto operator<=>(const ForwardMove&, const ForwardMove&) = default;
};

/// One backward step: the two chosen elements at positions p1 < p2, the
/// insertion slot for the star (slot g sits between positions g and g+1,
/// 0 <= g <= n), and the relative rank of the fresh element among 1..n+1.
struct BackwardMove {
  int p1 = 0;
  int p2 = 0;
  int gap = 0;
  int fresh_rank = 0;

  friend bool operator==(const BackwardMove&, const BackwardMove&) = default;
  friend auto operator<=>(const BackwardMove&, const BackwardMove&) = default;
};

/// All increasing triples whose values form a copy of 123, in lexicographic
/// order. Identical for every rule.
std::vector<ForwardMove> forward_sites(const Permutation& p, const Rule& r);

/// Applies 123 -> beta at the given site; the result has length |p| - 1.
Permutation apply_forward(const Permutation& p, const Rule& r, const ForwardMove& m);

/// All legal backward moves, sorted lexicographically by (p1, p2, gap,
/// fresh_rank). Legality:
///   - values at (p1, p2) are order-isomorphic to beta's integers,
///   - gap by star position s: s=1 -> g <= p1-1; s=2 -> p1 <= g <= p2-1;
///     s=3 -> g >= p2,
///   - fresh_rank by missing rank z (lo/hi the two chosen values):
///     z=1 -> rank <= lo; z=2 -> lo < rank <= hi; z=3 -> rank > hi.
std::vector<BackwardMove> backward_moves(const Permutation& p, const Rule& r);

/// Applies beta -> 123 for the given move; the result has length |p| + 1.
Permutation apply_backward(const Permutation& p, const Rule& r, const BackwardMove& m);

struct Neighborhood {
  std::vector<Permutation> down;  // deduplicated forward results, sorted
  std::vector<Permutation> up;    // deduplicated backward results, sorted
};

Neighborhood neighbors(const Permutation& p, const Rule& r);

}  // namespace permrep

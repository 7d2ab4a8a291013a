#include "permrep/rewrite.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace permrep {

std::vector<ForwardMove> forward_sites(const Permutation& p, const Rule&) {
  const auto& v = p.values();
  const int n = p.size();
  std::vector<ForwardMove> sites;
  for (int i = 0; i < n - 2; ++i)
    for (int j = i + 1; j < n - 1; ++j) {
      if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)]) continue;
      for (int k = j + 1; k < n; ++k)
        if (v[static_cast<std::size_t>(k)] > v[static_cast<std::size_t>(j)])
          sites.push_back({i + 1, j + 1, k + 1});
    }
  return sites;
}

Permutation apply_forward(const Permutation& p, const Rule& r, const ForwardMove& m) {
  const int n = p.size();
  if (!(1 <= m.i && m.i < m.j && m.j < m.k && m.k <= n))
    throw std::invalid_argument("forward site positions must satisfy 1 <= i < j < k <= n");
  const std::array<int, 4> a{0, p.at(m.i), p.at(m.j), p.at(m.k)};
  if (!(a[1] < a[2] && a[2] < a[3]))
    throw std::invalid_argument("forward site values must form a copy of 123");
  const std::array<int, 4> pos{0, m.i, m.j, m.k};
  const int s = r.star_pos();
  const int dropped = a[static_cast<std::size_t>(r.missing_rank())];

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int q = 1; q <= n; ++q) {
    if (q == pos[static_cast<std::size_t>(s)]) continue;
    int val = p.at(q);
    for (int t = 1; t <= 3; ++t)
      if (t != s && q == pos[static_cast<std::size_t>(t)]) val = a[static_cast<std::size_t>(r.role(t))];
    out.push_back(val - (val > dropped ? 1 : 0));
  }
  return Permutation(std::move(out));
}

namespace {

bool pattern_pair_matches(const Rule& r, int u1, int u2) {
  return (u1 < u2) == (r.first_int() < r.second_int());
}

void gap_bounds(const Rule& r, int p1, int p2, int n, int& lo, int& hi) {
  switch (r.star_pos()) {
    case 1: lo = 0; hi = p1 - 1; break;
    case 2: lo = p1; hi = p2 - 1; break;
    default: lo = p2; hi = n; break;
  }
}

void fresh_bounds(const Rule& r, int u1, int u2, int n, int& lo, int& hi) {
  const int small = std::min(u1, u2), big = std::max(u1, u2);
  switch (r.missing_rank()) {
    case 1: lo = 1; hi = small; break;
    case 2: lo = small + 1; hi = big; break;
    default: lo = big + 1; hi = n + 1; break;
  }
}

}  // namespace

std::vector<BackwardMove> backward_moves(const Permutation& p, const Rule& r) {
  const int n = p.size();
  std::vector<BackwardMove> moves;
  for (int p1 = 1; p1 <= n - 1; ++p1)
    for (int p2 = p1 + 1; p2 <= n; ++p2) {
      if (!pattern_pair_matches(r, p.at(p1), p.at(p2))) continue;
      int glo, ghi, vlo, vhi;
      gap_bounds(r, p1, p2, n, glo, ghi);
      fresh_bounds(r, p.at(p1), p.at(p2), n, vlo, vhi);
      for (int g = glo; g <= ghi; ++g)
        for (int v = vlo; v <= vhi; ++v) moves.push_back({p1, p2, g, v});
    }
  return moves;
}

Permutation apply_backward(const Permutation& p, const Rule& r, const BackwardMove& m) {
  const int n = p.size();
  if (!(1 <= m.p1 && m.p1 < m.p2 && m.p2 <= n))
    throw std::invalid_argument("backward move positions must satisfy 1 <= p1 < p2 <= n");
  const int u1 = p.at(m.p1), u2 = p.at(m.p2);
  if (!pattern_pair_matches(r, u1, u2))
    throw std::invalid_argument("chosen pair is not order-isomorphic to beta's integers");
  int glo, ghi, vlo, vhi;
  gap_bounds(r, m.p1, m.p2, n, glo, ghi);
  fresh_bounds(r, u1, u2, n, vlo, vhi);
  if (m.gap < glo || m.gap > ghi)
    throw std::invalid_argument("gap slot " + std::to_string(m.gap) + " outside legal range");
  if (m.fresh_rank < vlo || m.fresh_rank > vhi)
    throw std::invalid_argument("fresh rank " + std::to_string(m.fresh_rank) +
                                " outside legal range");

  // Existing values at or above the fresh rank shift up by one.
  auto shifted = [&](int v) { return v >= m.fresh_rank ? v + 1 : v; };
  std::array<int, 3> triple{shifted(u1), shifted(u2), m.fresh_rank};
  std::sort(triple.begin(), triple.end());

  // The three slots of the new 123 copy in left-to-right order; slot w
  // receives the w-th smallest of the triple.
  int at_p1, at_p2, at_gap;
  switch (r.star_pos()) {
    case 1: at_gap = triple[0]; at_p1 = triple[1]; at_p2 = triple[2]; break;
    case 2: at_p1 = triple[0]; at_gap = triple[1]; at_p2 = triple[2]; break;
    default: at_p1 = triple[0]; at_p2 = triple[1]; at_gap = triple[2]; break;
  }

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  if (m.gap == 0) out.push_back(at_gap);
  for (int q = 1; q <= n; ++q) {
    if (q == m.p1)
      out.push_back(at_p1);
    else if (q == m.p2)
      out.push_back(at_p2);
    else
      out.push_back(shifted(p.at(q)));
    if (q == m.gap) out.push_back(at_gap);
  }
  return Permutation(std::move(out));
}

Neighborhood neighbors(const Permutation& p, const Rule& r) {
  Neighborhood nb;
  for (const auto& site : forward_sites(p, r)) nb.down.push_back(apply_forward(p, r, site));
  for (const auto& move : backward_moves(p, r)) nb.up.push_back(apply_backward(p, r, move));
  auto dedup = [](std::vector<Permutation>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(nb.down);
  dedup(nb.up);
  return nb;
}

}  // namespace permrep

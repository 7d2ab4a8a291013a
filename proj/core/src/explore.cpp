#include "permrep/explore.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <deque>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "permrep/version.hpp"

namespace permrep {

namespace {

constexpr std::array<std::uint64_t, 13> kFactorial = {
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800, 479001600};

// kOffset[n] = number of permutations of length < n.
constexpr std::array<std::uint64_t, 14> make_offsets() {
  std::array<std::uint64_t, 14> off{};
  for (int n = 0; n < 13; ++n) off[static_cast<std::size_t>(n + 1)] = off[static_cast<std::size_t>(n)] + kFactorial[static_cast<std::size_t>(n)];
  return off;
}
constexpr std::array<std::uint64_t, 14> kOffset = make_offsets();

void check_universe_len(int max_len, const char* what) {
  if (max_len < 0 || max_len > kMaxUniverseLen)
    throw std::invalid_argument(std::string(what) + " must lie in 0.." +
                                std::to_string(kMaxUniverseLen) + ", got " +
                                std::to_string(max_len));
}

std::uint32_t lex_rank_raw(const int* v, int n) {
  std::uint32_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += v[j] < v[i] ? 1 : 0;
    rank += static_cast<std::uint32_t>(smaller) *
            static_cast<std::uint32_t>(kFactorial[static_cast<std::size_t>(n - 1 - i)]);
  }
  return rank;
}

void unrank_raw(int n, std::uint32_t rank, int* out) {
  int pool[kMaxUniverseLen + 1];
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::uint64_t r = rank;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = kFactorial[static_cast<std::size_t>(n - 1 - i)];
    const int idx = static_cast<int>(r / f);
    r %= f;
    out[i] = pool[idx];
    std::copy(pool + idx + 1, pool + n - i, pool + idx);
  }
}

int length_of_id(std::uint32_t id) {
  int n = 0;
  while (kOffset[static_cast<std::size_t>(n + 1)] <= id) ++n;
  return n;
}

// Forward results of v[0..n) as dense ids; deterministic site order.
template <class Sink>
void for_each_down_id(const int* v, int n, const Rule& r, Sink&& sink) {
  if (n < 3) return;
  const int s = r.star_pos();
  const int z = r.missing_rank();
  int role[4] = {0, 0, 0, 0};
  for (int t = 1; t <= 3; ++t)
    if (t != s) role[t] = r.role(t);
  const std::uint32_t base = static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(n - 1)]);

  int buf[kMaxUniverseLen + 1];
  for (int i = 0; i < n - 2; ++i)
    for (int j = i + 1; j < n - 1; ++j) {
      if (v[j] < v[i]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (v[k] < v[j]) continue;
        const int a[4] = {0, v[i], v[j], v[k]};
        const int pos[4] = {0, i, j, k};
        const int dropped = a[z];
        int w = 0;
        for (int q = 0; q < n; ++q) {
          if (q == pos[s]) continue;
          int val = v[q];
          if (s != 1 && q == pos[1])
            val = a[role[1]];
          else if (s != 2 && q == pos[2])
            val = a[role[2]];
          else if (s != 3 && q == pos[3])
            val = a[role[3]];
          buf[w++] = val - (val > dropped ? 1 : 0);
        }
        sink(base + lex_rank_raw(buf, n - 1));
      }
    }
}

// Backward results of v[0..n) as dense ids; deterministic move order.
template <class Sink>
void for_each_up_id(const int* v, int n, const Rule& r, Sink&& sink) {
  const int s = r.star_pos();
  const int z = r.missing_rank();
  const bool pair_increasing = r.first_int() < r.second_int();
  const std::uint32_t base = static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(n + 1)]);

  int buf[kMaxUniverseLen + 2];
  for (int p1 = 0; p1 < n - 1; ++p1)
    for (int p2 = p1 + 1; p2 < n; ++p2) {
      const int u1 = v[p1], u2 = v[p2];
      if ((u1 < u2) != pair_increasing) continue;
      const int small = std::min(u1, u2), big = std::max(u1, u2);
      int glo, ghi;
      switch (s) {
        case 1: glo = 0; ghi = p1; break;          // slots counted 0..n, p1 is 0-based here
        case 2: glo = p1 + 1; ghi = p2; break;
        default: glo = p2 + 1; ghi = n; break;
      }
      int vlo, vhi;
      switch (z) {
        case 1: vlo = 1; vhi = small; break;
        case 2: vlo = small + 1; vhi = big; break;
        default: vlo = big + 1; vhi = n + 1; break;
      }
      for (int g = glo; g <= ghi; ++g)
        for (int fresh = vlo; fresh <= vhi; ++fresh) {
          const int su1 = u1 >= fresh ? u1 + 1 : u1;
          const int su2 = u2 >= fresh ? u2 + 1 : u2;
          int triple[3] = {su1, su2, fresh};
          std::sort(triple, triple + 3);
          int at_p1, at_p2, at_gap;
          switch (s) {
            case 1: at_gap = triple[0]; at_p1 = triple[1]; at_p2 = triple[2]; break;
            case 2: at_p1 = triple[0]; at_gap = triple[1]; at_p2 = triple[2]; break;
            default: at_p1 = triple[0]; at_p2 = triple[1]; at_gap = triple[2]; break;
          }
          int w = 0;
          if (g == 0) buf[w++] = at_gap;
          for (int q = 0; q < n; ++q) {
            int val;
            if (q == p1)
              val = at_p1;
            else if (q == p2)
              val = at_p2;
            else
              val = v[q] >= fresh ? v[q] + 1 : v[q];
            buf[w++] = val;
            if (q + 1 == g) buf[w++] = at_gap;
          }
          sink(base + lex_rank_raw(buf, n + 1));
        }
    }
}

template <class Sink>
void for_each_neighbor_id(const int* v, int n, const Rule& r, int ceiling, Sink&& sink) {
  for_each_down_id(v, n, r, sink);
  if (n < ceiling) for_each_up_id(v, n, r, sink);
}

struct Dsu {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;

  explicit Dsu(std::uint32_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Unions every permutation of the universe with its forward neighbors.
// Neighbor generation runs in rank-ordered blocks (optionally in parallel);
// unions are always applied in block order, so the structure is identical
// for every thread count.
Dsu partition_core(const Rule& r, int ceiling, int threads) {
  Dsu dsu(total_ids(ceiling));
  threads = resolve_threads(threads);
  constexpr std::uint32_t kBlock = 16384;

  struct BlockResult {
    std::vector<std::uint32_t> dsts;
    std::vector<std::uint16_t> counts;
  };

  for (int n = 3; n <= ceiling; ++n) {
    const std::uint64_t count = kFactorial[static_cast<std::size_t>(n)];
    const std::uint32_t id_base = static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(n)]);

    auto process_block = [&, n](std::uint32_t start, std::uint32_t len) {
      BlockResult res;
      res.counts.resize(len);
      int buf[kMaxUniverseLen + 1];
      unrank_raw(n, start, buf);
      for (std::uint32_t t = 0; t < len; ++t) {
        std::uint16_t c = 0;
        for_each_down_id(buf, n, r, [&](std::uint32_t d) {
          res.dsts.push_back(d);
          ++c;
        });
        res.counts[t] = c;
        std::next_permutation(buf, buf + n);
      }
      return res;
    };

    auto apply_block = [&](std::uint32_t start, const BlockResult& res) {
      std::size_t idx = 0;
      for (std::uint32_t t = 0; t < res.counts.size(); ++t) {
        const std::uint32_t src = id_base + start + t;
        for (std::uint16_t c = 0; c < res.counts[t]; ++c) dsu.unite(src, res.dsts[idx++]);
      }
    };

    if (threads == 1 || count <= kBlock) {
      for (std::uint64_t start = 0; start < count; start += kBlock) {
        const std::uint32_t len = static_cast<std::uint32_t>(std::min<std::uint64_t>(kBlock, count - start));
        apply_block(static_cast<std::uint32_t>(start), process_block(static_cast<std::uint32_t>(start), len));
      }
    } else {
      std::deque<std::pair<std::uint32_t, std::future<BlockResult>>> window;
      std::uint64_t next = 0;
      const std::size_t max_window = static_cast<std::size_t>(threads) + 2;
      while (next < count || !window.empty()) {
        while (next < count && window.size() < max_window) {
          const std::uint32_t start = static_cast<std::uint32_t>(next);
          const std::uint32_t len = static_cast<std::uint32_t>(std::min<std::uint64_t>(kBlock, count - next));
          window.emplace_back(start, std::async(std::launch::async, process_block, start, len));
          next += len;
        }
        auto [start, fut] = std::move(window.front());
        window.pop_front();
        apply_block(start, fut.get());
      }
    }
  }
  return dsu;
}

void check_scale(int max_len, int slack) {
  if (max_len < 0 || slack < 0)
    throw std::invalid_argument("max_len and slack must be non-negative");
  if (max_len + slack > kMaxUniverseLen)
    throw std::invalid_argument("max_len + slack must not exceed " +
                                std::to_string(kMaxUniverseLen) + ", got " +
                                std::to_string(max_len + slack));
}

}  // namespace

std::uint64_t permutation_count(int max_len) {
  if (max_len < 0) return 0;
  if (max_len > 12) throw std::invalid_argument("permutation_count supports lengths up to 12");
  return kOffset[static_cast<std::size_t>(max_len + 1)];
}

std::uint32_t perm_rank(const Permutation& p) {
  if (p.size() > kMaxUniverseLen + 1)
    throw std::invalid_argument("ranking supports lengths up to " +
                                std::to_string(kMaxUniverseLen + 1));
  return lex_rank_raw(p.values().data(), p.size());
}

Permutation perm_unrank(int n, std::uint32_t rank) {
  if (n < 0 || n > kMaxUniverseLen + 1)
    throw std::invalid_argument("unranking supports lengths 0.." +
                                std::to_string(kMaxUniverseLen + 1));
  if (rank >= kFactorial[static_cast<std::size_t>(n)])
    throw std::invalid_argument("rank " + std::to_string(rank) + " out of range for length " +
                                std::to_string(n));
  std::vector<int> out(static_cast<std::size_t>(n));
  unrank_raw(n, rank, out.data());
  return Permutation(std::move(out));
}

std::uint32_t perm_id(const Permutation& p) {
  return static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(p.size())]) + perm_rank(p);
}

Permutation perm_from_id(std::uint32_t id) {
  const int n = length_of_id(id);
  return perm_unrank(n, id - static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(n)]));
}

std::uint32_t total_ids(int max_len) {
  check_universe_len(max_len, "max_len");
  return static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(max_len + 1)]);
}

void enumerate_permutations(int max_len, const std::function<void(const Permutation&)>& fn) {
  check_universe_len(max_len, "max_len");
  for (int n = 0; n <= max_len; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      fn(Permutation(std::vector<int>(v)));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

Partition compute_partition(const Rule& r, int max_len, int slack, bool keep_members,
                            int threads) {
  check_scale(max_len, slack);
  Dsu dsu = partition_core(r, max_len + slack, threads);

  Partition out;
  out.rule = r;
  out.max_len = max_len;
  out.slack = slack;
  out.has_members = keep_members;
  out.engine_version = kEngineVersion;

  std::unordered_map<std::uint32_t, std::uint32_t> root_to_class;
  const std::uint32_t limit = total_ids(max_len);
  root_to_class.reserve(limit / 4 + 16);
  for (std::uint32_t id = 0; id < limit; ++id) {
    const std::uint32_t root = dsu.find(id);
    auto [it, inserted] = root_to_class.try_emplace(root, static_cast<std::uint32_t>(out.classes.size()));
    if (inserted) {
      PartitionClass cls;
      cls.id = it->second;
      cls.min_rep = perm_from_id(id);
      out.classes.push_back(std::move(cls));
    }
    PartitionClass& cls = out.classes[it->second];
    ++cls.size;
    if (keep_members) cls.members.push_back(perm_from_id(id));
  }
  return out;
}

std::vector<std::uint32_t> class_labels(const Rule& r, int max_len, int slack, int threads) {
  check_scale(max_len, slack);
  Dsu dsu = partition_core(r, max_len + slack, threads);
  const std::uint32_t limit = total_ids(max_len);
  std::vector<std::uint32_t> labels(limit);
  std::unordered_map<std::uint32_t, std::uint32_t> root_to_class;
  root_to_class.reserve(limit / 4 + 16);
  for (std::uint32_t id = 0; id < limit; ++id) {
    const std::uint32_t root = dsu.find(id);
    auto [it, inserted] = root_to_class.try_emplace(root, static_cast<std::uint32_t>(root_to_class.size()));
    labels[id] = it->second;
  }
  return labels;
}

std::string partition_to_json(const Partition& p) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["rule"] = p.rule.text();
  j["max_len"] = p.max_len;
  j["slack"] = p.slack;
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : p.classes) {
    nlohmann::json c;
    c["id"] = cls.id;
    c["min_rep"] = to_string(cls.min_rep);
    c["size"] = cls.size;
    if (p.has_members) {
      nlohmann::json members = nlohmann::json::array();
      for (const auto& m : cls.members) members.push_back(to_string(m));
      c["members"] = std::move(members);
    }
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j.dump(2) + "\n";
}

Partition partition_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("format_version") || j["format_version"].get<int>() != 1)
    throw std::invalid_argument("unsupported partition format_version");
  Partition out;
  out.rule = parse_rule(j.at("rule").get<std::string>()).rule;
  out.max_len = j.at("max_len").get<int>();
  out.slack = j.at("slack").get<int>();
  out.engine_version = kEngineVersion;
  out.has_members = true;
  for (const auto& c : j.at("classes")) {
    PartitionClass cls;
    cls.id = c.at("id").get<std::uint32_t>();
    cls.min_rep = parse_permutation(c.at("min_rep").get<std::string>());
    cls.size = c.at("size").get<std::uint64_t>();
    if (c.contains("members")) {
      for (const auto& m : c.at("members")) cls.members.push_back(parse_permutation(m.get<std::string>()));
    } else {
      out.has_members = false;
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

// Derives the concrete move for the edge x -> y (|y| = |x| +- 1).
CertificateStep derive_step(const Rule& r, const Permutation& x, const Permutation& y) {
  if (y.size() == x.size() - 1) {
    for (const auto& site : forward_sites(x, r))
      if (apply_forward(x, r, site) == y) return {site, y};
  } else if (y.size() == x.size() + 1) {
    for (const auto& move : backward_moves(x, r))
      if (apply_backward(x, r, move) == y) return {move, y};
  }
  throw std::logic_error("no move connects the two permutations");
}

Certificate certificate_from_ids(const Rule& r, const std::vector<std::uint32_t>& ids) {
  Certificate cert;
  cert.start = perm_from_id(ids.front());
  Permutation cur = cert.start;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    Permutation next = perm_from_id(ids[i]);
    cert.steps.push_back(derive_step(r, cur, next));
    cur = std::move(next);
  }
  return cert;
}

}  // namespace

std::optional<Certificate> find_path(const Rule& r, const Permutation& from, const Permutation& to,
                                     int ceiling) {
  check_universe_len(ceiling, "ceiling");
  if (from.size() > ceiling || to.size() > ceiling)
    throw std::invalid_argument("both endpoints must fit under the ceiling");
  if (from == to) return Certificate{from, {}};

  const std::uint32_t n_ids = total_ids(ceiling);
  // pred/dist per search side; side 0 grows from `from`, side 1 from `to`.
  std::vector<std::uint32_t> pred[2] = {std::vector<std::uint32_t>(n_ids, kUnset),
                                        std::vector<std::uint32_t>(n_ids, kUnset)};
  std::vector<std::int32_t> dist[2] = {std::vector<std::int32_t>(n_ids, -1),
                                       std::vector<std::int32_t>(n_ids, -1)};
  std::vector<std::uint32_t> frontier[2];
  const std::uint32_t src[2] = {perm_id(from), perm_id(to)};
  for (int side = 0; side < 2; ++side) {
    pred[side][src[side]] = src[side];
    dist[side][src[side]] = 0;
    frontier[side].push_back(src[side]);
  }

  int radius[2] = {0, 0};
  std::int64_t best_total = -1;
  std::uint32_t best_meet = kUnset;
  int buf[kMaxUniverseLen + 1];

  while (!frontier[0].empty() || !frontier[1].empty()) {
    int side;
    if (frontier[0].empty())
      side = 1;
    else if (frontier[1].empty())
      side = 0;
    else
      side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    const int other = 1 - side;

    std::vector<std::uint32_t> next;
    for (const std::uint32_t u : frontier[side]) {
      const int n = length_of_id(u);
      unrank_raw(n, u - static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(n)]), buf);
      for_each_neighbor_id(buf, n, r, ceiling, [&](std::uint32_t nb) {
        if (dist[side][nb] >= 0) return;
        dist[side][nb] = radius[side] + 1;
        pred[side][nb] = u;
        next.push_back(nb);
        if (dist[other][nb] >= 0) {
          const std::int64_t total = dist[side][nb] + dist[other][nb];
          if (best_total < 0 || total < best_total) {
            best_total = total;
            best_meet = nb;
          }
        }
      });
    }
    frontier[side] = std::move(next);
    ++radius[side];

    if (best_total >= 0 && radius[0] + radius[1] >= best_total) break;
    if (frontier[0].empty() && frontier[1].empty()) break;
  }

  if (best_meet == kUnset) return std::nullopt;

  std::vector<std::uint32_t> ids;
  for (std::uint32_t x = best_meet;; x = pred[0][x]) {
    ids.push_back(x);
    if (x == src[0]) break;
  }
  std::reverse(ids.begin(), ids.end());
  for (std::uint32_t x = best_meet; x != src[1];) {
    x = pred[1][x];
    ids.push_back(x);
  }
  return certificate_from_ids(r, ids);
}

Permutation replay(const Certificate& c, const Rule& r) {
  Permutation cur = c.start;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& step = c.steps[i];
    Permutation next;
    try {
      if (step.is_forward())
        next = apply_forward(cur, r, std::get<ForwardMove>(step.move));
      else
        next = apply_backward(cur, r, std::get<BackwardMove>(step.move));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("certificate step " + std::to_string(i + 1) +
                               " is illegal: " + e.what());
    }
    if (next != step.result)
      throw std::runtime_error("certificate step " + std::to_string(i + 1) +
                               " does not replay to its claimed result");
    cur = std::move(next);
  }
  return cur;
}

std::optional<Certificate> reach_identity(const Rule& r, const Permutation& p, int slack) {
  if (slack < 0) throw std::invalid_argument("slack must be non-negative");
  const int ceiling = p.size() + slack;
  check_universe_len(ceiling, "ceiling (|p| + slack)");
  if (is_identity(p)) return Certificate{p, {}};

  const std::uint32_t n_ids = total_ids(ceiling);
  std::vector<std::uint32_t> pred(n_ids, kUnset);
  std::vector<std::uint32_t> frontier{perm_id(p)};
  pred[frontier.front()] = frontier.front();
  int buf[kMaxUniverseLen + 1];

  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (const std::uint32_t u : frontier) {
      const int n = length_of_id(u);
      unrank_raw(n, u - static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(n)]), buf);
      std::uint32_t hit = kUnset;
      for_each_neighbor_id(buf, n, r, ceiling, [&](std::uint32_t nb) {
        if (pred[nb] != kUnset) return;
        pred[nb] = u;
        next.push_back(nb);
        // Identities sit at rank 0 of their length.
        const int nb_len = length_of_id(nb);
        if (nb == kOffset[static_cast<std::size_t>(nb_len)] && hit == kUnset) hit = nb;
      });
      if (hit != kUnset) {
        std::vector<std::uint32_t> ids;
        for (std::uint32_t x = hit;; x = pred[x]) {
          ids.push_back(x);
          if (pred[x] == x) break;
        }
        std::reverse(ids.begin(), ids.end());
        return certificate_from_ids(r, ids);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<std::optional<Certificate>> identity_witnesses(const Rule& r, int max_len, int slack) {
  check_scale(max_len, slack);
  const int ceiling = max_len + slack;
  const std::uint32_t n_ids = total_ids(ceiling);
  std::vector<std::uint32_t> pred(n_ids, kUnset);
  std::vector<std::uint32_t> frontier;
  for (int n = 0; n <= ceiling; ++n) {
    const std::uint32_t id = static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(n)]);
    pred[id] = id;
    frontier.push_back(id);
  }

  int buf[kMaxUniverseLen + 1];
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (const std::uint32_t u : frontier) {
      const int n = length_of_id(u);
      unrank_raw(n, u - static_cast<std::uint32_t>(kOffset[static_cast<std::size_t>(n)]), buf);
      for_each_neighbor_id(buf, n, r, ceiling, [&](std::uint32_t nb) {
        if (pred[nb] != kUnset) return;
        pred[nb] = u;
        next.push_back(nb);
      });
    }
    frontier = std::move(next);
  }

  const std::uint32_t limit = total_ids(max_len);
  std::vector<std::optional<Certificate>> out(limit);
  for (std::uint32_t id = 0; id < limit; ++id) {
    if (pred[id] == kUnset) continue;
    std::vector<std::uint32_t> ids;
    for (std::uint32_t x = id;; x = pred[x]) {
      ids.push_back(x);
      if (pred[x] == x) break;
    }
    out[id] = certificate_from_ids(r, ids);
  }
  return out;
}

}  // namespace permrep

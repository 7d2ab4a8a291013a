#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "permrep/classify.hpp"
#include "permrep/explore.hpp"

using namespace permrep;

namespace {

// Reference partition: map-based union-find over Permutation keys that
// unions along BOTH edge directions, so the forward-only sweep in
// compute_partition has an independent oracle.
struct RefDsu {
  std::map<Permutation, Permutation> parent;

  Permutation find(Permutation x) {
    while (parent.at(x) != x) x = parent.at(x);
    return x;
  }

  void unite(const Permutation& a, const Permutation& b) {
    const Permutation ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
};

std::set<std::set<Permutation>> reference_classes(const Rule& r, int max_len, int slack) {
  RefDsu dsu;
  std::vector<Permutation> universe;
  enumerate_permutations(max_len + slack, [&](const Permutation& p) {
    universe.push_back(p);
    dsu.parent.emplace(p, p);
  });
  for (const auto& p : universe) {
    const auto nb = neighbors(p, r);
    for (const auto& q : nb.down) dsu.unite(p, q);
    if (p.size() + 1 <= max_len + slack)
      for (const auto& q : nb.up) dsu.unite(p, q);
  }
  std::map<Permutation, std::set<Permutation>> grouped;
  for (const auto& p : universe)
    if (p.size() <= max_len) grouped[dsu.find(p)].insert(p);
  std::set<std::set<Permutation>> out;
  for (auto& [root, members] : grouped) out.insert(std::move(members));
  return out;
}

std::set<std::set<Permutation>> partition_class_sets(const Partition& part) {
  std::set<std::set<Permutation>> out;
  for (const auto& cls : part.classes) out.insert({cls.members.begin(), cls.members.end()});
  return out;
}

}  // namespace

TEST_CASE("enumerate_permutations counts and order") {
  int count = 0;
  enumerate_permutations(0, [&](const Permutation&) { ++count; });
  CHECK(count == 1);

  std::vector<Permutation> all;
  enumerate_permutations(3, [&](const Permutation& p) { all.push_back(p); });
  CHECK(all.size() == 10);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const bool ordered = all[i - 1].size() < all[i].size() ||
                         (all[i - 1].size() == all[i].size() && all[i - 1] < all[i]);
    CHECK(ordered);
  }

  count = 0;
  enumerate_permutations(5, [&](const Permutation&) { ++count; });
  CHECK(count == 154);
  CHECK(permutation_count(5) == 154);
  CHECK(permutation_count(9) == 409114);

  CHECK_THROWS_AS(enumerate_permutations(12, [](const Permutation&) {}), std::invalid_argument);
}

TEST_CASE("rank and unrank are mutually inverse") {
  for (int n = 0; n <= 6; ++n) {
    std::uint32_t expected_rank = 0;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      const Permutation p{std::vector<int>(v)};
      CHECK(perm_rank(p) == expected_rank);
      CHECK(perm_unrank(n, expected_rank) == p);
      ++expected_rank;
    } while (std::next_permutation(v.begin(), v.end()));
  }

  std::mt19937 rng(57);
  for (int n : {9, 10, 11}) {
    const std::uint64_t total = permutation_count(n) - permutation_count(n - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint32_t rank = static_cast<std::uint32_t>(rng() % total);
      CHECK(perm_rank(perm_unrank(n, rank)) == rank);
    }
  }
  CHECK_THROWS_AS(perm_unrank(3, 6), std::invalid_argument);
}

TEST_CASE("ids are dense and ordered by (length, lex)") {
  std::uint32_t expected = 0;
  enumerate_permutations(6, [&](const Permutation& p) {
    CHECK(perm_id(p) == expected);
    CHECK(perm_from_id(expected) == p);
    ++expected;
  });
  CHECK(expected == total_ids(6));
}

TEST_CASE("decreasing rule partition matches the five-class structure") {
  const Partition part = compute_partition(Rule::from_beta_text("3*2"), 5, 4, true);
  REQUIRE(part.classes.size() == 5);
  std::multiset<std::uint64_t> sizes;
  for (const auto& cls : part.classes) sizes.insert(cls.size);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 1, 1, 2, 149});

  const auto class_sets = partition_class_sets(part);
  CHECK(class_sets.count({Permutation{}}) == 1);
  CHECK(class_sets.count({Permutation({1})}) == 1);
  CHECK(class_sets.count({Permutation({1, 2})}) == 1);
  CHECK(class_sets.count({Permutation({2, 1}), Permutation({1, 2, 3})}) == 1);
}

TEST_CASE("drop-only partition has one class per avoider") {
  const Partition part = compute_partition(Rule::from_beta_text("12*"), 5, 0, false);
  CHECK(part.classes.size() == 65);  // 1+1+2+5+14+42
  for (const auto& cls : part.classes) CHECK(avoids(cls.min_rep, Permutation({1, 2, 3})));
}

// The shift engine conserves a trailing staircase suffix (k, ..., 2, 1):
// nothing can be inserted behind it and it can never shrink. So besides the
// isolated reverse identities the search finds one class per staircase
// length, stable under growing slack.
TEST_CASE("shift partition isolates the reverse identities and staircase families") {
  const Rule r = Rule::from_beta_text("*12");
  const Partition part = compute_partition(r, 5, 3, true);
  REQUIRE(part.classes.size() == 10);  // rid_0..rid_5, bulk, staircase k=1,2,3

  for (int n = 0; n <= 5; ++n) {
    bool found = false;
    for (const auto& cls : part.classes)
      if (cls.min_rep == Permutation::reverse_identity(n)) {
        found = true;
        CHECK(cls.size == 1);
      }
    CHECK(found);
  }

  // 12 and 123 share the bulk; 231 sits in the k=1 staircase family.
  const auto labels = class_labels(r, 5, 3);
  CHECK(labels[perm_id(Permutation({1, 2}))] == labels[perm_id(Permutation({1, 2, 3}))]);
  CHECK(labels[perm_id(Permutation({2, 3, 1}))] == labels[perm_id(Permutation({2, 3, 4, 1}))]);
  CHECK(labels[perm_id(Permutation({2, 3, 1}))] != labels[perm_id(Permutation({1, 2, 3}))]);
  CHECK(labels[perm_id(Permutation({3, 4, 2, 1}))] != labels[perm_id(Permutation({2, 3, 1}))]);

  // The split is not a ceiling artifact: counts are stable in the slack.
  CHECK(compute_partition(r, 5, 4, false).classes.size() == 10);
  CHECK(compute_partition(r, 5, 5, false).classes.size() == 10);
}

TEST_CASE("forward-only sweep equals the bidirectional reference at length 4") {
  for (const char* beta : {"3*2", "31*", "12*", "*12", "13*", "1*2"}) {
    const Rule r = Rule::from_beta_text(beta);
    for (int slack : {0, 2}) {
      const Partition part = compute_partition(r, 4, slack, true);
      CHECK(partition_class_sets(part) == reference_classes(r, 4, slack));
    }
  }
}

TEST_CASE("drop-only rules need no slack at all") {
  for (const char* beta : {"*23", "1*3", "12*"}) {
    const Rule r = Rule::from_beta_text(beta);
    const auto tight = compute_partition(r, 5, 0, true);
    const auto roomy = compute_partition(r, 5, 2, true);
    CHECK(partition_class_sets(tight) == partition_class_sets(roomy));
  }
}

TEST_CASE("raising slack never splits classes") {
  std::size_t prev = 1u << 20;
  for (int slack = 0; slack <= 5; ++slack) {
    const auto part = compute_partition(Rule::from_beta_text("3*2"), 4, slack, false);
    CHECK(part.classes.size() <= prev);
    prev = part.classes.size();
  }
  CHECK(prev == 5);
}

TEST_CASE("partitions are identical for any thread count") {
  const Rule r = Rule::from_beta_text("13*");
  const auto a = compute_partition(r, 5, 2, true, 1);
  const auto b = compute_partition(r, 5, 2, true, 4);
  CHECK(partition_to_json(a) == partition_to_json(b));
}

TEST_CASE("class_labels agree with compute_partition") {
  const Rule r = Rule::from_beta_text("3*2");
  const auto part = compute_partition(r, 4, 3, true);
  const auto labels = class_labels(r, 4, 3);
  REQUIRE(labels.size() == total_ids(4));
  for (const auto& cls : part.classes)
    for (const auto& m : cls.members) CHECK(labels[perm_id(m)] == cls.id);
}

TEST_CASE("find_path worked examples") {
  {
    const auto cert = find_path(Rule::from_beta_text("31*"), Permutation({1, 2, 3, 4, 5}),
                                Permutation({2, 1, 3, 4}), 5);
    REQUIRE(cert.has_value());
    CHECK(cert->steps.size() == 1);
    CHECK(replay(*cert, Rule::from_beta_text("31*")) == Permutation({2, 1, 3, 4}));
  }
  {
    const auto cert = find_path(Rule::from_beta_text("13*"), Permutation({2, 3, 1, 4}),
                                Permutation({2, 3, 1}), 6);
    REQUIRE(cert.has_value());
    CHECK(replay(*cert, Rule::from_beta_text("13*")) == Permutation({2, 3, 1}));
  }
  CHECK(!find_path(Rule::from_beta_text("*12"), Permutation({3, 2, 1}), Permutation({1, 2, 3}), 9)
             .has_value());
  {
    const auto cert = find_path(Rule::from_beta_text("3*2"), Permutation({2, 1}),
                                Permutation({2, 1}), 5);
    REQUIRE(cert.has_value());
    CHECK(cert->steps.empty());
    CHECK(replay(*cert, Rule::from_beta_text("3*2")) == Permutation({2, 1}));
  }
}

TEST_CASE("find_path agrees with a reference breadth-first search") {
  // Reference: plain one-sided BFS over Permutation values, no interning.
  auto ref_distance = [](const Rule& r, const Permutation& from, const Permutation& to,
                         int ceiling) -> int {
    std::map<Permutation, int> dist{{from, 0}};
    std::vector<Permutation> frontier{from};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& p : frontier) {
        const auto nb = neighbors(p, r);
        auto visit = [&](const Permutation& q) {
          if (q.size() > ceiling || dist.count(q)) return;
          dist.emplace(q, dist.at(p) + 1);
          next.push_back(q);
        };
        for (const auto& q : nb.down) visit(q);
        if (p.size() < ceiling)
          for (const auto& q : nb.up) visit(q);
      }
      frontier = std::move(next);
    }
    return dist.count(to) ? dist.at(to) : -1;
  };

  std::mt19937 rng(71);
  const std::vector<Rule>& rules = all_rules();
  for (int trial = 0; trial < 40; ++trial) {
    const Rule r = rules[rng() % rules.size()];
    std::vector<int> a(static_cast<std::size_t>(rng() % 5)), b(static_cast<std::size_t>(rng() % 5));
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation from{std::move(a)}, to{std::move(b)};
    const int ceiling = 6;

    const int want = ref_distance(r, from, to, ceiling);
    const auto cert = find_path(r, from, to, ceiling);
    if (want < 0) {
      CHECK(!cert.has_value());
    } else {
      REQUIRE(cert.has_value());
      CHECK(static_cast<int>(cert->steps.size()) == want);
      CHECK(replay(*cert, r) == to);
      CHECK(cert->start == from);
    }
  }
}

TEST_CASE("replay rejects tampered certificates") {
  const Rule r = Rule::from_beta_text("31*");
  auto cert = *find_path(r, Permutation({1, 2, 3, 4, 5}), Permutation({2, 1, 3, 4}), 5);

  auto broken_result = cert;
  broken_result.steps.back().result = Permutation({1, 2, 3, 4});
  CHECK_THROWS_AS(replay(broken_result, r), std::runtime_error);

  auto broken_move = cert;
  broken_move.steps.back().move = ForwardMove{1, 2, 4};
  CHECK_THROWS_AS(replay(broken_move, r), std::runtime_error);

  const Certificate empty{Permutation({3, 1, 2}), {}};
  CHECK(replay(empty, r) == Permutation({3, 1, 2}));
}

TEST_CASE("reach_identity") {
  {
    const auto cert = reach_identity(Rule::from_beta_text("3*2"), Permutation({2, 1}), 4);
    REQUIRE(cert.has_value());
    CHECK(is_identity(cert->final_perm()));
    CHECK(replay(*cert, Rule::from_beta_text("3*2")) == cert->final_perm());
  }
  {
    const auto cert = reach_identity(Rule::from_beta_text("3*1"), Permutation({1, 2, 3}), 4);
    REQUIRE(cert.has_value());
    CHECK(cert->steps.empty());
  }
  {
    const auto cert = reach_identity(Rule::from_beta_text("3*1"), Permutation({3, 2, 1}), 4);
    REQUIRE(cert.has_value());
    CHECK(is_identity(cert->final_perm()));
    CHECK(replay(*cert, Rule::from_beta_text("3*1")) == cert->final_perm());
  }
  CHECK(!reach_identity(Rule::from_beta_text("*12"), Permutation({3, 2, 1}), 4).has_value());
}

TEST_CASE("identity_witnesses covers every permutation for a decreasing rule") {
  const Rule r = Rule::from_beta_text("32*");
  const auto witnesses = identity_witnesses(r, 4, 4);
  REQUIRE(witnesses.size() == total_ids(4));
  for (std::uint32_t id = 0; id < witnesses.size(); ++id) {
    REQUIRE(witnesses[id].has_value());
    CHECK(witnesses[id]->start == perm_from_id(id));
    CHECK(is_identity(witnesses[id]->final_perm()));
    CHECK(replay(*witnesses[id], r) == witnesses[id]->final_perm());
  }
}

TEST_CASE("partition serialization round-trips and stays byte-stable") {
  const Partition part = compute_partition(Rule::from_beta_text("13*"), 4, 2, true);
  const std::string j1 = partition_to_json(part);
  const std::string j2 = partition_to_json(part);
  CHECK(j1 == j2);

  const Partition back = partition_from_json(j1);
  CHECK(back.rule == part.rule);
  CHECK(back.max_len == part.max_len);
  CHECK(back.slack == part.slack);
  CHECK(back.has_members);
  REQUIRE(back.classes.size() == part.classes.size());
  for (std::size_t i = 0; i < back.classes.size(); ++i) {
    CHECK(back.classes[i].min_rep == part.classes[i].min_rep);
    CHECK(back.classes[i].size == part.classes[i].size);
    CHECK(back.classes[i].members == part.classes[i].members);
  }

  const Partition lean = compute_partition(Rule::from_beta_text("13*"), 4, 2, false);
  const std::string j3 = partition_to_json(lean);
  CHECK(j3.find("members") == std::string::npos);
  CHECK(!partition_from_json(j3).has_members);

  CHECK_THROWS_AS(partition_from_json("{\"format_version\": 2}"), std::invalid_argument);
}

TEST_CASE("universe guards") {
  CHECK_THROWS_AS(compute_partition(Rule::from_beta_text("3*2"), 8, 4, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_path(Rule::from_beta_text("3*2"), Permutation({2, 1}), Permutation{}, 12),
                  std::invalid_argument);
  CHECK_THROWS_AS(reach_identity(Rule::from_beta_text("3*2"), Permutation::identity(8), 4),
                  std::invalid_argument);
}

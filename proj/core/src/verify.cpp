#include "permrep/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "permrep/classify.hpp"
#include "permrep/rewrite.hpp"

namespace permrep {

namespace {

// Platform-independent RNG so reports are byte-stable everywhere.
struct SplitMix {
  std::uint64_t state;

  explicit SplitMix(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint32_t below(std::uint32_t n) {
    return n == 0 ? 0 : static_cast<std::uint32_t>(next() % n);
  }
};

Permutation random_permutation(SplitMix& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(v[static_cast<std::size_t>(i)], v[rng.below(static_cast<std::uint32_t>(i + 1))]);
  return Permutation(std::move(v));
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  os << to_string(c.start);
  for (const auto& step : c.steps) {
    if (step.is_forward()) {
      const auto& m = std::get<ForwardMove>(step.move);
      os << " -f(" << m.i << "," << m.j << "," << m.k << ")-> ";
    } else {
      const auto& m = std::get<BackwardMove>(step.move);
      os << " -b(" << m.p1 << "," << m.p2 << ";g=" << m.gap << ",v=" << m.fresh_rank << ")-> ";
    }
    os << to_string(step.result);
  }
  return os.str();
}

void add_check(Report& rep, std::string name, std::string anchor, bool pass,
               std::string details) {
  rep.checks.push_back(
      {std::move(name), std::move(anchor), pass ? CheckStatus::Pass : CheckStatus::Fail,
       std::move(details)});
}

// The exhaustive fiber map over all permutations of length <= max_len;
// members arrive in (length, lex) order.
std::map<ClassSignature, std::vector<Permutation>> signature_fibers(const Rule& r, int max_len) {
  std::map<ClassSignature, std::vector<Permutation>> fibers;
  enumerate_permutations(max_len, [&](const Permutation& p) {
    fibers[signature_of(r, p)].push_back(p);
  });
  return fibers;
}

bool is_gamma_rule(const Rule& r) {
  return r.beta_text() == "12*" || r.beta_text() == "1*3";
}

std::vector<std::uint64_t> catalan_numbers(int up_to) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(up_to) + 1, 0);
  c[0] = 1;
  for (int k = 0; k < up_to; ++k) {
    std::uint64_t acc = 0;
    for (int i = 0; i <= k; ++i)
      acc += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
    c[static_cast<std::size_t>(k + 1)] = acc;
  }
  return c;
}

bool contains_123(const Permutation& p) {
  const auto& v = p.values();
  const int n = p.size();
  for (int i = 0; i < n - 2; ++i)
    for (int j = i + 1; j < n - 1; ++j) {
      if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)]) continue;
      for (int k = j + 1; k < n; ++k)
        if (v[static_cast<std::size_t>(k)] > v[static_cast<std::size_t>(j)]) return true;
    }
  return false;
}

void run_category_checks(Report& rep, const Rule& r, const Partition& part,
                         const std::map<ClassSignature, std::vector<Permutation>>& fibers);

Report verify_against_partition(const Rule& r, const Partition& part) {
  if (!part.has_members)
    throw std::invalid_argument("verification needs a partition with member lists");

  Report rep;
  rep.subject = r.text();
  rep.max_len = part.max_len;
  rep.slack = part.slack;

  const auto fibers = signature_fibers(r, part.max_len);

  // (a) one class per signature realized at this length.
  {
    std::ostringstream os;
    os << "search classes=" << part.classes.size() << " theory classes=" << fibers.size();
    CheckStatus st = CheckStatus::Pass;
    if (part.classes.size() > fibers.size()) {
      st = CheckStatus::Inconclusive;
      os << " (search still split within ceiling " << part.ceiling() << ")";
    } else if (part.classes.size() < fibers.size()) {
      st = CheckStatus::Fail;
      os << " (search merged classes the theory separates)";
    }
    rep.checks.push_back({"class-count", "class-structure", st, os.str()});
  }

  // (b) every class is exactly one signature fiber.
  {
    CheckStatus st = CheckStatus::Pass;
    std::string details = "every class matches its signature fiber";
    std::map<ClassSignature, std::vector<std::size_t>> classes_by_sig;

    for (std::size_t ci = 0; ci < part.classes.size() && st != CheckStatus::Fail; ++ci) {
      const auto& cls = part.classes[ci];
      const ClassSignature sig = signature_of(r, cls.min_rep);
      classes_by_sig[sig].push_back(ci);
      for (const auto& member : cls.members) {
        if (signature_of(r, member) == sig) continue;
        std::ostringstream os;
        os << "merge contradicts theory: p=" << to_string(cls.min_rep)
           << " sig=" << to_string(sig) << " vs q=" << to_string(member)
           << " sig=" << to_string(signature_of(r, member));
        if (auto cert = find_path(r, cls.min_rep, member, part.ceiling()))
          os << "; certificate: " << certificate_text(*cert);
        details = os.str();
        st = CheckStatus::Fail;
        break;
      }
    }

    if (st != CheckStatus::Fail) {
      for (const auto& [sig, members] : fibers) {
        const auto it = classes_by_sig.find(sig);
        if (it == classes_by_sig.end()) continue;  // members failed above already
        if (it->second.size() > 1) {
          std::ostringstream os;
          os << "fiber " << to_string(sig) << " is split across " << it->second.size()
             << " search classes within ceiling " << part.ceiling() << " (e.g. "
             << to_string(part.classes[it->second[0]].min_rep) << " vs "
             << to_string(part.classes[it->second[1]].min_rep) << ")";
          details = os.str();
          st = CheckStatus::Inconclusive;
          break;
        }
        if (part.classes[it->second[0]].members != members) {
          details = "class of " + to_string(part.classes[it->second[0]].min_rep) +
                    " does not equal the fiber of " + to_string(sig);
          st = CheckStatus::Fail;
          break;
        }
      }
    }
    rep.checks.push_back({"fiber-equality", "class-structure", st, std::move(details)});
  }

  run_category_checks(rep, r, part, fibers);
  return rep;
}

void run_decreasing_checks(Report& rep, const Rule& r, const Partition& part,
                           const std::map<ClassSignature, std::vector<Permutation>>&) {
  const int L = part.max_len;

  // The four finite classes hold exactly their stated members.
  {
    std::vector<std::pair<ClassSignature, std::vector<Permutation>>> expected;
    expected.emplace_back(FiveClass::Empty, std::vector<Permutation>{Permutation{}});
    if (L >= 1) expected.emplace_back(FiveClass::One, std::vector<Permutation>{Permutation({1})});
    if (L >= 2)
      expected.emplace_back(FiveClass::Twelve, std::vector<Permutation>{Permutation({1, 2})});
    if (L >= 3)
      expected.emplace_back(FiveClass::Pair123_21, std::vector<Permutation>{
                                                       Permutation({2, 1}), Permutation({1, 2, 3})});
    else if (L >= 2)
      expected.emplace_back(FiveClass::Pair123_21,
                            std::vector<Permutation>{Permutation({2, 1})});

    bool ok = true;
    std::string details = "finite classes have exactly the stated members";
    for (const auto& [sig, want] : expected) {
      bool found = false;
      for (const auto& cls : part.classes) {
        if (signature_of(r, cls.min_rep) != sig) continue;
        found = true;
        if (cls.members != want) {
          ok = false;
          details = "class " + to_string(sig) + " has unexpected members";
        }
        break;
      }
      if (!found) {
        ok = false;
        details = "class " + to_string(sig) + " not present";
      }
    }
    add_check(rep, "finite-classes", "five-classes", ok, std::move(details));
  }

  // Every permutation up to length 5 unravels to an identity.
  {
    const int spot_len = std::min(L, 5);
    const int spot_slack = std::min(4, kMaxUniverseLen - spot_len);
    const auto witnesses = identity_witnesses(r, spot_len, spot_slack);
    bool ok = true;
    std::string details;
    int longest = 0;
    for (std::uint32_t id = 0; id < witnesses.size(); ++id) {
      if (!witnesses[id].has_value()) {
        ok = false;
        details = "no identity witness for " + to_string(perm_from_id(id)) + " within slack " +
                  std::to_string(spot_slack);
        break;
      }
      const auto& cert = *witnesses[id];
      if (replay(cert, r) != cert.final_perm() || !is_identity(cert.final_perm())) {
        ok = false;
        details = "witness for " + to_string(perm_from_id(id)) + " does not replay to an identity";
        break;
      }
      longest = std::max(longest, static_cast<int>(cert.steps.size()));
    }
    if (ok) {
      std::ostringstream os;
      os << "all " << witnesses.size() << " permutations of length <= " << spot_len
         << " reach an identity (longest witness " << longest << " steps, slack " << spot_slack
         << ")";
      details = os.str();
    }
    add_check(rep, "unraveling", "unraveling", ok, std::move(details));
  }
}

void run_drop_only_checks(Report& rep, const Rule& r, const Partition& part,
                          const std::map<ClassSignature, std::vector<Permutation>>& fibers) {
  // Unique shortest member == the primitive of every member.
  {
    bool ok = true;
    std::string details = "each class has a unique shortest member equal to every member's primitive";
    for (const auto& cls : part.classes) {
      const int shortest = cls.min_rep.size();
      std::size_t at_min = 0;
      for (const auto& m : cls.members) at_min += m.size() == shortest ? 1 : 0;
      if (at_min != 1) {
        ok = false;
        details = "class of " + to_string(cls.min_rep) + " has " + std::to_string(at_min) +
                  " members of minimal length";
        break;
      }
      for (const auto& m : cls.members) {
        if (primitive(m, r) != cls.min_rep ||
            (is_gamma_rule(r) && p_canonical(m, r) != cls.min_rep)) {
          ok = false;
          details = "member " + to_string(m) + " does not reduce to " + to_string(cls.min_rep);
          break;
        }
      }
      if (!ok) break;
    }
    add_check(rep, "primitive-fibers", "primitive-uniqueness", ok, std::move(details));
  }

  // Class count equals the Catalan sum.
  {
    const auto catalan = catalan_numbers(part.max_len);
    std::uint64_t expected = 0;
    std::vector<std::uint64_t> per_len(static_cast<std::size_t>(part.max_len) + 1, 0);
    for (const auto& [sig, members] : fibers)
      ++per_len[static_cast<std::size_t>(std::get<Avoider>(sig).tau.size())];
    bool ok = true;
    std::ostringstream os;
    os << "avoiders per length:";
    for (int k = 0; k <= part.max_len; ++k) {
      os << " " << per_len[static_cast<std::size_t>(k)];
      ok = ok && per_len[static_cast<std::size_t>(k)] == catalan[static_cast<std::size_t>(k)];
      expected += catalan[static_cast<std::size_t>(k)];
    }
    os << "; total " << expected;
    ok = ok && part.classes.size() == expected;
    add_check(rep, "catalan-count", "catalan-avoiders", ok, os.str());
  }
}

void run_shift_checks(Report& rep, const Rule& r, const Partition& part,
                      const std::map<ClassSignature, std::vector<Permutation>>&) {
  bool ok = true;
  std::string details = "all reverse identities isolated";
  for (int n = 0; n <= part.max_len && ok; ++n) {
    const Permutation rid = Permutation::reverse_identity(n);
    const auto nb = neighbors(rid, r);
    if (!nb.down.empty() || !nb.up.empty()) {
      ok = false;
      details = "rid(" + std::to_string(n) + ") has neighbors";
      break;
    }
    bool found = false;
    for (const auto& cls : part.classes) {
      if (cls.min_rep != rid) continue;
      found = true;
      if (cls.members != std::vector<Permutation>{rid}) {
        ok = false;
        details = "class of rid(" + std::to_string(n) + ") is not a singleton";
      }
      break;
    }
    if (!found) {
      ok = false;
      details = "rid(" + std::to_string(n) + ") not a class representative";
    }
  }
  add_check(rep, "rid-isolated", "rid-isolation", ok, std::move(details));

  std::size_t bulk = 0;
  for (const auto& cls : part.classes)
    if (!std::get<ShiftLabel>(signature_of(r, cls.min_rep)).is_rid) ++bulk;
  const std::size_t want = part.max_len < 2 ? 0 : 1;
  CheckStatus st = CheckStatus::Pass;
  std::string bulk_details = "bulk classes: " + std::to_string(bulk);
  if (bulk > want) {
    // Splits within the ceiling are not counterexamples; a merge of a
    // reverse identity into the bulk would have failed rid-isolated above.
    st = CheckStatus::Inconclusive;
    bulk_details += " (bulk still split within ceiling " + std::to_string(part.ceiling()) + ")";
  } else if (bulk < want) {
    st = CheckStatus::Fail;
  }
  rep.checks.push_back({"single-bulk", "single-bulk-class", st, std::move(bulk_details)});
}

void run_switch_checks(Report& rep, const Rule& r, const Partition& part,
                       const std::map<ClassSignature, std::vector<Permutation>>& fibers) {
  // Isolated classes are exactly the reverse identities.
  {
    bool ok = true;
    std::string details = "isolated classes are exactly the reverse identities";
    for (int n = 0; n <= part.max_len && ok; ++n) {
      const Permutation rid = Permutation::reverse_identity(n);
      const auto nb = neighbors(rid, r);
      if (!nb.down.empty() || !nb.up.empty()) {
        ok = false;
        details = "rid(" + std::to_string(n) + ") has neighbors";
      }
    }
    if (ok) {
      enumerate_permutations(part.max_len, [&](const Permutation& p) {
        if (!ok || is_reverse_identity(p)) return;
        if (backward_moves(p, r).empty()) {
          ok = false;
          details = to_string(p) + " has no backward move yet is not a reverse identity";
        }
      });
    }
    add_check(rep, "rid-isolated", "rid-isolation", ok, std::move(details));
  }

  // Unique shortest member of each non-isolated class is the canonical form.
  {
    bool ok = true;
    std::string details = "every non-isolated class bottoms out at its canonical form";
    for (const auto& cls : part.classes) {
      const ClassSignature sig = signature_of(r, cls.min_rep);
      if (!std::holds_alternative<SwitchTriple>(sig)) continue;
      Permutation canon;
      try {
        canon = switch_canonical(std::get<SwitchTriple>(sig), r);
      } catch (const std::invalid_argument&) {
        ok = false;
        details = "signature " + to_string(sig) + " of class " + to_string(cls.min_rep) +
                  " fails the canonical round-trip";
        break;
      }
      std::size_t at_min = 0;
      for (const auto& m : cls.members) at_min += m.size() == cls.min_rep.size() ? 1 : 0;
      if (cls.min_rep != canon || at_min != 1) {
        ok = false;
        details = "class of " + to_string(cls.min_rep) + " does not bottom out at " +
                  to_string(canon);
        break;
      }
    }
    add_check(rep, "canonical-shortest", "canonical-form", ok, std::move(details));
  }

  // Realized triples, reported against the stated box 1 <= p,v <= m.
  {
    std::map<int, std::set<std::pair<int, int>>> realized;
    for (const auto& [sig, members] : fibers)
      if (const auto* t = std::get_if<SwitchTriple>(&sig))
        realized[t->m].insert({t->p, t->v});
    std::ostringstream os;
    for (const auto& [m, pv] : realized) {
      os << "m=" << m << ": realized " << pv.size() << "/" << m * m << " of the stated box";
      std::set<std::pair<int, int>> outside;
      for (const auto& [p, v] : pv)
        if (p < 1 || p > m || v < 1 || v > m) outside.insert({p, v});
      if (!outside.empty()) {
        os << " (" << outside.size() << " outside it:";
        for (const auto& [p, v] : outside) os << " (" << p << "," << v << ")";
        os << ")";
      }
      os << "; ";
    }
    os << "realized set listed by verify only, fibers checked above";
    rep.checks.push_back({"realized-triples", "triple-realizability", CheckStatus::Pass, os.str()});
  }
}

void run_category_checks(Report& rep, const Rule& r, const Partition& part,
                         const std::map<ClassSignature, std::vector<Permutation>>& fibers) {
  switch (r.category()) {
    case RuleCategory::Decreasing: run_decreasing_checks(rep, r, part, fibers); break;
    case RuleCategory::DropOnly: run_drop_only_checks(rep, r, part, fibers); break;
    case RuleCategory::Shift: run_shift_checks(rep, r, part, fibers); break;
    case RuleCategory::SwitchNeighborDrop: run_switch_checks(rep, r, part, fibers); break;
  }
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

CheckStatus Report::overall() const {
  CheckStatus out = CheckStatus::Pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Inconclusive) out = CheckStatus::Inconclusive;
  }
  return out;
}

Report verify_rule(const Rule& r, int max_len, int slack, bool auto_escalate, int threads) {
  int used_slack = slack;
  Partition part = compute_partition(r, max_len, used_slack, true, threads);
  if (auto_escalate) {
    // Splits can only disappear as the ceiling rises; merges never can.
    const std::size_t theory = signature_fibers(r, max_len).size();
    while (part.classes.size() > theory && max_len + used_slack < kMaxUniverseLen) {
      ++used_slack;
      part = compute_partition(r, max_len, used_slack, true, threads);
    }
  }
  return verify_against_partition(r, part);
}

Report verify_partition(const Partition& partition) {
  return verify_against_partition(partition.rule, partition);
}

Report verify_symmetry(const StarString& beta, int max_len, int slack, int threads) {
  const Rule rule = Rule::from_beta(beta);
  const Rule mirror = rule.reverse_complement();

  Report rep;
  rep.subject = "rc-pair " + rule.beta_text() + " / " + mirror.beta_text();
  rep.max_len = max_len;
  rep.slack = slack;

  const auto labels = class_labels(rule, max_len, slack, threads);
  const auto mirror_labels = class_labels(mirror, max_len, slack, threads);

  const std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> fwd, bwd;
  bool ok = true;
  std::string details;

  for (std::uint32_t id = 0; id < labels.size() && ok; ++id) {
    const Permutation p = perm_from_id(id);
    const std::uint32_t a = labels[id];
    const std::uint32_t b = mirror_labels[perm_id(reverse_complement(p))];
    if (a >= fwd.size()) fwd.resize(a + 1, kUnset);
    if (b >= bwd.size()) bwd.resize(b + 1, kUnset);
    if (fwd[a] == kUnset) fwd[a] = b;
    if (bwd[b] == kUnset) bwd[b] = a;
    if (fwd[a] != b || bwd[b] != a) {
      ok = false;
      details = "class map breaks at " + to_string(p);
    }
  }
  if (ok) {
    std::ostringstream os;
    os << "reverse complement is a class bijection over " << labels.size()
       << " permutations (" << fwd.size() << " classes per side)";
    details = os.str();
  }
  add_check(rep, "rc-bijection", "rc-duality", ok, std::move(details));
  return rep;
}

Report verify_confluence(const Rule& r, int samples, std::uint64_t seed) {
  if (r.category() != RuleCategory::DropOnly)
    throw std::invalid_argument("confluence verification applies to drop-only rules");

  constexpr int kOrders = 5;
  constexpr int kMaxLen = 10;

  Report rep;
  rep.subject = r.text();
  rep.samples = samples;
  rep.seed = seed;

  SplitMix rng(seed);
  bool agree = true, matches_canonical = true;
  std::string agree_details, canon_details;

  for (int sample = 0; sample < samples && agree && matches_canonical; ++sample) {
    const int n = static_cast<int>(rng.below(kMaxLen + 1));
    const Permutation p = random_permutation(rng, n);

    Permutation first;
    for (int order = 0; order < kOrders; ++order) {
      Permutation cur = p;
      for (;;) {
        const auto sites = forward_sites(cur, r);
        if (sites.empty()) break;
        cur = apply_forward(cur, r, sites[rng.below(static_cast<std::uint32_t>(sites.size()))]);
      }
      if (order == 0) {
        first = cur;
      } else if (cur != first) {
        agree = false;
        agree_details = "orders disagree on " + to_string(p) + ": " + to_string(first) + " vs " +
                        to_string(cur);
        break;
      }
    }
    if (!agree) break;
    if (first != primitive(p, r) || (is_gamma_rule(r) && first != p_canonical(p, r))) {
      matches_canonical = false;
      canon_details = "random orders reach " + to_string(first) + " but the primitive of " +
                      to_string(p) + " is " + to_string(primitive(p, r));
    }
  }

  if (agree)
    agree_details = std::to_string(samples) + " random inputs x " + std::to_string(kOrders) +
                    " reduction orders all agree";
  if (matches_canonical)
    canon_details = "every reduction matched the primitive" +
                    std::string(is_gamma_rule(r) ? " and the leftmost-copy reduction" : "");
  add_check(rep, "confluence", "order-independence", agree, std::move(agree_details));
  add_check(rep, "primitive-agreement", "order-independence", matches_canonical,
            std::move(canon_details));
  return rep;
}

Report verify_inverse_adjacency(const Rule& r, int max_len) {
  if (max_len < 0 || max_len > 8)
    throw std::invalid_argument("inverse adjacency check supports max_len 0..8");

  Report rep;
  rep.subject = r.text();
  rep.max_len = max_len;

  // Every edge, once as a forward edge of the longer endpoint and once as a
  // backward edge of the shorter endpoint. The two views must coincide.
  std::set<std::pair<std::uint32_t, std::uint32_t>> down_edges, up_edges;
  enumerate_permutations(max_len, [&](const Permutation& p) {
    const std::uint32_t pid = perm_id(p);
    for (const auto& d : neighbors(p, r).down) down_edges.insert({perm_id(d), pid});
    if (p.size() < max_len)
      for (const auto& u : neighbors(p, r).up) up_edges.insert({pid, perm_id(u)});
  });

  bool ok = down_edges == up_edges;
  std::string details;
  if (ok) {
    details = std::to_string(down_edges.size()) + " edges match in both directions";
  } else {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> diff;
    std::set_symmetric_difference(down_edges.begin(), down_edges.end(), up_edges.begin(),
                                  up_edges.end(), std::back_inserter(diff));
    details = "mismatched edge " + to_string(perm_from_id(diff.front().first)) + " <-> " +
              to_string(perm_from_id(diff.front().second));
  }
  add_check(rep, "adjacency", "step-invertibility", ok, std::move(details));
  return rep;
}

Report catalan_check(int max_len) {
  if (max_len < 0 || max_len > 10)
    throw std::invalid_argument("catalan check supports max_len 0..10");

  Report rep;
  rep.subject = "123-avoidance counts";
  rep.max_len = max_len;

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_len) + 1, 0);
  enumerate_permutations(max_len, [&](const Permutation& p) {
    if (!contains_123(p)) ++counts[static_cast<std::size_t>(p.size())];
  });
  const auto catalan = catalan_numbers(max_len);

  bool ok = true;
  std::ostringstream os;
  os << "avoiders per length:";
  for (int k = 0; k <= max_len; ++k) {
    os << " " << counts[static_cast<std::size_t>(k)];
    ok = ok && counts[static_cast<std::size_t>(k)] == catalan[static_cast<std::size_t>(k)];
  }
  add_check(rep, "catalan-counts", "catalan-avoiders", ok, os.str());

  const int part_len = std::min(max_len, 7);
  std::uint64_t expected = 0;
  for (int k = 0; k <= part_len; ++k) expected += catalan[static_cast<std::size_t>(k)];
  bool classes_ok = true;
  std::ostringstream os2;
  for (const Rule& r : all_rules()) {
    if (r.category() != RuleCategory::DropOnly) continue;
    const auto part = compute_partition(r, part_len, 0, false);
    classes_ok = classes_ok && part.classes.size() == expected;
    os2 << r.beta_text() << "=" << part.classes.size() << " ";
  }
  os2 << "expected " << expected << " at length <= " << part_len;
  add_check(rep, "drop-only-class-counts", "catalan-avoiders", classes_ok, os2.str());
  return rep;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << r.subject << " (max_len=" << r.max_len << ", slack=" << r.slack;
  if (r.samples > 0) os << ", samples=" << r.samples << ", seed=" << r.seed;
  os << ")\n";
  for (const auto& c : r.checks)
    os << "  [" << to_string(c.status) << "] " << c.name << " {" << c.anchor
       << "}: " << c.details << "\n";
  os << "  overall: " << to_string(r.overall()) << "\n";
  return os.str();
}

namespace {

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["subject"] = r.subject;
  j["max_len"] = r.max_len;
  j["slack"] = r.slack;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["overall"] = to_string(r.overall());
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["status"] = to_string(c.status);
    jc["details"] = c.details;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

std::string report_to_json_string(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string reports_to_json_string(const std::vector<Report>& rs) {
  nlohmann::json j;
  CheckStatus overall = CheckStatus::Pass;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) {
    if (r.overall() == CheckStatus::Fail) overall = CheckStatus::Fail;
    else if (r.overall() == CheckStatus::Inconclusive && overall != CheckStatus::Fail)
      overall = CheckStatus::Inconclusive;
    arr.push_back(report_to_json(r));
  }
  j["overall"] = to_string(overall);
  j["reports"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace permrep

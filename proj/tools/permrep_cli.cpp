#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permrep/classify.hpp"
#include "permrep/explore.hpp"
#include "permrep/rewrite.hpp"
#include "permrep/rule.hpp"
#include "permrep/verify.hpp"

namespace {

using namespace permrep;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

int exit_code_for(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return kExitPass;
    case CheckStatus::Fail: return kExitFail;
    case CheckStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

std::vector<int> parse_csv_ints(const std::string& text, std::size_t expected, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("malformed ") + what + " component '" + tok + "'");
    }
  }
  if (out.size() != expected)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(expected) +
                                " comma-separated integers");
  return out;
}

std::pair<int, int> default_scale(RuleCategory c) {
  switch (c) {
    case RuleCategory::Decreasing: return {5, 4};
    case RuleCategory::DropOnly: return {6, 0};
    case RuleCategory::Shift: return {6, 3};
    case RuleCategory::SwitchNeighborDrop: return {7, 2};
  }
  return {5, 4};
}

std::string signature_kind(const ClassSignature& sig) {
  struct Visitor {
    std::string operator()(FiveClass) const { return "five-class"; }
    std::string operator()(const Avoider&) const { return "avoider"; }
    std::string operator()(const ShiftLabel& s) const {
      return s.is_rid ? "isolated-rid" : "shift-bulk";
    }
    std::string operator()(const SwitchTriple&) const { return "switch-triple"; }
    std::string operator()(const IsolatedRid&) const { return "isolated-rid"; }
  };
  return std::visit(Visitor{}, sig);
}

nlohmann::json certificate_json(const Certificate& cert) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : cert.steps) {
    nlohmann::json js;
    if (step.is_forward()) {
      const auto& m = std::get<ForwardMove>(step.move);
      js["dir"] = "forward";
      js["move"] = {m.i, m.j, m.k};
    } else {
      const auto& m = std::get<BackwardMove>(step.move);
      js["dir"] = "backward";
      js["move"] = {m.p1, m.p2, m.gap, m.fresh_rank};
    }
    js["result"] = to_string(step.result);
    steps.push_back(std::move(js));
  }
  nlohmann::json j;
  j["start"] = to_string(cert.start);
  j["steps"] = std::move(steps);
  return j;
}

void print_certificate_text(const Certificate& cert) {
  std::cout << "start " << to_string(cert.start) << "\n";
  for (const auto& step : cert.steps) {
    if (step.is_forward()) {
      const auto& m = std::get<ForwardMove>(step.move);
      std::cout << "forward (" << m.i << "," << m.j << "," << m.k << ")";
    } else {
      const auto& m = std::get<BackwardMove>(step.move);
      std::cout << "backward (" << m.p1 << "," << m.p2 << ";g=" << m.gap << ",v=" << m.fresh_rank
                << ")";
    }
    std::cout << " -> " << to_string(step.result) << "\n";
  }
  std::cout << "steps: " << cert.steps.size() << "\n";
}

struct Options {
  std::string rule;
  std::string perm;
  std::string site;
  std::string move;
  std::string from;
  std::string to;
  std::string triple;
  std::string format = "text";
  std::string out_file;
  std::string in_file;
  int max_len = -1;
  int slack = -1;
  bool auto_slack = false;
  bool members = false;
  int threads = 0;
  int samples = 500;
  std::uint64_t seed = 0;
};

int print_simple(const Options& opt, const std::string& key, const std::string& value) {
  if (opt.format == "json") {
    nlohmann::json j;
    j[key] = value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
  return kExitPass;
}

int run_apply(const Options& opt) {
  const ParsedRule pr = parse_rule(opt.rule);
  const Permutation p = parse_permutation(opt.perm);
  const bool have_site = !opt.site.empty();
  const bool have_move = !opt.move.empty();
  if (pr.direction == Direction::Forward && !have_site)
    throw std::invalid_argument("forward rule needs --site i,j,k");
  if (pr.direction == Direction::Backward && !have_move)
    throw std::invalid_argument("backward rule needs --move p1,p2,g,v");
  if (have_site == have_move)
    throw std::invalid_argument("pass exactly one of --site or --move");

  Permutation result;
  if (have_site) {
    const auto v = parse_csv_ints(opt.site, 3, "--site");
    result = apply_forward(p, pr.rule, ForwardMove{v[0], v[1], v[2]});
  } else {
    const auto v = parse_csv_ints(opt.move, 4, "--move");
    result = apply_backward(p, pr.rule, BackwardMove{v[0], v[1], v[2], v[3]});
  }
  return print_simple(opt, "result", to_string(result));
}

int run_neighbors(const Options& opt) {
  const ParsedRule pr = parse_rule(opt.rule);
  const Permutation p = parse_permutation(opt.perm);
  const Neighborhood nb = neighbors(p, pr.rule);
  auto join = [](const std::vector<Permutation>& v) {
    std::string s;
    for (const auto& q : v) {
      if (!s.empty()) s += " ";
      s += to_string(q);
    }
    return s;
  };
  if (opt.format == "json") {
    nlohmann::json j;
    j["down"] = nlohmann::json::array();
    j["up"] = nlohmann::json::array();
    for (const auto& q : nb.down) j["down"].push_back(to_string(q));
    for (const auto& q : nb.up) j["up"].push_back(to_string(q));
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    for (const auto& q : nb.down) std::cout << "down," << to_string(q) << "\n";
    for (const auto& q : nb.up) std::cout << "up," << to_string(q) << "\n";
  } else {
    std::cout << "down: " << join(nb.down) << "\n";
    std::cout << "up: " << join(nb.up) << "\n";
  }
  return kExitPass;
}

int run_primitive(const Options& opt) {
  const ParsedRule pr = parse_rule(opt.rule);
  const Permutation p = parse_permutation(opt.perm);
  return print_simple(opt, "primitive", to_string(primitive(p, pr.rule)));
}

int run_signature(const Options& opt) {
  const ParsedRule pr = parse_rule(opt.rule);
  const Permutation p = parse_permutation(opt.perm);
  const ClassSignature sig = signature_of(pr.rule, p);
  if (opt.format == "json") {
    nlohmann::json j;
    j["kind"] = signature_kind(sig);
    j["signature"] = to_string(sig);
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << to_string(sig) << "\n";
  return kExitPass;
}

int run_canonical(const Options& opt) {
  const ParsedRule pr = parse_rule(opt.rule);
  const auto v = parse_csv_ints(opt.triple, 3, "--triple");
  const Permutation canon = switch_canonical(SwitchTriple{v[0], v[1], v[2]}, pr.rule);
  return print_simple(opt, "canonical", to_string(canon));
}

int run_classes(const Options& opt) {
  const ParsedRule pr = parse_rule(opt.rule);
  const auto [def_len, def_slack] = default_scale(pr.rule.category());
  const int max_len = opt.max_len >= 0 ? opt.max_len : def_len;
  const int slack = opt.slack >= 0 ? opt.slack : def_slack;

  const Partition part = compute_partition(pr.rule, max_len, slack, opt.members, opt.threads);
  if (!opt.out_file.empty()) {
    std::ofstream f(opt.out_file, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + opt.out_file + "'");
    f << partition_to_json(part);
  }

  if (opt.format == "json") {
    std::cout << partition_to_json(part);
  } else if (opt.format == "csv") {
    std::cout << "id,min_rep,size\n";
    for (const auto& cls : part.classes)
      std::cout << cls.id << "," << to_string(cls.min_rep) << "," << cls.size << "\n";
  } else {
    std::cout << part.rule.text() << "  max_len " << part.max_len << "  slack " << part.slack
              << "\nclasses: " << part.classes.size() << "\n";
    for (const auto& cls : part.classes) {
      std::cout << "  " << cls.id << "  " << to_string(cls.min_rep) << "  size " << cls.size;
      if (part.has_members) {
        std::cout << "  members:";
        for (const auto& m : cls.members) std::cout << " " << to_string(m);
      }
      std::cout << "\n";
    }
  }
  return kExitPass;
}

int print_certificate(const Options& opt, const std::optional<Certificate>& cert, int ceiling) {
  if (opt.format == "json") {
    nlohmann::json j;
    j["found"] = cert.has_value();
    j["ceiling"] = ceiling;
    if (cert) {
      j.update(certificate_json(*cert));
      j["final"] = to_string(cert->final_perm());
    }
    std::cout << j.dump(2) << "\n";
  } else if (cert) {
    print_certificate_text(*cert);
  }
  if (!cert) {
    std::cerr << "no path within ceiling " << ceiling << " (inconclusive)\n";
    return kExitInconclusive;
  }
  return kExitPass;
}

int run_path(const Options& opt) {
  const ParsedRule pr = parse_rule(opt.rule);
  const Permutation from = parse_permutation(opt.from);
  const Permutation to = parse_permutation(opt.to);
  const int slack = opt.slack >= 0 ? opt.slack : 4;
  const int ceiling = std::max(from.size(), to.size()) + slack;
  const auto cert = find_path(pr.rule, from, to, ceiling);
  return print_certificate(opt, cert, ceiling);
}

int run_unravel(const Options& opt) {
  const ParsedRule pr = parse_rule(opt.rule);
  const Permutation p = parse_permutation(opt.perm);
  const int slack = opt.slack >= 0 ? opt.slack : 4;
  const auto cert = reach_identity(pr.rule, p, slack);
  return print_certificate(opt, cert, p.size() + slack);
}

Report verify_one_rule(const Rule& rule, const Options& opt) {
  const auto [def_len, def_slack] = default_scale(rule.category());
  const int max_len = opt.max_len >= 0 ? opt.max_len : def_len;
  const int slack = opt.slack >= 0 ? opt.slack : def_slack;
  Report rep = verify_rule(rule, max_len, slack, opt.auto_slack, opt.threads);
  if (rule.category() == RuleCategory::DropOnly) {
    // Reduction-order independence is part of this category's claims; fold
    // the randomized confluence run into the rule's report.
    Report conf = verify_confluence(rule, opt.samples, opt.seed);
    rep.samples = conf.samples;
    rep.seed = conf.seed;
    for (auto& c : conf.checks) rep.checks.push_back(std::move(c));
  }
  return rep;
}

int emit_reports(const Options& opt, const std::vector<Report>& reports) {
  CheckStatus overall = CheckStatus::Pass;
  for (const auto& r : reports) {
    if (r.overall() == CheckStatus::Fail)
      overall = CheckStatus::Fail;
    else if (r.overall() == CheckStatus::Inconclusive && overall != CheckStatus::Fail)
      overall = CheckStatus::Inconclusive;
  }
  if (opt.format == "json") {
    if (reports.size() == 1)
      std::cout << report_to_json_string(reports.front());
    else
      std::cout << reports_to_json_string(reports);
  } else if (opt.format == "csv") {
    std::cout << "subject,check,anchor,status\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        std::cout << r.subject << "," << c.name << "," << c.anchor << "," << to_string(c.status)
                  << "\n";
  } else {
    for (const auto& r : reports) std::cout << report_to_text(r);
    if (reports.size() > 1) std::cout << "overall: " << to_string(overall) << "\n";
  }
  return exit_code_for(overall);
}

int run_verify(const Options& opt) {
  if (!opt.in_file.empty()) {
    std::ifstream f(opt.in_file, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file '" + opt.in_file + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const Partition part = partition_from_json(buf.str());
    if (!opt.rule.empty() && parse_rule(opt.rule).rule != part.rule)
      throw std::invalid_argument("--rule disagrees with the partition file");
    Report rep = verify_partition(part);
    if (part.rule.category() == RuleCategory::DropOnly) {
      Report conf = verify_confluence(part.rule, opt.samples, opt.seed);
      rep.samples = conf.samples;
      rep.seed = conf.seed;
      for (auto& c : conf.checks) rep.checks.push_back(std::move(c));
    }
    return emit_reports(opt, {rep});
  }
  if (opt.rule.empty()) throw std::invalid_argument("verify needs --rule or --in");
  const ParsedRule pr = parse_rule(opt.rule);
  return emit_reports(opt, {verify_one_rule(pr.rule, opt)});
}

int run_verify_all(const Options& opt) {
  std::vector<Report> reports;
  for (const Rule& rule : all_rules()) reports.push_back(verify_one_rule(rule, opt));
  return emit_reports(opt, reports);
}

int run_rc(const Options& opt) {
  if (opt.perm.empty() == opt.rule.empty())
    throw std::invalid_argument("pass exactly one of --perm or --rule");
  if (!opt.perm.empty())
    return print_simple(opt, "result", to_string(reverse_complement(parse_permutation(opt.perm))));
  const ParsedRule pr = parse_rule(opt.rule);
  return print_simple(opt, "result", pr.rule.reverse_complement().text());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Length-changing pattern replacements 123 <-> beta on permutations"};
  app.require_subcommand(1);

  Options opt;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* apply = app.add_subcommand("apply", "Apply one replacement step at explicit parameters");
  apply->add_option("--rule", opt.rule, "Rule, e.g. 123->3*2")->required();
  apply->add_option("--perm", opt.perm, "Permutation")->required();
  apply->add_option("--site", opt.site, "Forward site i,j,k");
  apply->add_option("--move", opt.move, "Backward move p1,p2,g,v");
  add_format(apply);

  auto* nbrs = app.add_subcommand("neighbors", "All one-step results in both directions");
  nbrs->add_option("--rule", opt.rule)->required();
  nbrs->add_option("--perm", opt.perm)->required();
  add_format(nbrs);

  auto* prim = app.add_subcommand("primitive", "Shortest equivalent permutation (drop-only rules)");
  prim->add_option("--rule", opt.rule)->required();
  prim->add_option("--perm", opt.perm)->required();
  add_format(prim);

  auto* sig = app.add_subcommand("signature", "Class signature of a permutation");
  sig->add_option("--rule", opt.rule)->required();
  sig->add_option("--perm", opt.perm)->required();
  add_format(sig);

  auto* canon = app.add_subcommand("canonical", "Shortest member for a switch triple");
  canon->add_option("--rule", opt.rule)->required();
  canon->add_option("--triple", opt.triple, "Triple m,p,v")->required();
  add_format(canon);

  auto* classes = app.add_subcommand("classes", "Equivalence classes over a bounded universe");
  classes->add_option("--rule", opt.rule)->required();
  classes->add_option("--max-len", opt.max_len, "Classes cover lengths 0..max-len");
  classes->add_option("--slack", opt.slack, "Search may climb this far above max-len");
  classes->add_flag("--members", opt.members, "Keep full member lists");
  classes->add_option("--threads", opt.threads, "Worker threads (0 = auto)");
  classes->add_option("--out", opt.out_file, "Write the partition as JSON to this file");
  add_format(classes);

  auto* path = app.add_subcommand("path", "Shortest equivalence certificate between two permutations");
  path->add_option("--rule", opt.rule)->required();
  path->add_option("--from", opt.from)->required();
  path->add_option("--to", opt.to)->required();
  path->add_option("--slack", opt.slack, "Ceiling above the longer endpoint (default 4)");
  add_format(path);

  auto* unravel = app.add_subcommand("unravel", "Certificate from a permutation to an identity");
  unravel->add_option("--rule", opt.rule)->required();
  unravel->add_option("--perm", opt.perm)->required();
  unravel->add_option("--slack", opt.slack, "Ceiling above |perm| (default 4)");
  add_format(unravel);

  auto* verify = app.add_subcommand("verify", "Check the class structure of one rule");
  verify->add_option("--rule", opt.rule, "Rule to verify");
  verify->add_option("--max-len", opt.max_len, "Verified lengths (default per category)");
  verify->add_option("--slack", opt.slack, "Search slack (default per category)");
  verify->add_flag("--auto-slack", opt.auto_slack, "Escalate slack while the search stays split");
  verify->add_option("--samples", opt.samples, "Random inputs for confluence checks");
  verify->add_option("--seed", opt.seed, "Seed for randomized checks");
  verify->add_option("--threads", opt.threads, "Worker threads (0 = auto)");
  verify->add_option("--in", opt.in_file, "Verify a partition file instead of recomputing");
  add_format(verify);

  auto* verify_all = app.add_subcommand("verify-all", "Check the class structure of all 18 rules");
  verify_all->add_option("--max-len", opt.max_len, "Verified lengths (default per category)");
  verify_all->add_option("--slack", opt.slack, "Search slack (default per category)");
  verify_all->add_flag("--auto-slack", opt.auto_slack, "Escalate slack while the search stays split");
  verify_all->add_option("--samples", opt.samples, "Random inputs for confluence checks");
  verify_all->add_option("--seed", opt.seed, "Seed for randomized checks");
  verify_all->add_option("--threads", opt.threads, "Worker threads (0 = auto)");
  add_format(verify_all);

  auto* rc = app.add_subcommand("rc", "Reverse complement of a permutation or rule");
  rc->add_option("--perm", opt.perm, "Permutation");
  rc->add_option("--rule", opt.rule, "Rule");
  add_format(rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(apply)) return run_apply(opt);
    if (app.got_subcommand(nbrs)) return run_neighbors(opt);
    if (app.got_subcommand(prim)) return run_primitive(opt);
    if (app.got_subcommand(sig)) return run_signature(opt);
    if (app.got_subcommand(canon)) return run_canonical(opt);
    if (app.got_subcommand(classes)) return run_classes(opt);
    if (app.got_subcommand(path)) return run_path(opt);
    if (app.got_subcommand(unravel)) return run_unravel(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(verify_all)) return run_verify_all(opt);
    if (app.got_subcommand(rc)) return run_rc(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

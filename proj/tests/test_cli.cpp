#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "cli_runner.hpp"

using testutil::run_command;

namespace {

std::string cli() { return "\"" + testutil::cli_path_from_env() + "\""; }

}  // namespace

TEST_CASE("apply forward step") {
  const auto res = run_command(cli() + " apply --rule \"123->3*2\" --perm 14253 --site 1,3,4");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "4312\n");
}

TEST_CASE("apply backward step") {
  const auto res = run_command(cli() + " apply --rule \"3*2->123\" --perm 21 --move 1,2,1,1");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "123\n");
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run_command(cli() + " apply --rule \"123->3*2\" 2>/dev/null").exit_code == 64);
  CHECK(run_command(cli() + " apply --rule \"123->132\" --perm 123 --site 1,2,3 2>/dev/null")
            .exit_code == 64);
  CHECK(run_command(cli() + " frobnicate 2>/dev/null").exit_code == 64);
  CHECK(run_command(cli() + " primitive --rule \"123<->3*2\" --perm 123 2>/dev/null").exit_code ==
        64);  // not a drop-only rule
  CHECK(run_command(cli() + " canonical --rule \"123<->13*\" --triple 2,1,1 2>/dev/null")
            .exit_code == 64);  // unrealizable triple
  CHECK(run_command(cli() + " classes --rule \"123<->3*2\" --max-len 9 --slack 4 2>/dev/null")
            .exit_code == 64);  // universe guard
}

TEST_CASE("primitive, signature, canonical, rc") {
  CHECK(run_command(cli() + " primitive --rule \"123<->12*\" --perm 152364").out == "132\n");
  CHECK(run_command(cli() + " signature --rule \"123<->13*\" --perm 2314").out ==
        "triple(m=2,p=1,v=2)\n");
  CHECK(run_command(cli() + " signature --rule \"123<->3*2\" --perm 21").out == "five({123,21})\n");
  CHECK(run_command(cli() + " canonical --rule \"123<->13*\" --triple 2,1,2").out == "231\n");
  CHECK(run_command(cli() + " rc --perm 2314").out == "1423\n");
  CHECK(run_command(cli() + " rc --rule \"123<->13*\"").out == "123<->*13\n");
}

TEST_CASE("neighbors output") {
  const auto res = run_command(cli() + " neighbors --rule \"123<->13*\" --perm 123");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("down: 12\n") != std::string::npos);
  CHECK(res.out.find("up:") != std::string::npos);
}

TEST_CASE("path prints a replayable certificate") {
  const auto res =
      run_command(cli() + " path --rule \"123<->31*\" --from 12345 --to 2134 --slack 0");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("start 12345\n") != std::string::npos);
  CHECK(res.out.find("steps: 1\n") != std::string::npos);
}

TEST_CASE("path and unravel report isolation as inconclusive") {
  CHECK(run_command(cli() + " path --rule \"123<->*12\" --from 321 --to 123 2>/dev/null")
            .exit_code == 2);
  CHECK(run_command(cli() + " unravel --rule \"123<->*12\" --perm 321 2>/dev/null").exit_code ==
        2);
}

TEST_CASE("unravel reaches an identity") {
  const auto res = run_command(cli() + " unravel --rule \"123<->3*1\" --perm 321");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("start 321\n") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run_command(cli() + " verify --rule \"123<->3*2\" --max-len 4 --slack 4 >/dev/null")
            .exit_code == 0);
  CHECK(run_command(cli() + " verify --rule \"123<->3*2\" --max-len 5 --slack 0 >/dev/null")
            .exit_code == 2);
}

TEST_CASE("classes --out then verify --in reproduces the fresh report") {
  const std::string file = "cli_partition_roundtrip.json";
  const auto saved = run_command(cli() + " classes --rule \"123<->12*\" --max-len 5 --slack 0" +
                                 " --members --out " + file + " >/dev/null");
  REQUIRE(saved.exit_code == 0);

  const auto from_file =
      run_command(cli() + " verify --in " + file + " --format json --seed 7");
  const auto fresh = run_command(
      cli() + " verify --rule \"123<->12*\" --max-len 5 --slack 0 --format json --seed 7");
  CHECK(from_file.exit_code == 0);
  CHECK(fresh.exit_code == 0);
  CHECK(from_file.out == fresh.out);
  std::remove(file.c_str());
}

TEST_CASE("json output is well-formed and deterministic") {
  const std::string cmd =
      cli() + " verify --rule \"123<->12*\" --max-len 4 --slack 0 --format json --seed 3";
  const auto a = run_command(cmd);
  const auto b = run_command(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"overall\": \"PASS\"") != std::string::npos);
}

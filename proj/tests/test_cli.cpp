#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef TOURNAMENT_CLI_PATH
#error "TOURNAMENT_CLI_PATH must point at the built command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Runs the binary through the shell with stdin/stdout/stderr redirected to
// scratch files.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string tag = "cli_case_" + std::to_string(counter++);
  const auto in_path = dir / (tag + ".in");
  const auto out_path = dir / (tag + ".out");
  const auto err_path = dir / (tag + ".err");
  {
    std::ofstream in(in_path, std::ios::binary);
    in << stdin_text;
  }
  const std::string command = std::string(TOURNAMENT_CLI_PATH) + " " + args +
                              " < " + in_path.string() + " > " +
                              out_path.string() + " 2> " + err_path.string();
  const int status = std::system(command.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(in_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

}  // namespace

TEST_CASE("check reports feasibility through exit codes") {
  const RunResult feasible = run_cli("check --class hankel 1 2 2 3 4 4 5");
  CHECK(feasible.exit_code == 0);
  CHECK(feasible.out == "feasible\n");

  CHECK(run_cli("check --class skewhankel 0 0").exit_code == 0);

  const RunResult infeasible = run_cli("check --class plain 0 0 0");
  CHECK(infeasible.exit_code == 1);
  CHECK(infeasible.out.rfind("infeasible:", 0) == 0);
}

TEST_CASE("build then verify round-trips class and scores") {
  const RunResult built = run_cli("build --class hankel 1 2 2 3 4 4 5");
  REQUIRE(built.exit_code == 0);
  const RunResult verified = run_cli("verify --class hankel", built.out);
  CHECK(verified.exit_code == 0);
  CHECK(verified.out.find("order 7\n") != std::string::npos);
  CHECK(verified.out.find("scores 1 2 2 3 4 4 5\n") != std::string::npos);
  CHECK(verified.out.find("hankel") != std::string::npos);
}

TEST_CASE("verify auto-detects every class") {
  const std::string member = "5\n00100\n10001\n01010\n10001\n00100\n";
  const RunResult r = run_cli("verify", member);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("scores 1 2 2 2 1\n") != std::string::npos);
  CHECK(r.out.find("skewhankel") != std::string::npos);

  const RunResult miss = run_cli("verify --class skewhankel", "2\n01\n00\n");
  CHECK(miss.exit_code == 1);
}

TEST_CASE("apply replays a move file with per-step validation") {
  const std::string member = "3\n010\n001\n100\n";
  const auto ok = write_temp("moves_ok.txt", "T 1 2 3\n");
  const RunResult good = run_cli("apply --class plain --moves " + ok.string(), member);
  CHECK(good.exit_code == 0);
  CHECK(good.out == "3\n001\n100\n010\n");

  // The second application of the same triangle no longer matches.
  const auto bad = write_temp("moves_bad.txt", "T 1 2 3\nT 1 2 3\n");
  const RunResult broken = run_cli("apply --class plain --moves " + bad.string(), member);
  CHECK(broken.exit_code == 4);
  CHECK(broken.err.find("step 1") != std::string::npos);

  const RunResult wrong_kind = run_cli("apply --class hankel --moves " + ok.string(), member);
  CHECK(wrong_kind.exit_code == 2);

  std::filesystem::remove(ok);
  std::filesystem::remove(bad);
}

TEST_CASE("path prints a replayable move path") {
  const auto a = write_temp("path_a.txt", "3\n010\n001\n100\n");
  const auto b = write_temp("path_b.txt", "3\n001\n100\n010\n");
  const RunResult r = run_cli("path --class plain " + a.string() + " " + b.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n010\n001\n100\nT 1 2 3\n");

  const RunResult variant =
      run_cli("path --class hankelloopy " + a.string() + " " + b.string());
  CHECK(variant.exit_code == 2);

  const RunResult mismatch =
      run_cli("path --class plain " + a.string() + " -", "3\n011\n001\n000\n");
  CHECK(mismatch.exit_code == 2);

  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("enum streams members and respects the oracle range") {
  const RunResult two = run_cli("enum --class plain -n 3 --score 1 1 1");
  CHECK(two.exit_code == 0);
  CHECK(two.out == "3\n001\n100\n010\n3\n010\n001\n100\n");

  CHECK(run_cli("enum --class plain -n 99").exit_code == 3);
}

TEST_CASE("census counts members per score vector") {
  const RunResult r = run_cli("census --class skewhankel -n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 2 2 0: 1\n1 1 1 1: 2\n2 0 0 2: 1\n");
}

TEST_CASE("connect reports the switch graph") {
  const RunResult r = run_cli("connect --class skewhankel --score 1 2 2 2 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "vertices 3\nconnected yes\ndiameter 1\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check 1 1 1").exit_code == 2);           // missing --class
  CHECK(run_cli("check --class sideways 1 1").exit_code == 2);
  CHECK(run_cli("verify", "2\n0a\n00\n").exit_code == 2);  // bad matrix text
}

TEST_CASE("outputs are byte-stable across runs") {
  const std::string args = "build --class skewhankel 2 2 4 2 4 2 2";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
}

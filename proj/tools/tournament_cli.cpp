// Command-line frontend: feasibility checks, construction, validation, move
// replay, path finding, and brute-force enumeration over score-constrained
// tournament classes.  All I/O uses the canonical line-oriented text formats
// from the library headers.
//
// Exit codes: 0 success (and "feasible" for check), 1 infeasible, 2 usage or
// format error, 3 enumeration request out of the supported range, 4 move
// pattern violation (the offending 0-based step index is reported).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tournament/connectivity.hpp"
#include "tournament/construct.hpp"
#include "tournament/feasibility.hpp"
#include "tournament/oracle.hpp"

namespace {

using namespace tournament;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Scores come either from trailing arguments or from a one-line file.
ScoreVector scores_from(const std::vector<std::string>& args,
                        const std::string& file) {
  if (!file.empty() && !args.empty())
    throw ParseError("give scores either as arguments or via --file, not both");
  if (!file.empty()) return parse_score_vector(read_file(file));
  if (args.empty()) throw ParseError("no score vector given");
  std::string joined;
  for (const std::string& a : args) {
    if (!joined.empty()) joined.push_back(' ');
    joined += a;
  }
  return parse_score_vector(joined);
}

// Matrices come from a file, or from standard input when the path is empty
// or "-".  Reading from stdin consumes one matrix block so several blocks
// can be streamed through one pipe.
BinaryMatrix matrix_from(const std::string& path) {
  if (path.empty() || path == "-") return read_matrix(std::cin);
  std::istringstream in(read_file(path));
  return read_matrix(in);
}

TournamentClass class_from(const std::string& name) {
  const auto c = parse_class_name(name);
  if (!c) throw ParseError("unknown class \"" + name + "\"");
  return *c;
}

int run_check(const std::string& klass, const std::vector<std::string>& args,
              const std::string& file) {
  const FeasibilityReport report =
      check_feasibility(scores_from(args, file), class_from(klass));
  if (report.feasible) {
    std::cout << "feasible\n";
    return 0;
  }
  std::cout << "infeasible: " << reason_text(report.reason);
  if (report.witness_k) {
    std::cout << " at k=" << *report.witness_k;
    if (report.witness_in_sorted_order) std::cout << " (sorted order)";
  }
  std::cout << "\n";
  return 1;
}

int run_build(const std::string& klass, const std::vector<std::string>& args,
              const std::string& file) {
  std::cout << format_matrix(
      build_tournament(scores_from(args, file), class_from(klass)));
  return 0;
}

int run_verify(const std::string& klass, const std::string& file) {
  const BinaryMatrix m = matrix_from(file);
  const ScoreVector r = score_vector(m);
  std::cout << "order " << m.order() << "\n";
  std::cout << "scores " << format_score_vector(r) << "\n";
  std::cout << "classes";
  for (const TournamentClass c : kAllClasses)
    if (is_member(m, c)) std::cout << ' ' << class_name(c);
  std::cout << "\n";
  if (!klass.empty() && !is_member(m, class_from(klass))) return 1;
  return 0;
}

int run_apply(const std::string& klass, const std::string& moves_file,
              const std::string& file) {
  const std::vector<Move> moves = parse_moves(read_file(moves_file));
  BinaryMatrix m = matrix_from(file);
  apply_moves(m, moves, class_from(klass));
  std::cout << format_matrix(m);
  return 0;
}

int run_path(const std::string& klass, const std::string& from,
             const std::string& to) {
  const BinaryMatrix a = matrix_from(from);
  const BinaryMatrix b = matrix_from(to);
  std::cout << format_path(find_path(a, b, class_from(klass)));
  return 0;
}

int run_enum(const std::string& klass, int n,
             const std::vector<Score>& score_filter) {
  const TournamentClass c = class_from(klass);
  if (score_filter.empty()) {
    for_each_member(n, c,
                    [](const BinaryMatrix& m) { std::cout << format_matrix(m); });
  } else {
    for (const BinaryMatrix& m : members_with_scores(score_filter, c))
      std::cout << format_matrix(m);
  }
  return 0;
}

int run_census(const std::string& klass, int n) {
  for (const auto& [r, count] : score_census(n, class_from(klass)))
    std::cout << format_score_vector(r) << ": " << count << "\n";
  return 0;
}

int run_connect(const std::string& klass, const std::vector<Score>& flag_scores,
                const std::vector<std::string>& args) {
  ScoreVector r = flag_scores;
  if (!args.empty()) {
    if (!r.empty())
      throw ParseError("give scores either as arguments or via --score");
    std::string joined;
    for (const std::string& a : args) {
      if (!joined.empty()) joined.push_back(' ');
      joined += a;
    }
    r = parse_score_vector(joined);
  }
  if (r.empty()) throw ParseError("no score vector given");
  const SwitchGraphReport report =
      switch_graph_connected(r, class_from(klass));
  std::cout << "vertices " << report.vertex_count << "\n";
  std::cout << "connected " << (report.connected ? "yes" : "no") << "\n";
  std::cout << "diameter " << report.diameter << "\n";
  return report.connected ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Score-constrained tournament toolkit"};
  app.require_subcommand(1);

  std::string klass, file, moves_file, from, to;
  std::vector<std::string> score_args;
  std::vector<Score> score_flag;
  int order = 0;

  CLI::App* check = app.add_subcommand("check", "Decide score-vector feasibility");
  check->add_option("--class", klass, "Tournament class")->required();
  check->add_option("--file", file, "Read the score vector from a file");
  check->add_option("scores", score_args, "Score vector entries");

  CLI::App* build = app.add_subcommand("build", "Construct a member with the given scores");
  build->add_option("--class", klass, "Tournament class")->required();
  build->add_option("--file", file, "Read the score vector from a file");
  build->add_option("scores", score_args, "Score vector entries");

  CLI::App* verify = app.add_subcommand("verify", "Report score vector and class memberships of a matrix");
  verify->add_option("--class", klass, "Require membership in this class");
  verify->add_option("--file", file, "Read the matrix from a file (default: stdin)");

  CLI::App* apply = app.add_subcommand("apply", "Replay a move file against a matrix");
  apply->add_option("--class", klass, "Tournament class")->required();
  apply->add_option("--moves", moves_file, "File with one move per line")->required();
  apply->add_option("--file", file, "Read the matrix from a file (default: stdin)");

  CLI::App* path = app.add_subcommand("path", "Find a switch path between two members");
  path->add_option("--class", klass, "Tournament class")->required();
  path->add_option("from", from, "First matrix file, or - for stdin");
  path->add_option("to", to, "Second matrix file, or - for stdin");

  CLI::App* enumerate = app.add_subcommand("enum", "Stream every member of a class at one order");
  enumerate->add_option("--class", klass, "Tournament class")->required();
  enumerate->add_option("-n,--order", order, "Matrix order")->required();
  enumerate->add_option("--score", score_flag, "Keep only members with this score vector");

  CLI::App* census = app.add_subcommand("census", "Count members per score vector");
  census->add_option("--class", klass, "Tournament class")->required();
  census->add_option("-n,--order", order, "Matrix order")->required();

  CLI::App* connect = app.add_subcommand("connect", "Report switch-graph connectivity for one score vector");
  connect->add_option("--class", klass, "Tournament class")->required();
  connect->add_option("--score", score_flag, "Score vector entries");
  connect->add_option("scores", score_args, "Score vector entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(klass, score_args, file);
    if (*build) return run_build(klass, score_args, file);
    if (*verify) return run_verify(klass, file);
    if (*apply) return run_apply(klass, moves_file, file);
    if (*path) return run_path(klass, from, to);
    if (*enumerate) return run_enum(klass, order, score_flag);
    if (*census) return run_census(klass, order);
    if (*connect) return run_connect(klass, score_flag, score_args);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PatternError& e) {
    if (e.step >= 0)
      std::cerr << "error: step " << e.step << ": " << e.what() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "permsplit/graph.hpp"
#include "permsplit/permutation.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// stdout only; stderr stays on the test's own stream unless redirected in cmd
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PERMSPLIT_CLI_PATH) + " " + args;
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_graph(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("plan output") {
  const RunResult r7 = run_cli("plan --n 7 2>/dev/null");
  CHECK(r7.exit_code == 0);
  CHECK(r7.out == "n=7 kind=subgroup_transversal k=4 l=3 |A|=70 |B|=72 ratio=1.01419\n");

  const RunResult r2 = run_cli("plan --n 2 2>/dev/null");
  CHECK(r2.out.find("ratio=1.41421") != std::string::npos);

  const RunResult r28 = run_cli("plan --n 28 2>/dev/null");
  CHECK(r28.out.find("ratio=1.28833") != std::string::npos);

  const RunResult bad = run_cli("plan --n 0 2>/dev/null");
  CHECK(bad.exit_code != 0);

  const RunResult json = run_cli("plan --n 7 --json 2>/dev/null");
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["k"] == 4);
  CHECK(parsed["l"] == 3);
  CHECK(parsed["size_a"] == "70");
  CHECK(parsed["size_b"] == "72");
}

TEST_CASE("enum output") {
  const RunResult transversal = run_cli("enum --n 3 --which transversal 2>/dev/null");
  CHECK(transversal.exit_code == 0);
  CHECK(transversal.out == "1 2 3\n1 3 2\n3 1 2\n");

  const RunResult subgroup = run_cli("enum --n 4 --which subgroup 2>/dev/null");
  CHECK(subgroup.exit_code == 0);
  CHECK(std::count(subgroup.out.begin(), subgroup.out.end(), '\n') == 4);

  CHECK(run_cli("enum --n 1 --which subgroup 2>/dev/null").out == "1\n");
  CHECK(run_cli("enum --n 1 --which transversal 2>/dev/null").out == "1\n");

  const RunResult limited = run_cli("enum --n 5 --which transversal --limit 3 2>/dev/null");
  const RunResult full = run_cli("enum --n 5 --which transversal 2>/dev/null");
  CHECK(std::count(limited.out.begin(), limited.out.end(), '\n') == 3);
  CHECK(full.out.substr(0, limited.out.size()) == limited.out);

  const RunResult zero = run_cli("enum --n 3 --which transversal --limit 0 2>/dev/null");
  CHECK(zero.exit_code != 0);

  // every emitted line parses as a permutation of the right degree
  std::istringstream lines(full.out);
  std::string line;
  while (std::getline(lines, line))
    CHECK(permsplit::Permutation::parse_line(line).degree() == 5);
}

TEST_CASE("table output") {
  const RunResult table = run_cli("table --max-n 4 2>/dev/null");
  CHECK(table.exit_code == 0);
  CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 4);
  CHECK(table.out.find("n=2 k=1 l=0 order=1 ratio=1.41421") != std::string::npos);

  const RunResult deep = run_cli("table --max-n 28 2>/dev/null");
  CHECK(deep.out.find("n=28 k=17 l=2 order=711374856192000 ratio=1.28833") != std::string::npos);

  const RunResult json = run_cli("table --max-n 3 --json 2>/dev/null");
  std::istringstream lines(json.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto parsed = nlohmann::json::parse(line);
    CHECK(parsed.contains("ratio"));
    CHECK(parsed.contains("avg"));
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("gi exit codes and verdicts") {
  const auto k3 = write_graph("permsplit_k3.graph", "3\n1 2\n2 3\n1 3\n");
  const auto p3 = write_graph("permsplit_p3.graph", "3\n1 2\n2 3\n");
  const auto c7a = write_graph("permsplit_c7a.graph", "7\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 1\n");
  const auto c7b = write_graph("permsplit_c7b.graph", "7\n3 5\n5 1\n1 6\n6 2\n2 7\n7 4\n4 3\n");

  const RunResult no_subcommand = run_cli("2>/dev/null");
  CHECK(no_subcommand.exit_code > 2);

  const RunResult found = run_cli("gi " + c7a.string() + " " + c7b.string() + " 2>/dev/null");
  CHECK(found.exit_code == 0);
  CHECK(found.out.find("VERIFIED") != std::string::npos);
  {
    const std::string witness_line = found.out.substr(0, found.out.find('\n'));
    const permsplit::Permutation witness = permsplit::Permutation::parse_line(witness_line);
    const permsplit::AdjacencyMatrix m = permsplit::AdjacencyMatrix::load_file(c7a.string());
    const permsplit::AdjacencyMatrix n = permsplit::AdjacencyMatrix::load_file(c7b.string());
    CHECK(permsplit::ConjugationAction(7).apply(witness, m) == n);
  }

  const RunResult none = run_cli("gi " + k3.string() + " " + p3.string() + " 2>/dev/null");
  CHECK(none.exit_code == 1);
  CHECK(none.out == "non-isomorphic\n");

  const RunResult unknown = run_cli("gi " + k3.string() + " " + p3.string() +
                                    " --randomized --samples 3 --seed 4 2>/dev/null");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.out == "unknown (randomized)\n");

  const auto broken = write_graph("permsplit_broken.graph", "3\n1 2\n1 9\n");
  const RunResult parse_error = run_cli("gi " + broken.string() + " " + p3.string() + " 2>&1");
  CHECK(parse_error.exit_code > 2);
  CHECK(parse_error.out.find("line 3") != std::string::npos);

  const RunResult starved =
      run_cli("gi " + k3.string() + " " + p3.string() + " --budget-bytes 1 2>&1");
  CHECK(starved.exit_code > 2);

  const RunResult json = run_cli("gi " + c7a.string() + " " + c7b.string() + " --json 2>/dev/null");
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["outcome"] == "found");
  CHECK(parsed["verified"] == true);
}

TEST_CASE("identical invocations are byte identical") {
  for (const std::string& args :
       {std::string("plan --n 12"), std::string("enum --n 6 --which transversal --limit 50"),
        std::string("table --max-n 10 --json")}) {
    const RunResult first = run_cli(args + " 2>/dev/null");
    const RunResult second = run_cli(args + " 2>/dev/null");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
  }

  const auto g1 = write_graph("permsplit_det1.graph", "6\n1 2\n2 3\n3 4\n4 5\n5 6\n1 4\n");
  const auto g2 = write_graph("permsplit_det2.graph", "6\n2 5\n5 1\n1 6\n6 3\n3 4\n2 6\n");
  const std::string gi_args = "gi " + g1.string() + " " + g2.string();
  const RunResult first = run_cli(gi_args + " 2>/dev/null");
  const RunResult second = run_cli(gi_args + " 2>/dev/null");
  const RunResult threaded = run_cli(gi_args + " --threads 4 2>/dev/null");
  CHECK(first.out == second.out);
  CHECK(first.out == threaded.out);
  CHECK(first.exit_code == threaded.exit_code);
}

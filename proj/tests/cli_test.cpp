// Drives the installed CLI binary (path in $TURAEV_CLI) through a shell and
// checks output text, JSON round-trips, and the exit-code contract:
// 0 success, 1 identity/verification failure, 2 input error.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "turaev/polynomial.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* path = std::getenv("TURAEV_CLI");
  REQUIRE_MESSAGE(path != nullptr, "TURAEV_CLI must point at the CLI binary");
  return path;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  for (;;) {
    std::size_t n = std::fread(buf, 1, sizeof buf, pipe);
    if (n == 0) break;
    out.append(buf, n);
  }
  int status = pclose(pipe);
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = out;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("bracket command and the exit-code contract") {
  RunResult unknot = run("bracket unknot --method statesum");
  CHECK(unknot.exit_code == 0);
  CHECK(unknot.out == "1\n");

  // The empty PD code is the unknot too.
  RunResult empty = run("bracket '' --method tree");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "1\n");

  RunResult all = run("bracket figure-eight");
  CHECK(all.exit_code == 0);
  CHECK(contains(all.out, "statesum: A^-8 - A^-4 + 1 - A^4 + A^8"));
  CHECK(contains(all.out, "tree:     A^-8 - A^-4 + 1 - A^4 + A^8"));
  CHECK(contains(all.out, "brt:      A^-8 - A^-4 + 1 - A^4 + A^8"));
  CHECK(contains(all.out, "agreement: ok"));

  RunResult literal = run("bracket 'X[1,2,3,4];X[2,1,4,3]' --method brt");
  CHECK(literal.exit_code == 0);
  CHECK(literal.out == "-A^-4 - A^4\n");

  CHECK(run("bracket 'X[1,2]'").exit_code == 2);
  CHECK(run("bracket 'garbage'").exit_code == 2);
  CHECK(run("bracket figure-eight --method nonsense").exit_code == 2);
  CHECK(run("bracket figure-eight --limit 3").exit_code == 2);
  CHECK(run("nonsense-command").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("jones command") {
  RunResult fig8 = run("jones figure-eight");
  CHECK(fig8.exit_code == 0);
  CHECK(fig8.out == "t^-2 - t^-1 + 1 - t + t^2\n");

  // Even-component links have no integer t-form; the A-form is flagged.
  RunResult hopf = run("jones hopf-link");
  CHECK(hopf.exit_code == 0);
  CHECK(hopf.out == "A-form: -A^-10 - A^-2\n");

  RunResult json = run("jones trefoil-right --json");
  CHECK(json.exit_code == 0);
  turaev::Json j = turaev::Json::parse(json.out);
  CHECK(j["variable"] == "t");
  CHECK(j["jones"] == "t + t^3 - t^4");
}

TEST_CASE("genus command") {
  RunResult fig8 = run("genus figure-eight");
  CHECK(fig8.exit_code == 0);
  CHECK(contains(fig8.out, "state circles: A=3 B=3"));
  CHECK(contains(fig8.out, "turaev genus: 0"));
  CHECK(contains(fig8.out, "adequate: A=yes B=yes"));
  CHECK(contains(fig8.out, "certified: yes"));

  // Only B-adequate: the genus of the diagram is reported, but equality for
  // the underlying link is not certified.
  RunResult pretzel = run("genus pretzel-3m23");
  CHECK(pretzel.exit_code == 0);
  CHECK(contains(pretzel.out, "turaev genus: 1"));
  CHECK(contains(pretzel.out, "adequate: A=no B=yes"));
  CHECK(contains(pretzel.out, "certified: no"));

  CHECK(run("genus split-kinks").exit_code == 2);
}

TEST_CASE("ribbon and quasitrees commands") {
  RunResult trefoil = run("ribbon trefoil-right");
  CHECK(trefoil.exit_code == 0);
  CHECK(contains(trefoil.out, "sigma0: "));
  CHECK(contains(trefoil.out, "genus=0"));
  CHECK(contains(trefoil.out, "q: 3"));

  RunResult fig8 = run("ribbon figure-eight --json");
  CHECK(fig8.exit_code == 0);
  turaev::Json j = turaev::Json::parse(fig8.out);
  CHECK(j["vertices"] == 3);
  CHECK(j["edges"] == 4);
  CHECK(j["faces"] == 3);
  CHECK(j["genus"] == 0);
  CHECK(j["q"] == "5");
  CHECK(j["quasi_trees"] == 5);

  RunResult qt = run("quasitrees pretzel-3m23");
  CHECK(qt.exit_code == 0);
  CHECK(contains(qt.out, "quasi-trees: 21"));
  CHECK(contains(qt.out, "genus 0: "));
  CHECK(contains(qt.out, "genus 1: "));

  // Split diagrams have no connected all-A ribbon graph.
  CHECK(run("ribbon split-kinks").exit_code == 2);
  CHECK(run("quasitrees split-kinks").exit_code == 2);
}

TEST_CASE("verify command across the corpus") {
  RunResult all = run("verify corpus");
  CHECK(all.exit_code == 0);
  CHECK(contains(all.out, "verified 18 diagrams: all pass"));
  CHECK(contains(all.out, "figure-eight"));

  RunResult json = run("verify corpus --json");
  CHECK(json.exit_code == 0);
  turaev::Json j = turaev::Json::parse(json.out);
  CHECK(j["pass"] == true);
  CHECK(j["reports"].size() == 18);
  CHECK(j["turaev_genus_upper"] == 0);

  // Reports are sorted by name and the running genus bound never increases.
  std::string prev_name;
  int prev_bound = -1;
  for (const auto& report : j["reports"]) {
    std::string name = report["name"];
    CHECK(prev_name < name);
    prev_name = name;
    CHECK(report["pass"] == true);
    if (report["turaev_genus_upper"].is_null()) continue;
    int bound = report["turaev_genus_upper"];
    if (prev_bound >= 0) CHECK(bound <= prev_bound);
    prev_bound = bound;
  }
  CHECK(prev_bound == 0);
}

TEST_CASE("verify edge cases") {
  RunResult empty = run("verify");
  CHECK(empty.exit_code == 0);
  CHECK(contains(empty.out, "verified 0 diagrams: all pass"));

  RunResult control = run("verify trefoil-right --negative-control");
  CHECK(control.exit_code == 1);
  CHECK(contains(control.out, "FAIL trefoil-right: bracket-methods-agree"));
  CHECK(contains(control.out, "FAIL trefoil-right: resolution-tree"));

  std::string path = "cli_test_codes.txt";
  {
    std::ofstream f(path);
    f << "# two diagrams, one per line\n"
      << "X[1,2,3,4];X[2,1,4,3]  # hopf link\n"
      << "\n"
      << "X[1,1,2,2]\n";
  }
  RunResult file = run("verify --file " + path);
  CHECK(file.exit_code == 0);
  CHECK(contains(file.out, "input-001"));
  CHECK(contains(file.out, "input-002"));
  CHECK(contains(file.out, "verified 2 diagrams: all pass"));
  std::remove(path.c_str());

  CHECK(run("verify --file no-such-file.txt").exit_code == 2);
}

TEST_CASE("json output round-trips byte-identically") {
  for (const char* args : {"verify figure-eight pretzel-3m23 --json", "corpus list --json",
                           "genus torus-3-4 --json", "quasitrees trefoil-left --json",
                           "bracket 5_2 --json"}) {
    CAPTURE(args);
    RunResult r = run(args);
    CHECK(r.exit_code == 0);
    turaev::Json parsed = turaev::Json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("outer face flag re-roots the embedding without changing invariants") {
  RunResult base = run("bracket figure-eight --method tree");
  for (int arc = 1; arc <= 8; ++arc) {
    CAPTURE(arc);
    RunResult rerooted = run("bracket figure-eight --method tree --outer-face " +
                             std::to_string(arc));
    CHECK(rerooted.exit_code == 0);
    CHECK(rerooted.out == base.out);
  }
  CHECK(run("bracket figure-eight --outer-face 99").exit_code == 2);
}

TEST_CASE("corpus list") {
  RunResult list = run("corpus list");
  CHECK(list.exit_code == 0);
  CHECK(contains(list.out, "torus-3-4"));
  CHECK(contains(list.out, "split-kinks"));
  int lines = 0;
  for (char c : list.out) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 19);  // header plus 18 entries

  RunResult json = run("corpus list --json");
  CHECK(json.exit_code == 0);
  turaev::Json j = turaev::Json::parse(json.out);
  CHECK(j.size() == 18);
  CHECK(j[0]["name"] == "unknot");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "valmat/json_io.hpp"
#include "valmat/valfn.hpp"

#ifndef VALMAT_CLI_PATH
#error "VALMAT_CLI_PATH must be defined"
#endif

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(VALMAT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/valmat_cli_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("check exit codes") {
  using namespace valmat;
  // the worked transversal table passes
  ValMat f(4, 2);
  f.set(ElemSet{0, 2}, ExtRat(0));
  f.set(ElemSet{0, 3}, ExtRat(0));
  f.set(ElemSet{1, 2}, ExtRat(1));
  f.set(ElemSet{1, 3}, ExtRat(1));
  f.set(ElemSet{2, 3}, ExtRat(1));
  std::string good = temp_file("good.json", valmat_to_json(f));
  CHECK(run_cli("check " + good + " --kind valmat") == 0);

  // non-exchange basis family fails with exit 1
  std::string bad = temp_file("bad.json", R"({"kind":"explicit","n":4,"bases":[[0,1],[2,3]]})");
  CHECK(run_cli("check " + bad + " --kind matroid") == 1);

  // malformed JSON is an I/O error
  std::string broken = temp_file("broken.json", "{nope");
  CHECK(run_cli("check " + broken + " --kind valmat") == 2);
  CHECK(run_cli("check /nonexistent/file --kind valmat") == 2);
}

TEST_CASE("family emission and re-checking") {
  std::string out = "/tmp/valmat_cli_family.json";
  std::string cmd = std::string(VALMAT_CLI_PATH) + " family --n 3 --seed 7 --emit valmat > " + out;
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(run_cli("check " + out + " --kind valmat") == 0);
  std::string b0 = "/tmp/valmat_cli_b0.json";
  REQUIRE(std::system((std::string(VALMAT_CLI_PATH) + " family --n 8 --emit b0 > " + b0).c_str()) == 0);
  CHECK(run_cli("check " + b0 + " --kind robust") == 0);
  std::string hnat = "/tmp/valmat_cli_hnat.json";
  REQUIRE(std::system((std::string(VALMAT_CLI_PATH) + " family --n 3 --emit hnat > " + hnat).c_str()) == 0);
  CHECK(run_cli("vgm-check " + hnat) == 0);
}

TEST_CASE("induce and dual-cert") {
  using namespace valmat;
  WeightedBipGraph g(4, 2);
  g.add_edge(0, 0, Rat(0));
  g.add_edge(1, 0, Rat(1));
  g.add_edge(2, 0, Rat(1));
  g.add_edge(2, 1, Rat(0));
  g.add_edge(3, 1, Rat(0));
  RMinorRep rep(g, Matroid::free_matroid(2));
  std::string rep_path = temp_file("rep.json", rminor_to_json(rep));
  CHECK(run_cli("induce " + rep_path + " --table") == 0);
  CHECK(run_cli("induce " + rep_path + " --eval 1,2") == 0);
  CHECK(run_cli("rado-check " + rep_path + " --lemma rado") == 0);
  CHECK(run_cli("rado-check " + rep_path + " --lemma uncrossing") == 0);

  std::string graph_path = temp_file("graph.json", graph_to_json(g));
  std::string matroid_path = temp_file("matroid.json", matroid_to_json(Matroid::free_matroid(2)));
  CHECK(run_cli("dual-cert " + graph_path + " " + matroid_path) == 0);
}

TEST_CASE("suite dispatch") {
  CHECK(run_cli("suite transversal") == 0);
  CHECK(run_cli("suite snowflake --seed 3") == 0);
  CHECK(run_cli("suite no-such-suite") == 2);
}

TEST_CASE("seeded output is byte-identical") {
  auto capture = [&](const std::string& args, const std::string& out) {
    std::string cmd = std::string(VALMAT_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = capture("family --n 5 --seed 7 --emit valmat", "/tmp/valmat_cli_det_a.json");
  std::string b = capture("family --n 5 --seed 7 --emit valmat", "/tmp/valmat_cli_det_b.json");
  CHECK(a == b);
  CHECK_FALSE(a.empty());
  std::string c = capture("suite solver --seed 5", "/tmp/valmat_cli_det_c.txt");
  std::string d = capture("suite solver --seed 5", "/tmp/valmat_cli_det_d.txt");
  CHECK(c == d);
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "reglat/cli.hpp"
#include "reglat/io.hpp"

using namespace reglat;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content = "") {
    path = std::string("cli_test_") + name;
    if (!content.empty()) {
      std::ofstream f(path);
      f << content;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("gen round trip and info on the Boolean poset") {
  TempFile f("b2.rel");
  RunResult g = run({"gen", "b2", "-o", f.path});
  REQUIRE(g.code == 0);
  Relation back = load_relation_file(f.path);
  CHECK(back == generate("b2").rel());

  RunResult info = run({"info", f.path});
  REQUIRE(info.code == 0);
  CHECK(info.out.find("reg_size: 20") != std::string::npos);
  CHECK(info.out.find("clop_size: 18") != std::string::npos);
  CHECK(info.out.find("square_free: false") != std::string::npos);

  RunResult sinfo = run({"--format", "structured", "info", f.path});
  REQUIRE(sinfo.code == 0);
  auto doc = nlohmann::json::parse(sinfo.out);
  CHECK(doc["reg_size"] == 20);
  CHECK(doc["clop_size"] == 18);
  CHECK(doc["square_free"] == false);

  // byte-identical reruns
  RunResult again = run({"info", f.path});
  CHECK(again.out == info.out);
}

TEST_CASE("exit codes") {
  TempFile bad("bad.rel", "relation\nelements 3\npair 1 2\npair 2 3\n");
  CHECK(run({"info", bad.path}).code == 1);          // not transitive
  CHECK(run({"--close", "info", bad.path}).code == 0);

  TempFile full3("full3.rel");
  REQUIRE(run({"gen", "full:3", "-o", full3.path}).code == 0);
  CHECK(run({"--cap", "10", "info", full3.path}).code == 2);

  CHECK(run({"info", "no_such_file.rel"}).code == 1);
  CHECK(run({"gen", "wat:9", "-o", "-"}).code == 1);
  CHECK(run({"bip", "9"}).code == 2);
}

TEST_CASE("enumerate and export") {
  TempFile f("b2e.rel");
  REQUIRE(run({"gen", "b2", "-o", f.path}).code == 0);

  RunResult reg = run({"enumerate", f.path, "--what", "reg"});
  REQUIRE(reg.code == 0);
  int lines = 0;
  for (char ch : reg.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 20);

  RunResult clop = run({"enumerate", f.path, "--what", "clop"});
  REQUIRE(clop.code == 0);
  lines = 0;
  for (char ch : clop.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 18);

  RunResult jirr = run({"enumerate", f.path, "--what", "jirr"});
  REQUIRE(jirr.code == 0);
  lines = 0;
  for (char ch : jirr.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 8);

  RunResult dot = run({"export-dot", f.path, "--what", "hasse", "--mark-nonclopen"});
  REQUIRE(dot.code == 0);
  int nodes = 0, marked = 0;
  std::istringstream in(dot.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("[label=") != std::string::npos) ++nodes;
    if (line.find("peripheries=2") != std::string::npos) ++marked;
  }
  CHECK(nodes == 20);
  CHECK(marked == 2);

  RunResult drel = run({"export-dot", f.path, "--what", "drel"});
  REQUIRE(drel.code == 0);
  CHECK(drel.out.find("digraph drel") != std::string::npos);
}

TEST_CASE("theorem checks through the front end") {
  TempFile f("c3.rel");
  REQUIRE(run({"gen", "chain:3", "-o", f.path}).code == 0);
  RunResult r = run({"check", f.path, "--theorem", "sqfree"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
  RunResult r2 = run({"--format", "structured", "check", f.path, "--theorem", "regesd"});
  REQUIRE(r2.code == 0);
  auto doc = nlohmann::json::parse(r2.out);
  CHECK(doc["verdict"] == true);
}

TEST_CASE("congruence and subdirect reports") {
  TempFile f("c3b.rel");
  REQUIRE(run({"gen", "chain:3", "-o", f.path}).code == 0);
  RunResult cg = run({"congruences", f.path});
  REQUIRE(cg.code == 0);
  CHECK(cg.out.find("congruence_count") != std::string::npos);
  RunResult sd = run({"subdirect", f.path});
  REQUIRE(sd.code == 0);
  CHECK(sd.out.find("subdirect_injective: true") != std::string::npos);

  TempFile dot("classes.dot");
  REQUIRE(run({"congruences", f.path, "--dot", dot.path}).code == 0);
  std::ifstream in(dot.path);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("digraph conclasses") != std::string::npos);

  RunResult dr = run({"drel", f.path});
  REQUIRE(dr.code == 0);
  CHECK(dr.out.find("cycle_free: true") != std::string::npos);
}

TEST_CASE("bipartition subcommand") {
  RunResult r = run({"bip", "3", "--wagner", "--con-shape"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("size: 74") != std::string::npos);
  CHECK(r.out.find("wagner: 74") != std::string::npos);
  CHECK(r.out.find("wagner_matches_enumeration: true") != std::string::npos);
  CHECK(r.out.find("con_shape_ok: true") != std::string::npos);
  CHECK(r.out.find("congruence_count: 4097") != std::string::npos);

  RunResult f = run({"bip", "3", "--factors"});
  REQUIRE(f.code == 0);
  CHECK(f.out.find("factor_k0: size=24 instances=6 self_dual=true") != std::string::npos);
  CHECK(f.out.find("factor_k1: size=21 instances=6 self_dual=true") != std::string::npos);
}

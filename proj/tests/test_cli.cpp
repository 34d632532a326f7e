#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SEPGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0)
    out.append(buf, n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/") + name;
  std::ofstream(path) << text;
  return path;
}

const char* kEmn23 = "vertex v\nvertex w\n"
                     "edge a1 v w\nedge a2 v w\nedge a3 v w\n"
                     "edge b1 v w\nedge b2 v w\n"
                     "block v X a1 a2 a3\nblock v Y b1 b2\n";

} // namespace

TEST_CASE("validate exit codes") {
  std::string good = write_temp("sepgraph_good.txt", kEmn23);
  RunResult r = run("validate " + good);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5 edges") != std::string::npos);

  std::string bad = write_temp("sepgraph_bad.txt",
                               "vertex v\nedge e v v\nedge f v v\nblock v X e\n");
  CHECK(run("validate " + bad).exit_code == 2);
  CHECK(run("validate /tmp/sepgraph_does_not_exist.txt").exit_code == 1);
  std::string syn = write_temp("sepgraph_syn.txt", "vretex v\n");
  CHECK(run("validate " + syn).exit_code == 1);
}

TEST_CASE("ktheory command output") {
  RunResult r = run("--builtin emn:2,3 ktheory");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("K0 = 0") != std::string::npos);
  CHECK(r.out.find("K1 = 0") != std::string::npos);

  r = run("--builtin emn:2,2 ktheory");
  CHECK(r.out.find("K0 = Z") != std::string::npos);
  CHECK(r.out.find("K1 = Z") != std::string::npos);

  r = run("--builtin rose:3 ktheory");
  CHECK(r.out.find("K0 = Z/2") != std::string::npos);
  CHECK(r.out.find("K1 = 0") != std::string::npos);
}

TEST_CASE("json reports carry schema and digest") {
  RunResult r = run("--json --builtin emn:2,3 ktheory");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "ktheory");
  CHECK(doc["input_digest"].get<std::string>().size() == 16);
  CHECK(doc["result"]["k0"]["group"] == "0");
  CHECK(doc["result"]["k1"]["rank"] == 0);
  CHECK(doc["metadata"]["block_order"][0] == "X");

  // identical invocations give identical documents
  CHECK(run("--json --builtin emn:2,3 ktheory").out == r.out);
}

TEST_CASE("nf and expect commands") {
  RunResult r = run("--builtin emn:2,3 nf \"b2 b2^\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "v - b1 b1^\n");
  CHECK(run("--builtin emn:2,3 expect \"a1 a1^ b1 b1^\"").out == "(1/6) v\n");
  CHECK(run("--builtin emn:2,3 expect \"a1 b1^\"").out == "0\n");
  CHECK(run("--builtin emn:2,3 nf \"zz\"").exit_code == 2);
  CHECK(run("--builtin emn:2,3 nf \"a1 +\"").exit_code == 1);
  // the product (a3 b1^)(b1 a3^) contracts and then expands the pivot pair,
  // two rule applications in one reduction
  CHECK(run("--step-limit 1 --builtin emn:2,3 nf \"(a3 b1^)(b1 a3^)\"").exit_code == 3);
}

TEST_CASE("hsat and quotient commands") {
  RunResult r = run("--builtin hbk:2,2,2,2 hsat list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("{w1}") != std::string::npos);
  CHECK(r.out.find("{w2}") != std::string::npos);
  CHECK(run("--builtin emn:2,3 hsat close v").out == "closure: {v, w}\n");

  r = run("--builtin hbk:2,2,2,2 quotient -H w1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("edge c1 v w2") != std::string::npos);
  CHECK(r.out.find("w1") == std::string::npos);
  CHECK(run("--builtin emn:2,3 quotient -H w").exit_code == 2);
  // empty set: quotient is the graph itself
  CHECK(run("--builtin emn:2,3 quotient").out == run("builtin emn:2,3").out);
}

TEST_CASE("monoid commands") {
  CHECK(run("--builtin emn:1,2 monoid eq a_w \"2 a_w\" --depth 4").out == "Yes\n");
  CHECK(run("--builtin emn:2,3 monoid group").out.substr(0, 2) == "0\n");
  RunResult r = run("--builtin emn:2,2 monoid group");
  CHECK(r.out.substr(0, 2) == "Z\n");
}

TEST_CASE("builtin command emits parseable files") {
  RunResult r = run("builtin emn:2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == kEmn23);
  CHECK(run("builtin rose:1").out.find("edge e1 v v") != std::string::npos);
  CHECK(run("builtin hbk:2,2,2,2").out.find("block v X a1 a2 c1 c2") !=
        std::string::npos);
  CHECK(run("builtin nosuch:1").exit_code == 2);
  CHECK(run("builtin emn:9").exit_code == 2);
}

TEST_CASE("auto-trivial flag") {
  std::string path = write_temp("sepgraph_auto.txt",
                                "vertex v\nedge e v v\nedge f v v\n");
  CHECK(run("validate " + path).exit_code == 2);
  RunResult r = run("--auto-trivial validate " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1 blocks") != std::string::npos);
}

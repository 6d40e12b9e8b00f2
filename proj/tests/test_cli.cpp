#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the binary through the shell; stderr is folded into the output.
Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" MPC_BINARY "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string model(const std::string& name) { return std::string("'") + MPC_MODELS_DIR + "/" + name + "'"; }

// A scratch term file removed on destruction.
struct Scratch {
  fs::path path;
  explicit Scratch(const std::string& text) {
    path = fs::temp_directory_path() / ("mpc_cli_" + std::to_string(getpid()) + "_" + std::to_string(std::rand()) + ".mpc");
    std::ofstream(path) << text;
  }
  ~Scratch() { fs::remove(path); }
  std::string arg() const { return "'" + path.string() + "'"; }
};

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

const char* kTerms =
    "let E = <a,1>.0;\n"
    "let Two = <a,1>.0 + <a,1>.0;\n"
    "let Merged = <a,2>.0;\n"
    "let U = rec Y : Y;\n"
    "let L = rec X : <tau,1>.X;\n"
    "let D = rec X : <tau,1>.X + <a,1>.0;\n"
    "let Long = <tau,2>.<tau,3>.0 |[]| <c,4>.0;\n"
    "let Short = <tau,6/5>.0 |[]| <c,4>.0;\n"
    "let Sync = (rec X : <tau,1>.<b,2>.X) |[b]| (rec Y : <a,1>.<b,3>.Y);\n";

}  // namespace

TEST_CASE("lts prints states and transitions") {
  Scratch f(kTerms);
  auto r = run("lts " + f.arg() + " Two");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "lmts 2 1 0"));
  CHECK(contains(r.out, "\"a,1*2\""));
  CHECK(contains(r.out, "state 0 <a,1>.0 + <a,1>.0"));
}

TEST_CASE("input errors exit with 1") {
  Scratch f(kTerms);
  auto unguarded = run("lts " + f.arg() + " U");
  CHECK(unguarded.code == 1);
  CHECK(contains(unguarded.out, "not guarded"));
  CHECK(run("lts " + f.arg() + " Missing").code == 1);
  CHECK(run("lts /nonexistent/terms.mpc E").code == 1);
  CHECK(run("check -r nonsense " + f.arg() + " E E").code == 1);
  Scratch broken("let Bad = <a,1>.;\n");
  CHECK(run("lts " + broken.arg() + " Bad").code == 1);
}

TEST_CASE("bounds exit with 2") {
  Scratch f(kTerms);
  auto r = run("--state-bound 1 lts " + f.arg() + " E");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "bound of 1"));
  CHECK(run("lts " + f.arg() + " E --state-bound 2").code == 0);
}

TEST_CASE("equivalence verdicts and exit codes") {
  Scratch f(kTerms);
  CHECK(run("check " + f.arg() + " Two Merged").code == 0);
  CHECK(run("check -r strong " + f.arg() + " E Merged").code == 3);
  auto g = run("check -r gweak " + f.arg() + " Long Short");
  CHECK(g.code == 0);
  CHECK(contains(g.out, "gweak related"));
  CHECK(run("check -r weak " + f.arg() + " Long Short").code == 3);
  auto d = run("check -r weak " + f.arg() + " D E");
  CHECK(d.code == 4);
  CHECK(contains(d.out, "divergent"));
}

TEST_CASE("divergence report") {
  Scratch f(kTerms);
  auto r = run("divergence " + f.arg() + " D");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "divergent yes"));
  CHECK(contains(run("divergence " + f.arg() + " E").out, "divergent no"));
}

TEST_CASE("steady state and reducible chains") {
  Scratch f(kTerms);
  auto loop = run("steady " + f.arg() + " L");
  CHECK(loop.code == 0);
  CHECK(contains(loop.out, "state 0 pi = 1/1"));
  auto dead = run("steady " + f.arg() + " E");
  CHECK(dead.code == 5);
  CHECK(contains(dead.out, "not irreducible"));
}

TEST_CASE("exactness verdicts on the model corpus") {
  auto inexact = run("--sync min exactness " + model("exactness.mpc") + " P1 P2");
  CHECK(inexact.code == 3);
  CHECK(contains(inexact.out, "exact no"));
  CHECK(contains(inexact.out, "guard original violated"));
  auto exact = run("exactness " + model("exactness.mpc") + " P3 P4 --sync min");
  CHECK(exact.code == 0);
  CHECK(contains(exact.out, "exact yes"));
  CHECK(contains(exact.out, "guard original satisfied"));
}

TEST_CASE("synchronization operator from the environment") {
  Scratch f(kTerms);
  auto product = run("--json lts " + f.arg() + " Sync");
  auto min = run("--json lts " + f.arg() + " Sync", "MPC_SYNC=min");
  auto flag = run("--json --sync min lts " + f.arg() + " Sync", "MPC_SYNC=product");
  REQUIRE(product.code == 0);
  REQUIRE(min.code == 0);
  CHECK(min.out == flag.out);
  CHECK(product.out != min.out);
  CHECK(contains(product.out, "\"b\""));
  CHECK(run("lts " + f.arg() + " E", "MPC_SYNC=bogus").code == 1);
}

TEST_CASE("json output matches the text output") {
  auto text = run("--sync min steady " + model("exactness.mpc") + " P2");
  auto json = run("--sync min --json steady " + model("exactness.mpc") + " P2");
  REQUIRE(text.code == 0);
  REQUIRE(json.code == 0);
  auto doc = nlohmann::json::parse(json.out);
  REQUIRE(doc.is_array());
  for (const auto& row : doc) {
    std::string line = "state " + std::to_string(row["state"].get<int>()) + " pi = " +
                       row["pi"].get<std::string>();
    CHECK(contains(text.out, line));
  }

  Scratch f(kTerms);
  auto verdict = nlohmann::json::parse(run("--json check -r gweak " + f.arg() + " Long Short").out);
  CHECK(verdict["relation"] == "gweak");
  CHECK(verdict["related"] == true);
}

TEST_CASE("output is deterministic") {
  for (const char* cmd : {"families", "lts"}) {
    std::string args = std::string("--sync min ") + cmd + " " + model("exactness.mpc") + " P1";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

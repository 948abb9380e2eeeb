#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

// End-to-end tests driving the installed binary exactly as a user would.

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(GYRO_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::ofstream f(name, std::ios::binary | std::ios::trunc);
  REQUIRE(f.good());
  f << text;
  f.close();
  return name;
}

const std::string kZ4 = "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n";
const std::string kKlein = "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
const std::string kBroken = "4\n0 1 2 3\n1 2 2 0\n2 3 0 1\n3 0 1 2\n";
const std::string kGarbled = "2\n0 x\n1 0\n";

}  // namespace

TEST_CASE("verify accepts the built-in table") {
  const RunResult r = run("verify --k16");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "order 16"));
  CHECK(contains(r.out, "axioms: PASS"));
}

TEST_CASE("verify reports witnesses and exits 1 on a broken table") {
  const std::string path = write_file("cli_broken.tbl", kBroken);
  const RunResult r = run("verify " + path);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "axioms: FAIL"));
  CHECK(contains(r.out, "witness"));
}

TEST_CASE("verify distinguishes format errors from axiom failures") {
  const std::string path = write_file("cli_garbled.tbl", kGarbled);
  const RunResult r = run("verify " + path, true);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "error:"));
}

TEST_CASE("verify handles several inputs in order") {
  const std::string path = write_file("cli_z4.tbl", kZ4);
  const RunResult r = run("verify --k16 " + path);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "input: k16"));
  CHECK(contains(r.out, "input: cli_z4.tbl"));
}

TEST_CASE("verify emits stable machine-readable output") {
  const RunResult a = run("verify --k16 --json");
  const RunResult b = run("verify --k16 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("command") == "verify");
  CHECK(j.at("results").size() == 1);
  CHECK(j.at("results")[0].at("passed") == true);
  CHECK(j.at("results")[0].at("order") == 16);
  CHECK(j.at("results")[0].at("digest").get<std::string>().size() == 16);
  CHECK(j.at("results")[0].at("violations").empty());
}

TEST_CASE("missing input file is a usage error") {
  const RunResult r = run("verify no_such_file.tbl", true);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "error:"));
}

TEST_CASE("gyrtable prints the legend and the grid") {
  const RunResult r = run("gyrtable --k16");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "distinct gyrations: 2"));
  CHECK(contains(r.out, "I = ()"));
  CHECK(contains(r.out, "A = (8 9)(10 11)(12 13)(14 15)"));

  const RunResult j = run("gyrtable --k16 --json");
  const nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("legend").size() == 2);
  CHECK(parsed.at("table").size() == 16);
  CHECK(parsed.at("table")[0][0] == "I");
  CHECK(parsed.at("table")[4][8] == "A");
}

TEST_CASE("subs and lsubs enumerate the lattice") {
  const RunResult all = run("subs --k16");
  CHECK(all.code == 0);
  CHECK(contains(all.out, "subgyrogroups: 19"));
  CHECK(contains(all.out, "{0, 8}"));

  const RunResult l = run("lsubs --k16");
  CHECK(l.code == 0);
  CHECK(contains(l.out, "L-subgyrogroups: 11"));
  CHECK(!contains(l.out, "{0, 8}"));
  CHECK(contains(l.out, "{0, 1}"));
}

TEST_CASE("cosets of an L-subgroup partition and satisfy the index law") {
  const RunResult r = run("cosets --k16 --set 0,1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "left cosets: 8"));
  CHECK(contains(r.out, "partition: yes"));
  CHECK(contains(r.out, "16 = 8 * 2"));
}

TEST_CASE("cosets report overlaps when the decomposition fails") {
  const RunResult r = run("cosets --k16 --set 0,12");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "partition: no"));
  CHECK(contains(r.out, "overlap"));
  CHECK(contains(r.out, "(not L)"));
}

TEST_CASE("cosets of the non-L pair overlap and exit nonzero") {
  const RunResult r = run("cosets --k16 --set 0,8");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "partition: no"));
  CHECK(contains(r.out, "(not L)"));
  CHECK(contains(r.out, "overlap"));
  CHECK(contains(r.out, "equivalence classes: 12"));
}

TEST_CASE("normality verdicts and exit codes") {
  const RunResult yes = run("normal --k16 --set 0,1");
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "normal: yes"));

  const RunResult no = run("normal --k16 --set 0,8");
  CHECK(no.code == 1);
  CHECK(contains(no.out, "normal: no"));
  CHECK(contains(no.out, "failed stage"));

  const RunResult bad = run("normal --k16 --set 0,99", true);
  CHECK(bad.code == 2);
}

TEST_CASE("quotient prints the coset legend and a loadable table") {
  const RunResult r = run("quotient --k16 --set 0,1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "quotient order: 8"));
  CHECK(contains(r.out, "0 = {0, 1}"));
  CHECK(contains(r.out, "\n8\n0 1 2 3 4 5 6 7\n"));

  const RunResult no = run("quotient --k16 --set 0,8");
  CHECK(no.code == 1);
  CHECK(contains(no.out, "undefined"));
}

TEST_CASE("iso finds the identity on equal inputs") {
  const RunResult r = run("iso --k16 --k16");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "isomorphic: yes"));
  CHECK(contains(r.out, "0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15"));
}

TEST_CASE("iso distinguishes the two groups of order four") {
  const std::string z4 = write_file("cli_iso_z4.tbl", kZ4);
  const std::string klein = write_file("cli_iso_klein.tbl", kKlein);
  const RunResult r = run("iso " + z4 + " " + klein);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "isomorphic: no"));

  const RunResult one = run("iso --k16", true);
  CHECK(one.code == 2);
}

TEST_CASE("cayley checks the composition law and samples the extension") {
  const RunResult r = run("cayley --k16 --samples 500 --seed 7");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "composition law: PASS"));
  CHECK(contains(r.out, "automorphism commutation: PASS"));
  CHECK(contains(r.out, "sampled, 500 triples, seed 7"));

  const RunResult noseed = run("cayley --k16", true);
  CHECK(noseed.code == 2);
  CHECK(contains(noseed.out, "--seed"));
}

TEST_CASE("cayley exhaustive mode covers small orders only") {
  const std::string z4 = write_file("cli_cayley_z4.tbl", kZ4);
  const RunResult r = run("cayley " + z4 + " --exhaustive");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "exhaustive, 24 elements"));

  const RunResult big = run("cayley --k16 --exhaustive", true);
  CHECK(big.code == 2);
}

TEST_CASE("cayley defaults to exhaustive when the order permits") {
  const std::string z4 = write_file("cli_cayley_z4_default.tbl", kZ4);
  const RunResult r = run("cayley " + z4);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "exhaustive, 24 elements"));

  // An explicit sampling request still needs its seed, even on tiny orders.
  const RunResult sampled = run("cayley " + z4 + " --samples 100", true);
  CHECK(sampled.code == 2);
  CHECK(contains(sampled.out, "--seed"));
}

TEST_CASE("models adds disk points") {
  const RunResult r = run("models --disk --add 0.5,0 0.5,0");
  CHECK(r.code == 0);
  CHECK(r.out == "0.8,0\n");
}

TEST_CASE("models evaluates gyrations through the generic path") {
  const RunResult r = run("models --disk --gyr 0,0.5 0.5,0 0.25,0 --json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  const double re = j.at("gyr").at("result")[0].get<double>();
  const double im = j.at("gyr").at("result")[1].get<double>();
  // Closed form: ((15 + 8i)/17) * 0.25.
  CHECK(std::abs(re - 15.0 / 17.0 * 0.25) <= 1e-12);
  CHECK(std::abs(im - 8.0 / 17.0 * 0.25) <= 1e-12);
}

TEST_CASE("models einstein addition via json") {
  const RunResult r =
      run("models --einstein --dim 3 --add 0.5,0,0 0.5,0,0 --json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j.at("add").at("result")[0].get<double>() - 0.8) <= 1e-12);
  CHECK(std::abs(j.at("add").at("result")[1].get<double>()) <= 1e-15);
}

TEST_CASE("models suite passes and is reproducible byte for byte") {
  const std::string args = "models --ball --dim 3 --suite --samples 2000 --seed 42";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "suite: PASS"));
  CHECK(contains(a.out, "seed: 42"));

  const RunResult j = run(args + " --json");
  const nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("suite").at("passed") == true);
  CHECK(parsed.at("suite").at("max_deviation").get<double>() <= 1e-12);
  CHECK(parsed.at("suite").at("laws").size() == 5);
}

TEST_CASE("models usage errors") {
  CHECK(run("models --disk --suite --samples 100", true).code == 2);
  CHECK(run("models --disk --ball --add 0.1,0 0.1,0", true).code == 2);
  CHECK(run("models --disk --add 0.5,0,0 0.5,0,0", true).code == 2);
  CHECK(run("models --disk", true).code == 2);
  CHECK(run("models --einstein --dim 3 --add 2,0,0 0,0,0", true).code == 2);
}

TEST_CASE("bare invocations are usage errors") {
  CHECK(run("", true).code == 2);
  CHECK(run("frobnicate", true).code == 2);
  CHECK(run("subs", true).code == 2);  // no input table at all
}

TEST_CASE("help exits cleanly") {
  const RunResult r = run("--help");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verify"));
  CHECK(contains(r.out, "models"));
}

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli_path() {
  const char* env = std::getenv("EQUIKNOT_CLI");
  REQUIRE_MESSAGE(env != nullptr, "EQUIKNOT_CLI must point at the binary");
  return env;
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/equiknot_test_") + name;
}

std::string grab_line(const std::string& output, const std::string& key) {
  size_t at = output.find(key);
  if (at == std::string::npos) return "";
  size_t end = output.find('\n', at);
  return output.substr(at, end - at);
}

}  // namespace

TEST_CASE("realize 3_1 emits 8 sticks and passes") {
  std::string out = temp_path("t31.json");
  RunResult r = run("realize 3_1 -o " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("8 sticks") != std::string::npos);
  CHECK(r.output.find("pass") != std::string::npos);

  json poly = json::parse(std::ifstream(out));
  CHECK(poly["vertices"].size() == 8);
  CHECK(poly["edge_length"].get<double>() == 1.0);
  CHECK(poly["clearance"].get<double>() > 0.0);
  CHECK(poly["source"]["name"] == "3_1");
}

TEST_CASE("realize --no-reduce emits the doubled form") {
  std::string out = temp_path("t31_doubled.json");
  RunResult r = run("realize 3_1 --no-reduce -o " + out);
  CHECK(r.exit_code == 0);
  json poly = json::parse(std::ifstream(out));
  CHECK(poly["vertices"].size() == 10);
}

TEST_CASE("realize rejects malformed files with a machine-readable error") {
  std::string bad = temp_path("bad.txt");
  {
    std::ofstream f(bad);
    f << "1 2\n1 3\n2 3\n1 4\n";  // index 1 has degree 3
  }
  RunResult r = run("realize --file " + bad);
  CHECK(r.exit_code != 0);
  json err = json::parse(r.output);
  CHECK(err["error"] == "DegreeError");
}

TEST_CASE("invariant matches between table entry and realized polygon") {
  std::string out = temp_path("round.json");
  CHECK(run("realize 3_1 -o " + out).exit_code == 0);

  RunResult direct = run("invariant 3_1");
  RunResult from_poly =
      run("--max-crossings 24 invariant --from-polygon " + out);
  CHECK(direct.exit_code == 0);
  CHECK(from_poly.exit_code == 0);

  std::string canon = "jones_canonical:";
  std::string a = grab_line(direct.output, canon);
  std::string b = grab_line(from_poly.output, canon);
  CHECK(a != "");
  CHECK(a == b);
  CHECK(grab_line(direct.output, "determinant:") ==
        grab_line(from_poly.output, "determinant:"));
}

TEST_CASE("invariant unknot2 is trivial") {
  RunResult r = run("invariant unknot2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("jones: 1") != std::string::npos);
  CHECK(r.output.find("determinant: 1") != std::string::npos);
}

TEST_CASE("validate and table subcommands") {
  CHECK(run("validate 3_1").exit_code == 0);
  RunResult t = run("table");
  CHECK(t.exit_code == 0);
  CHECK(t.output.find("3_1") != std::string::npos);

  RunResult missing = run("validate no_such_knot");
  CHECK(missing.exit_code != 0);
}

TEST_CASE("export pd code") {
  RunResult r = run("export 3_1 --format pd");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("X[") != std::string::npos);
}

TEST_CASE("compose 3_1 3_1 gives 12 sticks") {
  std::string out = temp_path("granny.json");
  RunResult r = run("compose 3_1 3_1 -o " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("12 sticks") != std::string::npos);
  json poly = json::parse(std::ifstream(out));
  CHECK(poly["vertices"].size() == 12);
}

TEST_CASE("batch json output is byte-identical across equal seeds") {
  std::string out1 = temp_path("batch1.json");
  std::string out2 = temp_path("batch2.json");
  // a small deterministic selection keeps this test quick
  RunResult a = run("--seed 7 batch 3_1 unknot2 --format json -o " + out1);
  RunResult b = run("--seed 7 batch 3_1 unknot2 --format json -o " + out2);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  std::ifstream f1(out1), f2(out2);
  std::string s1((std::istreambuf_iterator<char>(f1)),
                 std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)),
                 std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  CHECK(!s1.empty());
}

TEST_CASE("batch rows are ordered by name regardless of request order") {
  RunResult r = run("batch 8_19 3_1 --format csv");
  CHECK(r.exit_code == 0);
  size_t first = r.output.find("3_1");
  size_t second = r.output.find("8_19");
  CHECK(first != std::string::npos);
  CHECK(second != std::string::npos);
  CHECK(first < second);
}

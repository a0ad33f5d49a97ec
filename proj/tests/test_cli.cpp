#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + VCOH_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json parse(const Run& r) {
  INFO(r.out);
  return nlohmann::json::parse(r.out);
}

std::string data(const std::string& f) { return std::string(VCOH_DATA_DIR) + "/" + f; }

}  // namespace

TEST_CASE("cli: correlator") {
  auto r = run("correlator --inputs 'a(-1)1,a(-1)1' --cutoff 8");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["schema"] == "vcoh-report/1");
  CHECK(j["results"]["value"] == "1/(z1-z2)^2");
  CHECK(j["verdict"] == "PASS");
  CHECK(j["truncation"]["algebra_cutoff"] == "8");
  CHECK(parse(run("correlator --inputs 1,1 --cutoff 8"))["results"]["value"] == "1");
  auto v = run("correlator --inputs 'a(-1)1,a(-2)1,a(-1)1' --cutoff 10 --verify");
  CHECK(v.code == 0);
  CHECK(parse(v)["checks"].size() == 4);
}

TEST_CASE("cli: usage and config errors exit with 2") {
  CHECK(run("correlator --inputs 'nope' --cutoff 8").code == 2);
  CHECK(run("correlator").code == 2);
  CHECK(run("axioms --cutoff 4 --weight-max 5").code == 2);
  CHECK(run("axioms --cutoff 4 --dual-cutoff 5 --weight-max 2").code == 2);
  CHECK(run("axioms --cutoff 4 --weight-max 2 --retry-cap 0").code == 2);
  CHECK(run("verify everything").code == 2);
  CHECK(run("axioms --algebra /nonexistent.json").code == 2);
  CHECK(run("frobnicate").code == 2);
  // environment overrides count as configuration
  CHECK(run("axioms --weight-max 3", "VCOH_CUTOFF=2").code == 2);
}

TEST_CASE("cli: axioms on spec files") {
  auto good = run("axioms --algebra " + data("heisenberg_w4.json") + " --cutoff 4 --weight-max 2 --dual-cutoff 2");
  CHECK(good.code == 0);
  auto bad = run("axioms --algebra " + data("heisenberg_w4_corrupt.json") +
                 " --cutoff 4 --weight-max 2 --dual-cutoff 2");
  CHECK(bad.code == 1);
  auto j = parse(bad);
  CHECK(j["verdict"] == "FAIL");
  bool witnessed = true;
  for (const auto& c : j["checks"])
    if (c["verdict"] == "FAIL") witnessed = witnessed && c.contains("witness");
    else witnessed = witnessed && c.contains("certifies");
  CHECK(witnessed);
}

TEST_CASE("cli: coboundary") {
  auto d = run("coboundary --cochain " + data("derivation.json") + " --m 1 --expect-zero");
  CHECK(d.code == 0);
  CHECK(parse(d)["results"]["delta_is_zero"] == true);
  auto e = run("coboundary --cochain " + data("e1.json") + " --m 2 --check-delta2 --weight-max 2 --dual-cutoff 2");
  CHECK(e.code == 0);
  auto je = parse(e);
  CHECK(je["results"]["delta_is_zero"] == false);
  CHECK(je["checks"][0]["detail"]["verdict"] == "PASS");
  auto w = run("coboundary --cochain " + data("vacuum.json") + " --m 1 --expect-zero --weight-max 2 --dual-cutoff 2");
  CHECK(w.code == 0);
  // a non-closed cochain with --expect-zero reports FAIL
  CHECK(run("coboundary --cochain " + data("e1.json") + " --m 1 --expect-zero --weight-max 2 --dual-cutoff 2").code == 1);
}

TEST_CASE("cli: cohomology") {
  auto empty = parse(run("cohomology --n 1"));
  CHECK(empty["results"]["cohomology"]["dim_H"] == 0);
  CHECK(empty["results"]["cohomology"]["span_size"] == 0);
  auto h1 = run("cohomology --n 1 --span " + data("derivation.json") + " --weight-max 2 --dual-cutoff 2");
  CHECK(h1.code == 0);
  CHECK(parse(h1)["results"]["cohomology"]["dim_H"] == 1);
  auto h0 = parse(run("cohomology --n 0 --w-basis --module fock:1 --cutoff 8 --weight-max 2"));
  CHECK(h0["results"]["cohomology"]["dim_H"] == 4);
}

TEST_CASE("cli: verify suites") {
  auto c = run("verify delta2 --algebra commutative --cutoff 6 --weight-max 2 --dual-cutoff 2");
  CHECK(c.code == 0);
  auto s = run("verify shuffle --cutoff 12 --weight-max 2 --dual-cutoff 2 --format text");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("verify: PASS", 0) == 0);
}

TEST_CASE("cli: reports are deterministic and can be written to a file") {
  std::string args = "verify duality --cutoff 10 --weight-max 1 --dual-cutoff 2 --seed 3 --no-timing";
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seconds") == std::string::npos);
  CHECK(parse(a)["results"].contains("duality_sample"));
  std::string path = "cli_report_test.json";
  CHECK(run("correlator --inputs 1 --cutoff 4 --out " + path).code == 0);
  std::ifstream f(path);
  CHECK(nlohmann::json::parse(f)["command"] == "correlator");
  std::remove(path.c_str());
}

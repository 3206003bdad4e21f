#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef TRIQUAD_CLI_PATH
#error "TRIQUAD_CLI_PATH must be defined"
#endif
#ifndef TRIQUAD_DATA_DIR
#error "TRIQUAD_DATA_DIR must be defined"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("TRIQUAD_GOLDEN_DIR='") + TRIQUAD_DATA_DIR + "' '" +
                          TRIQUAD_CLI_PATH + "' " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  for (const char c : s) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("cohomology command") {
  const CliResult json = run_cli("cohom 0 0 0 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out == "{\"h0\":1,\"h1\":0,\"h2\":0,\"h3\":0}\n");

  const CliResult csv = run_cli("cohom 0 0 -2 --format csv");
  CHECK(csv.exit_code == 0);
  const auto lines = lines_of(csv.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "h0,h1,h2,h3");
  CHECK(lines[1] == "0,1,0,0");
}

TEST_CASE("json output round-trips") {
  const CliResult r = run_cli("cohom 2 -2 0 --format json");
  REQUIRE(r.exit_code == 0);
  const auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.dump() + "\n" == r.out);
  CHECK(parsed["h1"] == 3);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("cohom 1 2").exit_code == 2);
  CHECK(run_cli("table nonsense").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("cohom a b c").exit_code == 2);
}

TEST_CASE("chi and ext commands") {
  const CliResult chi = run_cli("chi 1 2 3 4 1 2 --format csv");
  CHECK(chi.exit_code == 0);
  CHECK(lines_of(chi.out)[1] == "12,7,0");

  const CliResult ext = run_cli("ext 0 2 1 2 0 1 --format csv");
  CHECK(ext.exit_code == 0);
  CHECK(lines_of(ext.out)[1] == "3");

  // Inconsistent Chern data is an error, not a rounded value.
  CHECK(run_cli("chi 1 0 0 1 0 0").exit_code == 1);
}

TEST_CASE("line-bundle census command") {
  const CliResult r = run_cli("acm-lines --format csv");
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out).size() == 14);  // header + 13
}

TEST_CASE("case-table commands") {
  const CliResult div = run_cli("table divisorial --format csv");
  CHECK(div.exit_code == 0);
  const auto div_lines = lines_of(div.out);
  CHECK(div_lines[0] == "a1,a2,a3,d1,d2,d3,e,b1,b2,b3,cE1,cE2,cE3,verdict");
  CHECK(div_lines.size() == 61);  // header + the complete 60-row enumeration

  const CliResult filtered = run_cli("table divisorial --verdict EmptyEForbidden --format csv");
  CHECK(filtered.exit_code == 0);
  CHECK(lines_of(filtered.out).size() < div_lines.size());
  for (std::size_t i = 1; i < lines_of(filtered.out).size(); ++i)
    CHECK(lines_of(filtered.out)[i].find("EmptyEForbidden") != std::string::npos);

  const CliResult inter = run_cli("table intermediate --format csv");
  CHECK(inter.exit_code == 0);
  const auto inter_lines = lines_of(inter.out);
  REQUIRE(inter_lines.size() == 12);  // header + 11
  const std::string labels = "LMNPQRSTUVW";
  for (std::size_t i = 1; i < inter_lines.size(); ++i)
    CHECK(inter_lines[i][0] == labels[i - 1]);
}

TEST_CASE("table output is deterministic") {
  const CliResult a = run_cli("table divisorial --format json");
  const CliResult b = run_cli("table divisorial --format json");
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("classification command") {
  const CliResult outside = run_cli("classify 0 3 3 --format csv");
  CHECK(outside.exit_code == 0);
  CHECK(outside.out.find("outside") != std::string::npos);

  const CliResult elliptic = run_cli("classify 2 2 2 --c2 2 3 3 --format csv");
  CHECK(elliptic.exit_code == 0);
  CHECK(elliptic.out.find("admissible,true") != std::string::npos);
  CHECK(elliptic.out.find("elliptic normal curve") != std::string::npos);

  const CliResult rejected = run_cli("classify 1 1 1 --c2 1 1 0 --format csv");
  CHECK(rejected.exit_code == 0);
  CHECK(rejected.out.find("admissible,false") != std::string::npos);
}

TEST_CASE("surface lattice commands") {
  const CliResult classes = run_cli("delpezzo classes 8 1 --format csv");
  CHECK(classes.exit_code == 0);
  CHECK(lines_of(classes.out).size() == 4);  // header + 3 classes

  const CliResult crem = run_cli("delpezzo cremona 5 3 2 2 --format csv");
  CHECK(lines_of(crem.out)[1] == "3,1,0,0");

  const CliResult push = run_cli("delpezzo push 3 1 0 0 --format csv");
  CHECK(lines_of(push.out)[1] == "2,3,3");
}

TEST_CASE("conformance command") {
  const CliResult scoped = run_cli("verify --only tables --format json");
  CHECK(scoped.exit_code == 0);
  const auto parsed = nlohmann::ordered_json::parse(scoped.out);
  REQUIRE(parsed.contains("checks"));
  CHECK(!parsed["checks"].empty());
  for (const auto& check : parsed["checks"]) {
    CHECK(check["scope"] == "tables");
    const std::string prov = check["provenance"];
    CHECK((prov == "golden-table" || prov == "property"));
  }
  CHECK(parsed["summary"]["fail"] == 0);
}

TEST_CASE("corrupted golden data fails the conformance run") {
  // Point the golden directory somewhere empty: loading must fail the
  // golden-backed checks and exit nonzero.
  const std::string cmd = std::string("TRIQUAD_GOLDEN_DIR=/nonexistent '") +
                          TRIQUAD_CLI_PATH + "' verify --only tables --format json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::string out;
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 1);
}

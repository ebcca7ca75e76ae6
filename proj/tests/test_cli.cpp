#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(BNSR_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("rinf reports the trace") {
  const Run r = cli("rinf -g 'BS(1,2) x F(3)'");
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["version"].is_string());
  CHECK(j["conclusion"] == "RInfinity");
  CHECK(j["trace"].back()["rule"] == "ThmMain1");
}

TEST_CASE("reidemeister of -1 on Z is 2") {
  const Run r = cli("reidemeister --matrix '[[-1]]'");
  REQUIRE(r.code == 0);
  CHECK(r.json()["R"] == 2);
  CHECK(cli("reidemeister --matrix '[[1]]'").json()["R"] == "inf");
  const Run t = cli("reidemeister --table '[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]' --automorphism '[0,3,2,1]'");
  CHECK(t.json()["R"] == 2);
}

TEST_CASE("invariants of F(2) x Z") {
  const Run r = cli("invariants -g 'F(2) x Z'");
  REQUIRE(r.code == 0);
  const auto o = r.json()["omega"]["1"];
  CHECK(o["cardinality"] == 2);
  CHECK(o["antipodal"] == true);
  CHECK(r.json()["version"].is_string());
}

TEST_CASE("probe json and csv") {
  const Run r = cli("probe --atom 'BS(1,2)' --dir '[-1]' --mode cone --radius 6");
  REQUIRE(r.code == 0);
  CHECK(r.json()["evidence"] == "SupportsNonMembership");
  CHECK(r.json()["warn"] == false);
  const Run c = cli("probe --atom 'Z^2' --dir 1,1 --grid 0,1/2,1 --lambda-max 3/2 --csv");
  CHECK(c.code == 0);
  CHECK(c.out.rfind("s,vertices", 0) == 0);
}

TEST_CASE("error paths") {
  const Run parse = cli("rinf -g 'BS(2,3)'");
  CHECK(parse.code == 1);
  CHECK(parse.json()["error"]["type"] == "ParseError");
  CHECK(parse.json()["version"].is_string());
  const Run atom = cli("probe --atom Thompson --dir 1,0");
  CHECK(atom.code == 1);
  CHECK(atom.json()["error"]["type"] == "UnsupportedAtom");
  CHECK(cli("reidemeister --matrix '[[2]]'").code == 1);
  CHECK(cli("").code == 2);
  CHECK(cli("probe --atom Z").code == 2);
  CHECK(cli("reidemeister --matrix '[[1'").code == 2);
  CHECK(cli("probe --atom Z --dir 1 --lambda-max x").code == 2);
}

TEST_CASE("selfcheck golden-only passes") {
  const Run r = cli("selfcheck --golden-only");
  CHECK(r.code == 0);
  CHECK(r.json()["pass"] == true);
}

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "singular_forms/report.hpp"

using sforms::Json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + SFORMS_BINARY + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SFORMS_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Golden {
  std::string name;
  std::string file;
  std::string args;
};

std::vector<Golden> goldens() {
  return {
      {"quadric_threefold", "quadric_threefold.json",
       "hypersurface analyze --vars x,y,z,w --f 'x^2+y^2+z^2+w^2' --json --no-timing"},
      {"quadric_fourfold", "quadric_fourfold.json",
       "hypersurface analyze --vars x,y,z,w,v --f 'x^2+y^2+z^2+w^2+v^2' --json --no-timing"},
      {"fermat_cubic", "fermat_cubic.json", "hypersurface analyze --vars x,y,z --f 'x^3+y^3+z^3' --json --no-timing"},
      {"quotient_half_111", "quotient_half_111.json", "quotient analyze --r 2 --a 1,1,1 --p 2 --json --no-timing"},
      {"classify_dim5", "classify_dim5.json", "quotient classify --dim 5 --rmax 10 --json --no-timing"},
  };
}

}  // namespace

class CliGolden : public ::testing::TestWithParam<Golden> {};

TEST_P(CliGolden, MatchesGoldenAndIsDeterministic) {
  auto first = run(GetParam().args);
  auto second = run(GetParam().args);
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, read_golden(GetParam().file));
  auto j = Json::parse(first.out);
  EXPECT_EQ(j["schema"], "singular-forms/1");
  EXPECT_EQ(j["timing_ms"], 0);
  EXPECT_EQ(j.dump(2) + "\n", first.out);
}

INSTANTIATE_TEST_SUITE_P(Goldens, CliGolden, ::testing::ValuesIn(goldens()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, HypersurfaceJsonRoundTrips) {
  auto r = run("hypersurface analyze --vars x,y,z,w --f 'x^2+y^2+z^2+w^2' --json --no-timing");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  auto report = j["result"].get<sforms::SingularityReport>();
  EXPECT_EQ(report.d, 3);
  EXPECT_TRUE(report.normal);
  EXPECT_EQ(report.tjurina, 1);
  EXPECT_EQ(Json(report), j["result"]);
  for (auto& v : report.reflexive)
    if (v.p <= 2) EXPECT_FALSE(v.free);
}

TEST(Cli, ExpectedValuesInGoldens) {
  auto cubic = Json::parse(read_golden("fermat_cubic.json"))["result"];
  EXPECT_EQ(cubic["tjurina"], 8);
  EXPECT_EQ(cubic["d"], 2);
  auto fourfold = Json::parse(read_golden("quadric_fourfold.json"))["result"];
  EXPECT_EQ(fourfold["d"], 4);
  EXPECT_EQ(fourfold["tor"], Json::parse("[false,false,false,false,true,true]"));
  auto half = Json::parse(read_golden("quotient_half_111.json"))["result"];
  EXPECT_EQ(half["generator_count"], 3);
  EXPECT_EQ(half["free_p"], true);
  EXPECT_EQ(half["gorenstein"], false);
  std::vector<std::string> types;
  auto classified = Json::parse(read_golden("classify_dim5.json"));
  for (auto& t : classified["result"]["types"]) types.push_back(t["type"]);
  EXPECT_EQ(types, (std::vector<std::string>{"1/1(0,0,0,0,0)", "1/2(1,1,1,1,1)", "1/4(1,1,1,1,1)"}));
}

TEST(Cli, TextOutput) {
  auto r = run("koszul pattern --vars x,y,z --f 'x^2+y^2+z^2'");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("≠0"), std::string::npos);
  auto q = run("quotient analyze --r 3 --a 1,1,2 --p 2");
  ASSERT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("free: no (5 > C(3,2) = 3)"), std::string::npos);
}

TEST(Cli, Selftest) { EXPECT_EQ(run("selftest").code, 0); }

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("quotient analyze --r 3 --a 1,0,0").code, 2);
  EXPECT_EQ(run("hypersurface analyze --vars x,y --f 'x +'").code, 2);
  EXPECT_EQ(run("hypersurface analyze --vars x,y --f 'x^2'").code, 2);
  EXPECT_EQ(run("hypersurface analyze --vars x,y --f 'x^2+y^3+x*y'").code, 2);
  EXPECT_EQ(run("hypersurface analyze").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("hypersurface analyze --vars x,y,z --f 'x^3+y^3+z^3' --budget 5").code, 3);
  EXPECT_EQ(run("hypersurface analyze --vars x,y,z --f 'x^3+y^3+z^3'", "SF_BUDGET=5").code, 3);
}

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

// stderr is folded into out when merge is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  const std::string cmd = env + std::string(OCTDER_BIN) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, DeriveHermitian4OverRationals) {
  const auto r = run("derive --space h --n 4 --field q");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["dim"], 20);
  EXPECT_EQ(j["field"], "Q");
}

TEST(Cli, DeriveHermitian1) {
  const auto r = run("derive --space h --n 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["dim"], 0);
}

TEST(Cli, VerifyAntihermitian3) {
  const auto r = run("verify --space a --n 3 --field mod:101");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["span_match"], true);
  EXPECT_EQ(j["computed_dim"], 17);
}

TEST(Cli, CharacteristicTwo) {
  const auto r = run("build --space m --n 2 --product comm --field mod:2", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("characteristic two excluded"), std::string::npos);
}

TEST(Cli, PreconditionFailuresExitTwo) {
  EXPECT_EQ(run("verify --space h --n 2 --field mod:3").status, 2);
  EXPECT_EQ(run("derive --space a --n 4 --field q").status, 2);
  EXPECT_EQ(run("derive --space h --n 1 --oct-type 3").status, 2);
  EXPECT_EQ(run("derive --space x --n 1").status, 2);
  EXPECT_EQ(run("derive --space h --n 0").status, 2);
  EXPECT_EQ(run("derive --space h --n 2 --field mod:9").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST(Cli, DeriveEmitsBasis) {
  const auto r = run("derive --space o --field q --emit-basis");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["dim"], 14);
  ASSERT_EQ(j["basis"].size(), 14u);
  EXPECT_EQ(j["basis"][0].size(), 64u);
}

TEST(Cli, NucleusDefaultsToOctonions) {
  const auto r = run("nucleus --oct-type 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["dim"], 1);
}

TEST(Cli, BuildExportsConstants) {
  const auto r = run("build --space a --n 1 --field q");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["dim"], 7);
  EXPECT_EQ(j["symmetry"], "anticommutative");
}

TEST(Cli, TableJson) {
  const auto r = run("table --oct-type 2 --field q");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["type"], "II");
  EXPECT_EQ(j["products"].size(), 8u);
}

TEST(Cli, CsvOutput) {
  const auto r = run("verify --space a --n 2 --output csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("key,", 0), 0u);
  EXPECT_NE(r.out.find("a_2_1_mod101,15,15,15,true,true"), std::string::npos);
}

TEST(Cli, JsonIsByteStable) {
  const auto a = run("verify --space h --n 3 --oct-type 2");
  const auto b = run("verify --space h --n 3 --oct-type 2");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(json_of(a).contains("seconds"));
  EXPECT_TRUE(json_of(run("verify --space h --n 1 --timing")).contains("seconds"));
}

TEST(Cli, GoldenFilesMatch) {
  for (const char* args : {"--space h --n 2", "--space h --n 4 --oct-type 2", "--space a --n 1",
                           "--space a --n 3 --oct-type 2"}) {
    const auto r = run(std::string("verify ") + args + " --golden " + OCTDER_GOLDEN_DIR);
    EXPECT_EQ(r.status, 0) << args;
  }
}

TEST(Cli, FieldFromEnvironment) {
  const auto r = run("derive --space a --n 1", false, "OCTDER_FIELD=q ");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["field"], "Q");
}

// Copyright 2026 The liquid-tally Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the liquid-tally binary and checks exit codes and output.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result Exec(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" LIQUID_TALLY_BIN "\" " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() /
           ("liquid_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    ASSERT_EQ(Exec("fixtures --emit all --dir " + dir_.string()).code, 0);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static std::string File(const std::string& name) { return (dir_ / name).string(); }
  static fs::path dir_;
};

fs::path CliTest::dir_;

TEST_F(CliTest, TallyBfdFig2) {
  const Result r = Exec("tally --mechanism bfd --input " + File("fig2.ldg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a1: a1 -> a4 => yes"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExitCodesAcrossFixtures) {
  struct Case {
    const char* mechanism;
    const char* file;
    int code;
  };
  const Case cases[] = {
      {"lf", "fig1.ldg", 0},       {"bfd", "fig1.ldg", 2},
      {"bfd", "fig2.ldg", 0},      {"dfd1", "fig2.ldg", 0},
      {"dfd2", "fig2.ldg", 0},     {"lf", "fig2.ldg", 2},
      {"fluid", "fig3.ldg", 0},    {"greedycap", "fig3.ldg", 0},
      {"bfd", "fig3.ldg", 2},      {"fluid", "fig4a.ldg", 0},
      {"fluid", "fig4b.ldg", 0},   {"greedycap", "thm31_pair.ldg", 0},
      {"bfd", "bfd_rttr_witness.ldg", 0},
      {"dfd2", "dfd2_rttr_witness.ldg", 0},
      {"greedycap", "greedycap_star.ldg", 0},
  };
  for (const Case& c : cases) {
    const Result r =
        Exec(std::string("tally --mechanism ") + c.mechanism + " --input " + File(c.file));
    EXPECT_EQ(r.code, c.code) << c.mechanism << " " << c.file << "\n" << r.out;
  }
}

TEST_F(CliTest, AuditExitCodes) {
  EXPECT_EQ(Exec("audit --mechanism dfd1 --properties pe1 --input " + File("fig2.ldg")).code, 1);
  EXPECT_EQ(Exec("audit --mechanism bfd --properties pe1,gre --input " + File("fig2.ldg")).code, 0);
  EXPECT_EQ(Exec("audit --mechanism fluid --properties nad --input " + File("fig3.ldg")).code, 1);
  EXPECT_EQ(Exec("audit --mechanism lf --properties rtd --input " + File("fig1.ldg")).code, 0);
  EXPECT_EQ(Exec("audit --mechanism greedycap --cap 1 --properties rtd --input " +
                 File("thm31_pair.ldg")).code,
            1);
  EXPECT_EQ(Exec("audit --mechanism bfd --properties bogus --input " + File("fig2.ldg")).code, 2);
}

TEST_F(CliTest, ScenarioVerdicts) {
  const Result violated = Exec("scenario --mechanism fluid --manifest " + File("fig4.scenario"));
  EXPECT_EQ(violated.code, 1);
  EXPECT_NE(violated.out.find("VIOLATED"), std::string::npos) << violated.out;
  const Result pre = Exec("scenario --mechanism fluid --round1 " + File("fig4a.ldg") +
                          " --round2 " + File("fig4b.ldg") + " --changed a1 --outcome yes");
  EXPECT_EQ(pre.code, 0);
  EXPECT_NE(pre.out.find("PRECONDITION_FAILED"), std::string::npos) << pre.out;
  EXPECT_EQ(Exec("scenario --mechanism bfd --manifest " + File("fig4.scenario")).code, 2);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(Exec("tally --mechanism bfd --input " + File("missing.ldg")).code, 2);
  EXPECT_EQ(Exec("tally --mechanism borda --input " + File("fig2.ldg")).code, 2);
  EXPECT_EQ(Exec("frobnicate").code, 2);
  EXPECT_EQ(Exec("fixtures --emit fig9 --dir " + dir_.string()).code, 2);
  const fs::path bad = dir_ / "bad.ldg";
  FILE* f = std::fopen(bad.c_str(), "w");
  ASSERT_NE(f, nullptr);
  std::fputs("agent a1\nedge a1 a1\n", f);
  std::fclose(f);
  const Result r = Exec("tally --mechanism bfd --input " + bad.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("error:"), std::string::npos);
  EXPECT_EQ(Exec("--help").code, 0);
}

TEST_F(CliTest, CompareAndTable) {
  const Result c = Exec("compare --mechanisms dfd1,dfd2,bfd --input " + File("fig2.ldg"));
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("diverging"), std::string::npos) << c.out;
  const Result t = Exec("table1 --lp-trials 20");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("Fluid"), std::string::npos) << t.out;
}

TEST_F(CliTest, FuzzExitCodes) {
  EXPECT_EQ(Exec("fuzz --mechanism bfd --check pe1,sd --trials 200 --seed 3").code, 0);
  EXPECT_EQ(Exec("fuzz --mechanism fluid --check nad --agents 6 --trials 500 --seed 3").code, 1);
  EXPECT_EQ(Exec("fuzz --mechanism bfd --check pe1 --kind onp --trials 5").code, 2);
}

TEST_F(CliTest, MachineOutputIsStable) {
  const std::string args[] = {
      "tally --format machine --mechanism greedycap --seed 5 --input " + File("fig3.ldg"),
      "audit --format machine --mechanism dfd2 --properties pe1,rttr --input " + File("fig2.ldg"),
      "compare --format machine --mechanisms fluid,greedycap --input " + File("fig3.ldg"),
      "fuzz --format machine --mechanism dfd1 --check rttr --trials 100 --seed 8",
  };
  for (const std::string& a : args) {
    const Result first = Exec(a);
    const Result second = Exec(a);
    EXPECT_EQ(first.out, second.out) << a;
    EXPECT_FALSE(first.out.empty());
  }
}

TEST_F(CliTest, SeedFromEnvironment) {
  const std::string args = "fuzz --format machine --mechanism dfd1 --check rttr --trials 50";
  const Result env = Exec(args, "LIQUID_TALLY_SEED=17");
  const Result flag = Exec(args + " --seed 17");
  EXPECT_EQ(env.out, flag.out);
  const Result other = Exec(args + " --seed 18");
  EXPECT_NE(env.out, other.out);
}

}  // namespace

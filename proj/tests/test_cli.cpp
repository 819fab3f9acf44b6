/**
 * @file tests/test_cli.cpp
 * @copyright Apache License 2.0
 *
 * Runs the built command line tool through the shell and checks output and
 * exit codes.
 */
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(SSST_CLI_PATH) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ssst_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    write("fig3.json", R"({"machines":2,"jobs":[1,1,3]})");
    write("cert_112_3.json", R"({"assignment":[1,1,2],"makespan":3})");
    write("malformed.json", R"({"assignment":[1,1,2],"makespan":)");
    write("p2354.json", R"({"weights":[2,3,5,4]})");
    write("p113.json", R"({"weights":[1,1,3]})");
    write("huge.json", R"({"machines":2,"jobs":[1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1]})");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, Gen) {
  const auto a = run("gen --seed 1 --m 2 --n 3 --pmax 9");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.rfind("{\"machines\":2,\"jobs\":[", 0), 0u) << a.out;
  EXPECT_EQ(run("gen --seed 1 --m 2 --n 3 --pmax 9").out, a.out);
  EXPECT_EQ(run("gen --seed 1 --m 1 --n 3 --pmax 9").code, 2);
  EXPECT_EQ(run("gen --seed 1 --m 2 --n 0 --pmax 9").code, 2);
}

TEST_F(Cli, Count) {
  const auto two = run("count --m 2 --n 3");
  EXPECT_EQ(two.code, 0);
  EXPECT_EQ(two.out,
            "m=2 n=3\nnodes=15\nschedules=8\npartial=6\nessential_formula=6\nessential_exact=6\n");
  const auto three = run("count --m 3 --n 3");
  EXPECT_NE(three.out.find("essential_formula=24\n"), std::string::npos);
  EXPECT_NE(three.out.find("essential_exact=6\n"), std::string::npos);
  EXPECT_NE(three.out.find("note:"), std::string::npos);
  const auto one = run("count --m 2 --n 1");
  EXPECT_NE(one.out.find("schedules=2\n"), std::string::npos);
  EXPECT_NE(one.out.find("partial=0\n"), std::string::npos);
  EXPECT_NE(one.out.find("essential_exact=0\n"), std::string::npos);
  EXPECT_EQ(run("count --m 1 --n 3").code, 2);
}

TEST_F(Cli, Solve) {
  const auto brute = run("solve " + path("fig3.json") + " --method brute");
  EXPECT_EQ(brute.code, 0);
  EXPECT_EQ(brute.out,
            "{\"optimum\":3,\"assignment\":[1,1,2],\"leaves_explored\":8,\"nodes_pruned\":0}\n");
  const auto bnb = run("solve " + path("fig3.json") + " --method bnb");
  EXPECT_EQ(bnb.code, 0);
  EXPECT_EQ(bnb.out.rfind("{\"optimum\":3,", 0), 0u);
  EXPECT_EQ(run("solve " + path("huge.json") + " --method brute").code, 3);
  EXPECT_EQ(run("solve " + path("huge.json") + " --method bnb").code, 0);
  EXPECT_EQ(run("solve " + path("malformed.json")).code, 2);
  EXPECT_EQ(run("solve " + path("missing.json")).code, 2);
  EXPECT_EQ(run("solve " + path("fig3.json") + " --method magic").code, 2);
}

TEST_F(Cli, Verify) {
  const auto ok = run("verify " + path("fig3.json") + " " + path("cert_112_3.json") + " --threshold 3");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "Accept\n");
  const auto above = run("verify " + path("fig3.json") + " " + path("cert_112_3.json") + " --threshold 2");
  EXPECT_EQ(above.code, 1);
  EXPECT_EQ(above.out, "RejectAboveThreshold actual=3 threshold=2\n");
  EXPECT_EQ(run("verify " + path("fig3.json") + " " + path("malformed.json") + " --threshold 3").code, 2);
  EXPECT_EQ(run("verify " + path("fig3.json") + " " + path("cert_112_3.json") + " --threshold x").code, 2);
}

TEST_F(Cli, DecideAndProve) {
  const auto yes = run("decide " + path("fig3.json") + " --threshold 3 --witness " + path("w.json"));
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "yes\n{\"assignment\":[1,1,2],\"makespan\":3}\n");
  EXPECT_EQ(run("verify " + path("fig3.json") + " " + path("w.json") + " --threshold 3").code, 0);
  const auto no = run("decide " + path("fig3.json") + " --threshold 2");
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "no\n");
  EXPECT_EQ(run("decide " + path("fig3.json") + " --threshold 5/2").code, 1);
  EXPECT_EQ(run("prove " + path("fig3.json")).out, "{\"assignment\":[1,1,2],\"makespan\":3}\n");
}

TEST_F(Cli, Reductions) {
  const auto reduced = run("reduce-partition " + path("p2354.json"));
  EXPECT_EQ(reduced.code, 0);
  EXPECT_EQ(reduced.out, "{\"machines\":2,\"jobs\":[2,3,5,4]}\n");
  const std::string cli = SSST_CLI_PATH;
  ASSERT_EQ(shell(cli + " reduce-partition " + path("p2354.json") + " >/dev/null 2>" + path("t.txt")), 0);
  std::ifstream t(path("t.txt"));
  std::string threshold_line;
  std::getline(t, threshold_line);
  EXPECT_EQ(threshold_line, "threshold=7");

  // Piping the reduced instance into decide answers the partition question.
  EXPECT_EQ(shell(cli + " reduce-partition " + path("p2354.json") + " 2>/dev/null | " + cli +
                  " decide - --threshold 7 >/dev/null"),
            0);
  EXPECT_EQ(shell(cli + " reduce-partition " + path("p113.json") + " 2>/dev/null | " + cli +
                  " decide - --threshold 5/2 >/dev/null"),
            1);

  const auto mu = run("reduce-mumpsp " + path("fig3.json"));
  EXPECT_EQ(mu.code, 0);
  EXPECT_EQ(mu.out, "{\"machines\":2,\"users\":[[1,1,3]]}\n");

  write("mu.json", mu.out);
  write("ordered.json", R"({"machines":[[[1,1],[1,2]],[[1,3]]]})");
  const auto eval = run("mumpsp-eval " + path("mu.json") + " " + path("ordered.json"));
  EXPECT_EQ(eval.code, 0);
  EXPECT_EQ(eval.out, "{\"user_makespans\":[3]}\n");
  write("partial.json", R"({"machines":[[[1,1]],[[1,3]]]})");
  EXPECT_EQ(run("mumpsp-eval " + path("mu.json") + " " + path("partial.json")).code, 2);
}

TEST_F(Cli, MagicSchedule) {
  write("i2354.json", R"({"machines":2,"jobs":[2,3,5,4]})");
  const auto ok = run("ms " + path("i2354.json"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("success\n", 0), 0u);
  EXPECT_EQ(run("ms " + path("fig3.json")).code, 1);
  write("c12.json", R"({"assignment":[1,2],"makespan":2})");
  write("i22.json", R"({"machines":2,"jobs":[2,2]})");
  EXPECT_EQ(run("ms " + path("i22.json") + " --strategy certificate --cert " + path("c12.json")).code, 0);
  EXPECT_EQ(run("ms " + path("i2354.json") + " --strategy random --seed 4 --trials 500").code, 0);
  write("m3.json", R"({"machines":3,"jobs":[1,1,1]})");
  EXPECT_EQ(run("ms " + path("m3.json")).code, 2);
}

TEST_F(Cli, Dot) {
  const auto dot = run("dot " + path("fig3.json") + " --max-level 3");
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph SSST {", 0), 0u);
  write("twenty.json", R"({"machines":2,"jobs":[1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1]})");
  EXPECT_EQ(run("dot " + path("twenty.json") + " --max-level 20").code, 3);
  EXPECT_EQ(run("dot " + path("fig3.json") + " --max-level 4").code, 2);
}

TEST_F(Cli, Usage) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

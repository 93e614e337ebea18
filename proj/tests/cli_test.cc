// End-to-end checks of the pmlg binary's exit-code and file contracts. The
// binary path arrives via the PMLG_BIN compile definition.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "pmlg_cli_test";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("sat.cnf", "p cnf 2 2\n1 2 0\n-1 -2 0\n");
    write("unsat.cnf", "p cnf 2 2\n1 0\n-1 0\n");
    write("broken.graph", "pmlg 1 undirected\n2 1\nn 0 a\nn 1 b\ne 0 9\n");
  }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name);
    out << content;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(PMLG_BIN) + " " + args + " >" + path("stdout.txt") +
                            " 2>" + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  std::string stdout_text() const {
    std::ifstream in(dir_ / "stdout.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, SatSubcommandExitCodes) {
  EXPECT_EQ(run("sat --cnf " + path("sat.cnf")), 0);
  EXPECT_EQ(run("sat --cnf " + path("unsat.cnf")), 1);
  EXPECT_EQ(run("sat --cnf " + path("missing.cnf")), 2);
}

TEST_F(CliTest, ReduceThenMatchRoundTrip) {
  ASSERT_EQ(run("reduce --cnf " + path("sat.cnf") + " --out " + path("s")), 0);
  EXPECT_TRUE(fs::exists(dir_ / "s.graph"));
  EXPECT_TRUE(fs::exists(dir_ / "s.pattern"));
  EXPECT_TRUE(fs::exists(dir_ / "s.manifest"));
  EXPECT_EQ(run("match --graph " + path("s.graph") + " --pattern " + path("s.pattern")), 0);

  ASSERT_EQ(run("reduce --cnf " + path("unsat.cnf") + " --out " + path("u")), 0);
  EXPECT_EQ(run("match --graph " + path("u.graph") + " --pattern " + path("u.pattern")), 1);
}

TEST_F(CliTest, ReduceFlagPipelineValidation) {
  EXPECT_EQ(run("reduce --cnf " + path("sat.cnf") + " --binary"), 2);
  EXPECT_EQ(run("reduce --cnf " + path("sat.cnf") + " --dag"), 2);
  EXPECT_EQ(run("reduce --cnf " + path("sat.cnf") + " --degree3 --binary --dag --out " +
                path("bd")),
            0);
  std::ifstream manifest(dir_ / "bd.manifest");
  std::string line;
  std::getline(manifest, line);
  EXPECT_EQ(line, "stat variant binary_dag");
}

TEST_F(CliTest, MatchErrorsExitTwo) {
  ASSERT_EQ(run("reduce --cnf " + path("sat.cnf") + " --out " + path("s")), 0);
  EXPECT_EQ(run("match --graph " + path("broken.graph") + " --pattern " + path("s.pattern")), 2);
  EXPECT_EQ(run("match --graph " + path("s.graph") + " --pattern " + path("nope.pattern")), 2);
}

TEST_F(CliTest, MatchAllPrintsWitnessLines) {
  ASSERT_EQ(run("reduce --cnf " + path("sat.cnf") + " --out " + path("s")), 0);
  ASSERT_EQ(run("match --all --graph " + path("s.graph") + " --pattern " + path("s.pattern")), 0);
  const std::string out = stdout_text();
  ASSERT_FALSE(out.empty());
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind("match ", 0), 0u) << line;
  }
}

TEST_F(CliTest, VerifySmallCampaignPasses) {
  EXPECT_EQ(run("verify --n 4 --k 3 --trials 20 --seed 7 --variants base,degree3,dag --report " +
                path("rep")),
            0);
  EXPECT_TRUE(fs::exists(dir_ / "rep.txt"));
  EXPECT_TRUE(fs::exists(dir_ / "rep.csv"));
}

TEST_F(CliTest, VerifyRejectsZeroTrials) {
  EXPECT_EQ(run("verify --n 4 --k 3 --trials 0"), 2);
}

TEST_F(CliTest, VerifyPadsOddN) {
  ASSERT_EQ(run("verify --n 3 --k 2 --trials 5 --seed 3 --variants base --report " + path("odd")),
            0);
  EXPECT_NE(stdout_text().find("padded to 4"), std::string::npos);
}

TEST_F(CliTest, BenchEmitsFixedCsvHeader) {
  ASSERT_EQ(run("bench --n-min 4 --n-max 6 --k 3 --repeats 2 --csv " + path("bench.csv")), 0);
  const std::string out = stdout_text();
  EXPECT_EQ(out.rfind("n,k,m,edges,sat,micros,repeats\n", 0), 0u);
  std::ifstream csv(dir_ / "bench.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "n,k,m,edges,sat,micros,repeats");
  // 2 instances per n, 2 n values -> header + 4 rows.
  int rows = 0;
  std::string line;
  while (std::getline(csv, line)) rows += !line.empty();
  EXPECT_EQ(rows, 4);
}

}  // namespace

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(EMP_BENCH_EXE) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("emp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, RunWritesCsvAndFlagsOverrideFile) {
  std::ofstream(dir_ / "cfg.txt") << "experiment = NoisySparse\nn = 40\nk = 4\nbasis = RandomFrame\n"
                                     "m_grid = 20\ninput_snr_db = 3\ntrials = 2\nalgorithms = OMP\n";
  const auto out = dir_ / "out.csv";
  ASSERT_EQ(run_cli("run --config " + (dir_ / "cfg.txt").string() + " --trials 3 --algorithms EMP,OMP --out " +
                    out.string()),
            0);
  std::istringstream csv(slurp(out));
  std::string line;
  int lines = 0;
  std::getline(csv, line);
  EXPECT_EQ(line, "algorithm,m,trial,srer_db,snr_db,ip,recovered,iterations,termination");
  while (std::getline(csv, line)) ++lines;
  EXPECT_EQ(lines, 3 * 2);
}

TEST_F(Cli, JsonFormat) {
  const auto out = dir_ / "out.json";
  ASSERT_EQ(run_cli("run --experiment NoiselessKnownK --n 40 --k 2 --m-grid 20 --trials 1 --format json --out " +
                    out.string()),
            0);
  EXPECT_EQ(slurp(out).front(), '[');
}

TEST_F(Cli, ParallelRunsAreByteIdentical) {
  const std::string common =
      "run --experiment NoisyCompressible --n 40 --basis RandomFrame --m-grid 20,36 --snr-db 0 "
      "--power-law 1,1.5 --trials 4 --seed 5 ";
  ASSERT_EQ(run_cli(common + "--threads 1 --out " + (dir_ / "a.csv").string()), 0);
  ASSERT_EQ(run_cli(common + "--threads 3 --out " + (dir_ / "b.csv").string()), 0);
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("run --experiment NoisySparse --n 40 --k 4 --m-grid 20"), 1);  // missing SNR
  EXPECT_EQ(run_cli("run --experiment nonsense --m-grid 20 --k 4"), 1);
  EXPECT_EQ(run_cli("run --no-such-flag"), 1);
  EXPECT_EQ(run_cli("run --config " + (dir_ / "missing.txt").string()), 2);
  EXPECT_EQ(run_cli("run --k 2 --n 40 --m-grid 20 --trials 1 --out /nonexistent/dir/x.csv"), 2);
}

TEST_F(Cli, Diagnose) {
  EXPECT_EQ(run_cli("diagnose --coherence --n 40 --m 20"), 0);
  EXPECT_EQ(run_cli("diagnose --rip --n 40 --m 20 --k 4 --trials 50"), 0);
  EXPECT_EQ(run_cli("diagnose --rip --n 40 --m 20 --k 41"), 1);
}

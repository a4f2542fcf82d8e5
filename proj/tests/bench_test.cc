// Copyright 2026 The subsel Authors
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

#include "subsel/bench.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "subsel/errors.h"
#include "subsel/scaling.h"

namespace subsel {
namespace {

namespace fs = std::filesystem;

BenchConfig SmallConfig(ProblemKind kind) {
  BenchConfig c;
  c.kind = kind;
  c.n_list = {4, 20};
  c.epsilon_list = {Rational(1, 2), Rational(1, 4)};
  c.weight_max = 10'000;
  c.seeds = {1, 2, 3};
  return c;
}

std::string Csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  WriteBenchCsv(out, rows);
  return out.str();
}

TEST(BenchCompareTest, RowsCoverEveryTupleInOrder) {
  const auto rows = BenchCompare(SmallConfig(ProblemKind::kMinKnapsack));
  ASSERT_EQ(rows.size(), 2u * 2u * 3u);
  EXPECT_EQ(rows[0].exact.n, 4);
  EXPECT_EQ(*rows[0].fptas.epsilon, Rational(1, 2));
  EXPECT_EQ(rows[1].seed, 2u);
  EXPECT_EQ(*rows[3].fptas.epsilon, Rational(1, 4));
  EXPECT_EQ(rows[6].exact.n, 20);
}

TEST(BenchCompareTest, MetricsObeyContracts) {
  for (const ProblemKind kind :
       {ProblemKind::kMinKnapsack, ProblemKind::kMaxKnapsack}) {
    const Sense sense = kind == ProblemKind::kMinKnapsack ? Sense::kMinimize
                                                          : Sense::kMaximize;
    const Rational rho =
        sense == Sense::kMinimize ? Rational(2) : Rational(1, 2);
    for (const BenchRow& r : BenchCompare(SmallConfig(kind))) {
      const auto n = static_cast<std::uint64_t>(r.exact.n);
      EXPECT_EQ(r.exact.dp_cells,
                n * static_cast<std::uint64_t>(r.exact.total_weight + 1));
      EXPECT_EQ(r.scaled_weight_bound,
                ScaledWeightBound(sense, r.exact.n, *r.fptas.epsilon, rho));
      if (r.fptas.total_scaled_weight) {
        EXPECT_LE(*r.fptas.total_scaled_weight, r.scaled_weight_bound);
        EXPECT_EQ(r.fptas.dp_cells,
                  n * static_cast<std::uint64_t>(*r.fptas.total_scaled_weight +
                                                 1));
      }
      EXPECT_TRUE(VerifyGuarantee(r.value_fptas, r.value_exact, sense,
                                  *r.fptas.epsilon));
      EXPECT_GT(r.exact.structure_bytes, 0u);
      EXPECT_EQ(r.exact.wall_time_ms, 0);
    }
  }
}

TEST(BenchCompareTest, HalvingEpsilonAtMostDoublesCellBound) {
  BenchConfig c = SmallConfig(ProblemKind::kMinKnapsack);
  c.n_list = {30};
  c.epsilon_list = {Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  c.weight_max = 1'000'000;
  const auto rows = BenchCompare(c);
  for (std::size_t i = 0; i + c.seeds.size() < rows.size(); ++i) {
    const auto& coarse = rows[i];
    const auto& fine = rows[i + c.seeds.size()];
    ASSERT_EQ(coarse.seed, fine.seed);
    const Weight n = coarse.exact.n;
    EXPECT_LE(fine.scaled_weight_bound,
              2 * coarse.scaled_weight_bound + n * n + 2 * n);
    EXPECT_LE(fine.fptas.dp_cells,
              static_cast<std::uint64_t>(n * (fine.scaled_weight_bound + 1)));
  }
}

TEST(BenchCompareTest, ReproducibleCsv) {
  const BenchConfig c = SmallConfig(ProblemKind::kMaxKnapsack);
  const std::string first = Csv(BenchCompare(c));
  EXPECT_EQ(first, Csv(BenchCompare(c)));
  EXPECT_EQ(first.substr(0, first.find('\n')), kBenchCsvHeader);
}

TEST(BenchCompareTest, BudgetExceeded) {
  BenchConfig c = SmallConfig(ProblemKind::kMinKnapsack);
  c.cell_budget = 100;
  EXPECT_THROW(BenchCompare(c), BudgetExceeded);
}

TEST(WriteBenchCsvTest, FallbackRowLeavesWprimeEmpty) {
  BenchRow row;
  row.exact.n = 3;
  row.exact.total_weight = 12;
  row.exact.dp_cells = 39;
  row.fptas.epsilon = Rational(1, 100);
  row.fptas.dp_cells = 39;
  row.fptas.approx_steps = 9;
  row.scaled_weight_bound = 1815;
  row.value_exact = 7;
  row.value_fptas = 7;
  row.seed = 4;
  const std::string csv = Csv({row});
  EXPECT_EQ(csv.substr(csv.find('\n') + 1),
            "minkp,3,1,100,4,12,,1815,39,39,9,7,7,1,1,0,0\n");
}

// CLI surface: exit codes and byte-identical output for fixed seeds.

int RunCli(const std::string& args) {
  const std::string cmd =
      std::string(SUBSEL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("subsel_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, ExitCodes) {
  const auto ok = Write("ok.txt", "minkp 3 5\n3 2\n5 4\n4 3\n");
  const auto bad = Write("bad.txt", "minkp 1 5\n0 2\n");
  const auto junk = Write("junk.txt", "minkp one 5\n");
  const auto infeasible = Write("inf.txt", "minkp 1 5\n3 2\n");
  EXPECT_EQ(RunCli("solve " + ok.string()), 0);
  EXPECT_EQ(RunCli("approx " + ok.string()), 0);
  EXPECT_EQ(RunCli("fptas " + ok.string() + " --eps 1/10"), 0);
  EXPECT_EQ(RunCli("solve " + bad.string()), 2);
  EXPECT_EQ(RunCli("solve " + junk.string()), 2);
  EXPECT_EQ(RunCli("fptas " + ok.string() + " --eps 0/1"), 2);
  EXPECT_EQ(RunCli("fptas " + ok.string()), 2);
  EXPECT_EQ(RunCli("solve " + infeasible.string()), 3);
  EXPECT_EQ(RunCli("fptas " + infeasible.string() + " --eps 1/2"), 3);
  EXPECT_EQ(RunCli("bench --kind minkp --n-list 10 --eps-list 1/2 --wmax 1000 "
                   "--seeds 1 --budget 50 --out " +
                   (dir_ / "m.csv").string()),
            4);
}

TEST_F(CliTest, SolveOutput) {
  const auto ok = Write("ok.txt", "minkp 3 5\n3 2\n5 4\n4 3\n");
  const auto out = dir_ / "out.txt";
  const std::string cmd = std::string(SUBSEL_CLI_PATH) + " solve " +
                          ok.string() + " > " + out.string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  const std::string text = ReadFile(out);
  EXPECT_NE(text.find("value 7\nselected 0 2\nfeasible 1\n"), std::string::npos)
      << text;
}

TEST_F(CliTest, GenAndBenchAreByteIdentical) {
  const std::string gen = "gen --kind maxkp --n 12 --wmax 100 --smax 10 "
                          "--tight 1/2 --seed 1 --out ";
  ASSERT_EQ(RunCli(gen + (dir_ / "a.txt").string()), 0);
  ASSERT_EQ(RunCli(gen + (dir_ / "b.txt").string()), 0);
  EXPECT_EQ(ReadFile(dir_ / "a.txt"), ReadFile(dir_ / "b.txt"));
  EXPECT_EQ(ReadFile(dir_ / "a.txt").substr(0, 9), "maxkp 12 ");
  EXPECT_EQ(RunCli("solve " + (dir_ / "a.txt").string()), 0);

  const std::string bench = "bench --kind minkp --n-list 5,10 "
                            "--eps-list 1/2,1/10 --wmax 5000 --seeds 1,2 "
                            "--out ";
  ASSERT_EQ(RunCli(bench + (dir_ / "a.csv").string()), 0);
  ASSERT_EQ(RunCli(bench + (dir_ / "b.csv").string()), 0);
  const std::string csv = ReadFile(dir_ / "a.csv");
  EXPECT_EQ(csv, ReadFile(dir_ / "b.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 2 * 2);
}

}  // namespace
}  // namespace subsel

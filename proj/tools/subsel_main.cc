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

// Command-line front end: exact / approximate / scheme solves of instance
// files, instance generation, the work-comparison benchmark and the oracle
// self-test.
//
// Exit codes: 0 success, 1 other failure, 2 parse/validation error,
// 3 infeasible instance, 4 cell budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "subsel/bench.h"
#include "subsel/errors.h"
#include "subsel/generator.h"
#include "subsel/instance_io.h"
#include "subsel/max_knapsack.h"
#include "subsel/min_knapsack.h"
#include "subsel/selftest.h"

namespace {

using namespace subsel;

enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kBadInput = 2,
  kInfeasible = 3,
  kOverBudget = 4,
};

template <typename T>
std::vector<T> SplitList(const std::string& text,
                         T (*parse)(const std::string&)) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse(item));
  }
  if (out.empty()) throw DomainError("empty list '" + text + "'");
  return out;
}

std::int64_t ToInt(const std::string& s) { return std::stoll(s); }
std::uint64_t ToUint(const std::string& s) { return std::stoull(s); }
Rational ToRational(const std::string& s) { return Rational::Parse(s); }

void PrintReport(const SolutionReport& r) {
  std::cout << "value " << r.value << '\n' << "selected";
  for (const std::size_t i : r.selected) std::cout << ' ' << i;
  std::cout << '\n'
            << "feasible " << (r.feasible ? 1 : 0) << '\n'
            << "guarantee " << r.guarantee << '\n'
            << "bound " << r.bound_used << '\n'
            << "dp_cells " << r.work.dp_cells << '\n'
            << "approx_steps " << r.work.approx_steps << '\n';
  if (r.work.scaled_total_weight) {
    std::cout << "scaled_total_weight " << *r.work.scaled_total_weight << '\n';
  }
}

struct Exact {
  SolutionReport operator()(const MinKnapsackInstance& i) const {
    return ExactDpMin(i);
  }
  SolutionReport operator()(const MaxKnapsackInstance& i) const {
    return ExactDpMax(i);
  }
};

struct Approx {
  SolutionReport operator()(const MinKnapsackInstance& i) const {
    return Approx2Min(i);
  }
  SolutionReport operator()(const MaxKnapsackInstance& i) const {
    return ApproxHalfMax(i);
  }
};

struct Scheme {
  Rational epsilon;
  SolutionReport operator()(const MinKnapsackInstance& i) const {
    return FptasMin(i, epsilon);
  }
  SolutionReport operator()(const MaxKnapsackInstance& i) const {
    return FptasMax(i, epsilon);
  }
};

void EmitText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight-scaling approximation schemes for knapsack problems"};
  app.require_subcommand(1);

  std::string file;
  auto* solve = app.add_subcommand("solve", "Exact DP solve of an instance");
  solve->add_option("file", file, "Instance file")->required();

  auto* approx = app.add_subcommand("approx", "Constant-ratio approximation");
  approx->add_option("file", file, "Instance file")->required();

  std::string eps_text;
  auto* fptas = app.add_subcommand("fptas", "Approximation scheme solve");
  fptas->add_option("file", file, "Instance file")->required();
  fptas->add_option("--eps", eps_text, "Accuracy as <num>/<den>")->required();

  std::string kind_text = "minkp";
  std::int64_t n = 0;
  Weight wmax = 0;
  Weight smax = 100;
  std::string tight_text = "1/2";
  std::uint64_t seed = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", kind_text, "minkp or maxkp")->required();
  gen->add_option("--n", n, "Number of items")->required();
  gen->add_option("--wmax", wmax, "Maximum weight")->required();
  gen->add_option("--smax", smax, "Maximum size")->required();
  gen->add_option("--tight", tight_text, "Demand/capacity fraction p/q")
      ->required();
  gen->add_option("--seed", seed, "RNG seed")->required();
  gen->add_option("--out", out_path, "Output file (stdout if omitted)");

  std::string n_list;
  std::string eps_list;
  std::string seed_list;
  std::uint64_t budget = BenchConfig{}.cell_budget;
  bool timing = false;
  auto* bench = app.add_subcommand("bench", "Exact vs scheme DP-cell counts");
  bench->add_option("--kind", kind_text, "minkp or maxkp")->required();
  bench->add_option("--n-list", n_list, "Comma-separated item counts")
      ->required();
  bench->add_option("--eps-list", eps_list, "Comma-separated p/q accuracies")
      ->required();
  bench->add_option("--wmax", wmax, "Maximum weight")->required();
  bench->add_option("--seeds", seed_list, "Comma-separated seeds")->required();
  bench->add_option("--out", out_path, "CSV output (stdout if omitted)");
  bench->add_option("--smax", smax, "Maximum size");
  bench->add_option("--tight", tight_text, "Demand/capacity fraction p/q");
  bench->add_option("--budget", budget, "Cell budget for the exact baseline");
  bench->add_flag("--timing", timing, "Record wall-clock milliseconds");

  int selftest_count = 200;
  auto* selftest = app.add_subcommand("selftest", "Run the oracle suites");
  selftest->add_option("--count", selftest_count, "Instances per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*solve) {
      PrintReport(std::visit(Exact{}, ReadInstanceFile(file)));
    } else if (*approx) {
      PrintReport(std::visit(Approx{}, ReadInstanceFile(file)));
    } else if (*fptas) {
      const Rational eps = Rational::Parse(eps_text);
      PrintReport(std::visit(Scheme{eps}, ReadInstanceFile(file)));
    } else if (*gen) {
      const GeneratorConfig config{.kind = ParseProblemKind(kind_text),
                                   .n = n,
                                   .weight_max = wmax,
                                   .size_max = smax,
                                   .tightness = Rational::Parse(tight_text),
                                   .seed = seed};
      EmitText(out_path, SerializeInstance(GenerateInstance(config)));
    } else if (*bench) {
      BenchConfig config;
      config.kind = ParseProblemKind(kind_text);
      config.n_list = SplitList<std::int64_t>(n_list, ToInt);
      config.epsilon_list = SplitList<Rational>(eps_list, ToRational);
      config.weight_max = wmax;
      config.size_max = smax;
      config.tightness = Rational::Parse(tight_text);
      config.seeds = SplitList<std::uint64_t>(seed_list, ToUint);
      config.cell_budget = budget;
      config.record_time = timing;
      std::ostringstream csv;
      WriteBenchCsv(csv, BenchCompare(config));
      EmitText(out_path, csv.str());
    } else if (*selftest) {
      return RunSelfTest(std::cout, selftest_count) ? kOk : kFailure;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid instance: " << e.what() << '\n';
    return kBadInput;
  } catch (const DomainError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kBadInput;
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kOverBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

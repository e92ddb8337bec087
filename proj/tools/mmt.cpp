// Copyright 2026 The mmt Authors.
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

// mmt verify --theorem mmt --n 2 --order 4 --json
// mmt verify --all --n 1 --n-prime 1 --order 2
// mmt verify --theorem subpperm --n 3 --n-prime 2 --order 8 --mode modular --seed 7 --seeds 20
// mmt eval --matrix m.json
// mmt sequences --kind d --rmax 7
// mmt explain --n 2 --order 3 --kind full

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mmt/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for MacMahon-type permanent identities"};
  app.require_subcommand(1);

  mmt::RunConfig config;
  std::string mode = "symbolic";
  bool all = false;
  bool no_timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Matrix size n");
    sub->add_option("--order", config.order, "Truncation order (vertex count N for explain)");
    sub->add_flag("--json", config.json, "Emit JSON");
    sub->add_option("--out", config.out_path, "Write output to this file");
  };

  CLI::App* verify = app.add_subcommand("verify", "Check identities");
  add_common(verify);
  verify->add_option("--theorem", config.theorem,
                     "mmt|sub|pperm|subpperm|der|subder|remark|lemma|prop1|oracle|trace|all");
  verify->add_flag("--all", all, "Same as --theorem all");
  verify->add_option("--n-prime", config.n_prime, "Size n' of the B block");
  verify->add_option("--mode", mode, "symbolic|modular");
  verify->add_option("--modulus", config.modulus, "Prime modulus for modular mode");
  verify->add_option("--seed", config.seed, "First seed for modular mode");
  verify->add_option("--seeds", config.seeds, "Number of consecutive seeds for modular mode");
  verify->add_option("--kind", config.kind, "Graph kind for the oracle: full|partial|derangement");
  verify->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-stable output");

  CLI::App* eval = app.add_subcommand("eval", "Permanent variants of a matrix file");
  eval->add_option("--matrix", config.matrix_path, "JSON matrix file")->required();
  eval->add_flag("--json", config.json, "Emit JSON");
  eval->add_option("--out", config.out_path, "Write output to this file");

  CLI::App* sequences = app.add_subcommand("sequences", "p_r and d_r tables");
  sequences->add_option("--kind", config.kind, "p|d");
  sequences->add_option("--rmax", config.r_max, "Largest r");
  sequences->add_flag("--json", config.json, "Emit JSON");
  sequences->add_option("--out", config.out_path, "Write output to this file");

  CLI::App* explain = app.add_subcommand("explain", "Graph-class decomposition");
  add_common(explain);
  explain->add_option("--kind", config.kind, "full|partial|derangement");

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) config.command = mmt::Command::kVerify;
  if (eval->parsed()) config.command = mmt::Command::kEval;
  if (sequences->parsed()) config.command = mmt::Command::kSequences;
  if (explain->parsed()) config.command = mmt::Command::kExplain;
  if (all) config.theorem = "all";
  config.timing = !no_timing;
  const auto parsed_mode = mmt::mode_from_name(mode);
  if (!parsed_mode) {
    std::cerr << "error: unknown mode '" << mode << "' (symbolic|modular)\n";
    return 2;
  }
  config.mode = *parsed_mode;
  return mmt::run(config, std::cout, std::cerr);
}

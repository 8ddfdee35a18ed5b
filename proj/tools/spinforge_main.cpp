// Copyright 2026 The spinforge authors
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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinforge/cli.hpp"

namespace {

using spinforge::cli::RunConfig;

// Registers a flag that lands in the flat config map only when passed, so
// config-file values survive unless explicitly overridden.
void add_kv_option(CLI::App* app, RunConfig& cfg, const std::string& flag,
                   const std::string& key, const std::string& help) {
  app->add_option_function<std::string>(
         flag, [&cfg, key](const std::string& v) { cfg.set(key, v); }, help)
      ->type_name("TEXT");
}

void add_common_options(CLI::App* app, RunConfig& cfg, std::string& config_path) {
  app->add_option("--config", config_path, "flat key=value config file");
  add_kv_option(app, cfg, "--model", "model", "ring | mn");
  add_kv_option(app, cfg, "--n", "n", "ring site count");
  add_kv_option(app, cfg, "--j", "j", "ring bond coupling");
  add_kv_option(app, cfg, "--j01", "j01", "trimer coupling 0-1");
  add_kv_option(app, cfg, "--j12", "j12", "trimer coupling 1-2");
  add_kv_option(app, cfg, "--j20", "j20", "trimer coupling 2-0");
  add_kv_option(app, cfg, "--s-star", "s_star", "target total spin s*");
  add_kv_option(app, cfg, "--s-z-star", "s_z_star", "target spin-z s_z*");
  add_kv_option(app, cfg, "--c-s", "c_s", "penalty strength C_S");
  add_kv_option(app, cfg, "--c-z", "c_z", "penalty strength C_z (default C_S(2s*+1))");
  add_kv_option(app, cfg, "--penalty", "penalty_kind", "linear | quartic");
  add_kv_option(app, cfg, "--evolver", "evolver", "exact | trotter");
  add_kv_option(app, cfg, "--sample-every", "sample_every", "sampling cadence");
  add_kv_option(app, cfg, "--output", "output", "output CSV path");
  add_kv_option(app, cfg, "--dump-hamiltonian", "dump_hamiltonian",
                "write H_problem in text form to this path");
  add_kv_option(app, cfg, "--dump-state", "dump_state",
                "write the final state as an amplitude CSV (debugging)");
  add_kv_option(app, cfg, "--initial-sz", "initial_sz",
                "comma-separated per-site Sz labels for the initial state");
}

int dispatch(const RunConfig& cfg) {
  const spinforge::cli::RunResult result = spinforge::cli::run(cfg);
  if (!result.message.empty()) std::cout << result.message << '\n';
  for (const auto& path : result.artifacts) std::cout << "wrote " << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-adapted ground-state preparation experiments"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  CLI::App* ate = app.add_subcommand("ate", "adiabatic evolution run");
  add_common_options(ate, cfg, config_path);
  add_kv_option(ate, cfg, "--t", "t", "total evolution time T");
  add_kv_option(ate, cfg, "--steps", "steps", "number of steps");
  add_kv_option(ate, cfg, "--dt-rule", "dt_rule", "sine_squared | constant");
  add_kv_option(ate, cfg, "--dt-amplitude", "dt_amplitude", "sine-squared amplitude");
  add_kv_option(ate, cfg, "--dt", "dt", "constant step size");
  add_kv_option(ate, cfg, "--extra-fidelity", "extra_fidelity",
                "also record fidelity against the final ground subspace (0|1)");

  CLI::App* pite = app.add_subcommand("pite", "probabilistic imaginary-time run");
  add_common_options(pite, cfg, config_path);
  add_kv_option(pite, cfg, "--steps", "steps", "number of steps");
  add_kv_option(pite, cfg, "--dt", "dt", "imaginary-time step");
  add_kv_option(pite, cfg, "--m0", "m0", "success amplitude m0");
  add_kv_option(pite, cfg, "--seed", "seed", "enable seeded sampling mode");

  CLI::App* post = app.add_subcommand("postselect", "spin-z rotation + projection");
  add_common_options(post, cfg, config_path);
  add_kv_option(post, cfg, "--input", "input", "input amplitude CSV");
  add_kv_option(post, cfg, "--circuit", "circuit",
                "use the Hamming-weight circuit (1) or direct projector (0)");

  CLI::App* scaling = app.add_subcommand("scaling", "penalty gate-cost scaling sweep");
  add_common_options(scaling, cfg, config_path);
  add_kv_option(scaling, cfg, "--dt", "dt", "recorded time step");
  add_kv_option(scaling, cfg, "--m0", "m0", "recorded m0");
  add_kv_option(scaling, cfg, "--fit-output", "fit_output", "fit summary JSON path");

  CLI::App* spectrum = app.add_subcommand("spectrum", "exact spectrum with spin labels");
  add_common_options(spectrum, cfg, config_path);
  add_kv_option(spectrum, cfg, "--levels", "levels", "number of levels to print");

  CLI::App* sweep = app.add_subcommand("sweep", "run a batch of config files");
  std::vector<std::string> sweep_configs;
  std::string index_path = "sweep_index.csv";
  std::size_t parallelism = 1;
  sweep->add_option("--configs", sweep_configs, "config files to run")->required();
  sweep->add_option("--index", index_path, "index CSV path");
  sweep->add_option("-k,--parallelism", parallelism, "worker count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      const auto entries = spinforge::cli::sweep(sweep_configs, parallelism, index_path);
      bool all_ok = true;
      for (const auto& e : entries) {
        std::cout << e.config_path << ": " << e.status;
        if (!e.message.empty()) std::cout << " (" << e.message << ")";
        std::cout << '\n';
        all_ok = all_ok && e.status == "ok";
      }
      std::cout << "wrote " << index_path << '\n';
      return all_ok ? 0 : 1;
    }

    RunConfig merged;
    if (!config_path.empty()) merged = RunConfig::from_file(config_path);
    for (const auto& [k, v] : cfg.entries()) merged.set(k, v);  // flags win
    for (CLI::App* sub : {ate, pite, post, scaling, spectrum}) {
      if (sub->parsed()) {
        merged.set("experiment", sub->get_name());
        break;
      }
    }
    return dispatch(merged);
  } catch (const spinforge::Error& e) {
    std::cerr << "error kind=" << static_cast<int>(e.kind()) << " " << e.what() << '\n';
    return spinforge::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error " << e.what() << '\n';
    return 3;
  }
}

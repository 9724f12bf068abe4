// Copyright 2026 The rykick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// rykick: command-line front end for mode analysis, waveform synthesis and
// the reproduction pipelines.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "output.hpp"
#include "rykick/error.hpp"

namespace {

using namespace rykick;
using namespace rykick::cli;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

int fail(int status, const std::string& code, const std::string& message) {
  const Json j = {{"error", code}, {"message", message}, {"exit_code", status}};
  std::cerr << j.dump() << '\n';
  return status;
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation:
    case ErrorCode::kUnstableTrap:
    case ErrorCode::kInsufficientSlices:
    case ErrorCode::kInsufficientTerms:
      return kExitValidation;
    case ErrorCode::kLinearInstability:
    case ErrorCode::kNoConvergence:
    case ErrorCode::kEmptyNullSpace:
      return kExitNumerical;
  }
  return kExitNumerical;
}

struct Flags {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<int> threads;
  std::optional<double> tg_us;
  std::optional<std::string> method;
  std::optional<std::string> boundary;
  std::optional<int> n_slices;
  std::optional<int> n_terms;
  std::optional<int> n_ions;
  std::optional<std::vector<int>> pair;
};

RunConfig resolve(const Flags& f) {
  RunConfig config;
  std::string path = f.config_path;
  if (path.empty())
    if (const char* env = std::getenv("RYKICK_CONFIG")) path = env;
  if (!path.empty()) config = load_config(path);
  nlohmann::json overrides = nlohmann::json::object();
  if (f.out_dir) overrides["output_dir"] = *f.out_dir;
  if (f.threads) overrides["threads"] = *f.threads;
  if (f.tg_us) overrides["gate_time_us"] = *f.tg_us;
  if (f.method) overrides["method"] = *f.method;
  if (f.boundary) overrides["boundary"] = *f.boundary;
  if (f.n_slices) overrides["n_slices"] = *f.n_slices;
  if (f.n_terms) overrides["n_terms"] = *f.n_terms;
  if (f.n_ions) overrides["n_ions"] = *f.n_ions;
  if (f.pair) {
    if (f.pair->size() != 2) throw Error(ErrorCode::kValidation, "--pair takes two 0-based ion indices");
    overrides["pair_first"] = (*f.pair)[0];
    overrides["pair_second"] = (*f.pair)[1];
  }
  apply_json(config, overrides);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rykick: Rydberg-ion gate waveform toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("-c,--config", flags.config_path, "flat JSON config (default: $RYKICK_CONFIG)");
  app.add_option("-o,--out-dir", flags.out_dir, "output directory");
  app.add_option("-j,--threads", flags.threads, "worker cap, 0 = all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--tg-us", flags.tg_us, "gate time in microseconds");
  app.add_option("--method", flags.method, "slices or fourier");
  app.add_option("--boundary", flags.boundary, "none, zero_endpoints or antisymmetric");
  app.add_option("--n-slices", flags.n_slices, "slice count");
  app.add_option("--n-terms", flags.n_terms, "Fourier term count");
  app.add_option("--n-ions", flags.n_ions, "crystal size");
  app.add_option("--pair", flags.pair, "gate ions, 0-based")->expected(2)->delimiter(',');

  std::string waveform_path;
  std::string target;
  auto* modes = app.add_subcommand("modes", "normal modes of the four pair states");
  auto* four_kick = app.add_subcommand("four-kick", "commensurate four-kick gate");
  auto* optimize = app.add_subcommand("optimize", "synthesize the optimal continuous waveform");
  auto* simulate = app.add_subcommand("simulate", "simulate a waveform written by optimize");
  simulate->add_option("waveform", waveform_path, "waveform JSON")->required();
  auto* scan = app.add_subcommand("scan-pairs", "synthesize every ion pair of the crystal");
  auto* feasibility = app.add_subcommand("feasibility", "check a synthesized gate against the limits");
  auto* scaling = app.add_subcommand("scaling", "minimal gate time versus principal quantum number");
  auto* config = app.add_subcommand("config", "print the default configuration");
  auto* reproduce = app.add_subcommand("reproduce", "reference reproduction pipelines");
  reproduce->add_option("target", target, "table1, fig2, fig3 or fig4")
      ->required()
      ->check(CLI::IsMember({"table1", "fig2", "fig3", "fig4"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitValidation, "Usage", e.what());
  }

  try {
    if (config->parsed()) {
      std::cout << default_config_json().dump(2) << '\n';
      return 0;
    }
    const RunConfig cfg = resolve(flags);
    std::filesystem::create_directories(cfg.output_dir);
    CommandResult result;
    if (modes->parsed()) result = run_modes(cfg);
    else if (four_kick->parsed()) result = run_four_kick(cfg);
    else if (optimize->parsed()) result = run_optimize(cfg);
    else if (simulate->parsed()) result = run_simulate(cfg, waveform_path);
    else if (scan->parsed()) result = run_scan_pairs(cfg);
    else if (feasibility->parsed()) result = run_feasibility(cfg);
    else if (scaling->parsed()) result = run_scaling(cfg);
    else if (reproduce->parsed()) result = run_reproduce(cfg, target);
    std::cout << result.summary.dump(2) << '\n';
    return result.status;
  } catch (const Error& e) {
    return fail(exit_status(e.code()), std::string(to_string(e.code())), e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(kExitValidation, "Io", e.what());
  } catch (const std::exception& e) {
    return fail(kExitNumerical, "Internal", e.what());
  }
}

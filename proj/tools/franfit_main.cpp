// Copyright 2026 The franfit Authors
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

// franfit: fit closing-price distributions and compare franchise cohorts.
//
//   franfit fit          --config C --ticker T
//   franfit cohort       --config C
//   franfit fundamentals --config C
//   franfit plot         --config C --ticker T --kind price|pdf|qq
//   franfit demo         --out DIR [--seed N]
//
// Global overrides: --seed, --recession-window A..B, --dispersion LO,HI.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "franfit/commands.hpp"
#include "franfit/config.hpp"
#include "franfit/demo.hpp"
#include "franfit/error.hpp"

int main(int argc, char** argv) {
  using namespace franfit;

  CLI::App app{"Closing-price distribution fitting for franchise cohorts"};
  app.require_subcommand(1);
  app.fallthrough();  // global overrides may follow the subcommand

  std::optional<std::uint64_t> seed;
  std::optional<std::string> recession;
  std::optional<std::string> dispersion;
  app.add_option("--seed", seed, "Override the configured seed");
  app.add_option("--recession-window", recession, "Recession window START..END");
  app.add_option("--dispersion", dispersion, "Dispersion thresholds LOW_MAX,HIGH_MIN");

  std::string config_path, ticker, kind, demo_out = "franfit-demo";

  auto* fit = app.add_subcommand("fit", "Fit every family to one ticker");
  fit->add_option("--config", config_path)->required();
  fit->add_option("--ticker", ticker)->required();

  auto* cohort = app.add_subcommand("cohort", "Summarize the universe by franchise class");
  cohort->add_option("--config", config_path)->required();

  auto* fundamentals = app.add_subcommand("fundamentals", "Normalize annual metrics");
  fundamentals->add_option("--config", config_path)->required();

  auto* plot = app.add_subcommand("plot", "Render a single SVG plot");
  plot->add_option("--config", config_path)->required();
  plot->add_option("--ticker", ticker)->required();
  plot->add_option("--kind", kind)->required()->check(CLI::IsMember({"price", "pdf", "qq"}));

  auto* demo = app.add_subcommand("demo", "Write a synthetic fixture tree");
  demo->add_option("--out", demo_out, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitSchema;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*demo) {
      const auto conf = WriteDemoTree(demo_out, seed.value_or(0));
      std::cout << conf.string() << '\n';
      return kExitOk;
    }
    RunConfig cfg = LoadRunConfig(config_path);
    if (seed) cfg.seed = *seed;
    if (recession) cfg.recession_window = ParseDateWindow(*recession);
    if (dispersion) cfg.dispersion_thresholds = ParseDispersionThresholds(*dispersion);

    if (*fit) return CmdFit(cfg, ticker, std::cerr);
    if (*cohort) return CmdCohort(cfg, std::cerr);
    if (*fundamentals) return CmdFundamentals(cfg, std::cerr);
    return CmdPlot(cfg, ticker, kind, std::cerr);
  } catch (const Error& e) {
    ReportError(std::cerr, command, e.code(), e.what());
    return ExitCodeFor(e.code());
  }
}

// Copyright 2026 The puretomo Authors
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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "puretomo/experiments.hpp"
#include "puretomo/mub.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;
constexpr int kExitUnsupportedDimension = 4;

// Per-subcommand option storage: each study carries its own defaults.
struct StudyArgs {
  puretomo::ExperimentConfig config;
  std::size_t dim = 0;
  std::vector<std::size_t> dims;
  std::string out_path;
  std::string state_spec = "random";
  CLI::Option* dark_option = nullptr;
};

void add_common(CLI::App* cmd, StudyArgs& args, std::size_t default_trials,
                const char* default_out) {
  cmd->add_option("--trials", args.config.trials, "Monte Carlo trials")
      ->default_val(default_trials);
  cmd->add_option("--mu", args.config.mu, "mean photons per pulse")
      ->default_val(0.18);
  cmd->add_option("--pulses", args.config.pulses, "pulses per setting")
      ->default_val(50000);
  cmd->add_option("--seed", args.config.seed,
                  "base seed for the trial streams")
      ->default_val(1);
  cmd->add_flag("--exact", args.config.exact_mode,
                "use exact Born probabilities instead of simulated counts");
  cmd->add_option("--threads", args.config.threads,
                  "worker threads (0 = hardware)")
      ->default_val(0);
  cmd->add_option("--out", args.out_path, "output CSV path")
      ->default_val(default_out);
  args.dark_option =
      cmd->add_option("--dark", args.config.dark_rates,
                      "mean dark counts per pulse")
          ->delimiter(',');
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open output file: " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::ios_base::failure("failed writing output file: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "puretomo: adaptive 4d-3 outcome tomography of pure qudit states, with "
      "a photon-counting noise model, purity certification, and a "
      "mutually-unbiased-bases baseline"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read option defaults from an INI/TOML file")
      ->configurable(false);

  StudyArgs compare_args, fid_args, vis_args, single_args;

  CLI::App* compare = app.add_subcommand(
      "compare", "adaptive vs MUB tomography of the same states");
  add_common(compare, compare_args, 200, "compare.csv");
  compare->add_option("--dim", compare_args.dim, "qudit dimension (prime)")
      ->default_val(7);

  CLI::App* fid = app.add_subcommand(
      "fid-vs-dim", "reconstruction fidelity across dimensions and dark rates");
  add_common(fid, fid_args, 2000, "fid_vs_dim.csv");
  fid->add_option("--dims", fid_args.dims, "dimension grid")->delimiter(',');

  CLI::App* vis = app.add_subcommand(
      "vis-vs-purity", "purity-certificate residual vs white-noise purity");
  add_common(vis, vis_args, 2000, "vis_vs_purity.csv");
  vis->add_option("--dim", vis_args.dim, "qudit dimension")->default_val(8);
  vis->add_option("--lambda-grid", vis_args.config.lambda_grid,
                  "white-noise weights in [0,1]")
      ->delimiter(',');

  CLI::App* single = app.add_subcommand(
      "single", "one tomography run of an explicit state, reported in full");
  add_common(single, single_args, 1, "");
  single->add_option("--dim", single_args.dim, "qudit dimension")
      ->default_val(4);
  single->add_option("--state", single_args.state_spec,
                     "uniform | basis-K | random | amplitude list "
                     "(e.g. \"0.5,0.5i,-0.5,0.5\")");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  try {
    if (compare->parsed()) {
      StudyArgs& args = compare_args;
      if (args.dark_option->count() == 0) args.config.dark_rates = {0.0};
      args.config.dims = {args.dim};
      std::ofstream out = open_output(args.out_path);
      const puretomo::CompareSummary summary =
          puretomo::run_method_comparison(args.config, out);
      finish_output(out, args.out_path);
      std::cout << "compare: dim=" << summary.dim
                << " trials=" << summary.trials << " mean_fidelity_adaptive="
                << puretomo::format_double(summary.mean_fidelity_adaptive)
                << " mean_fidelity_mub="
                << puretomo::format_double(summary.mean_fidelity_mub)
                << " outcomes=" << summary.outcomes_adaptive << "/"
                << summary.outcomes_mub << "\nwrote " << args.out_path << "\n";
    } else if (fid->parsed()) {
      StudyArgs& args = fid_args;
      args.config.dims = args.dims.empty()
                             ? std::vector<std::size_t>{4, 8, 16}
                             : args.dims;
      std::ofstream out = open_output(args.out_path);
      const auto cells = puretomo::run_fidelity_vs_dimension(args.config, out);
      finish_output(out, args.out_path);
      for (const auto& cell : cells)
        std::cout << "fid-vs-dim: dim=" << cell.dim << " dark="
                  << puretomo::format_double(cell.dark_rate) << " mean="
                  << puretomo::format_double(cell.mean_fidelity) << " stddev="
                  << puretomo::format_double(cell.stddev_fidelity) << "\n";
      std::cout << "wrote " << args.out_path << "\n";
    } else if (vis->parsed()) {
      StudyArgs& args = vis_args;
      if (args.dark_option->count() == 0) args.config.dark_rates = {0.0};
      args.config.dims = {args.dim};
      std::ofstream out = open_output(args.out_path);
      const auto cells = puretomo::run_visibility_vs_purity(args.config, out);
      finish_output(out, args.out_path);
      for (const auto& cell : cells)
        std::cout << "vis-vs-purity: lambda="
                  << puretomo::format_double(cell.lambda) << " purity="
                  << puretomo::format_double(cell.purity) << " mean_residual="
                  << puretomo::format_double(cell.mean_max_residual) << "\n";
      std::cout << "wrote " << args.out_path << "\n";
    } else if (single->parsed()) {
      StudyArgs& args = single_args;
      if (args.dark_option->count() == 0) args.config.dark_rates = {0.0};
      args.config.dims = {args.dim};
      if (args.out_path.empty()) {
        puretomo::run_single_shot(args.config, args.state_spec, std::cout);
      } else {
        std::ofstream out = open_output(args.out_path);
        puretomo::run_single_shot(args.config, args.state_spec, std::cout,
                                  &out);
        finish_output(out, args.out_path);
        std::cout << "wrote " << args.out_path << "\n";
      }
    }
  } catch (const puretomo::UnsupportedDimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupportedDimension;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return 0;
}

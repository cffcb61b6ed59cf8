// Copyright 2026 The swapchain authors.
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

#include "swapchain/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swapchain/config.hpp"
#include "swapchain/io.hpp"

namespace swapchain {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::filesystem::path resolve_out_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("SWAPCHAIN_OUT_DIR"); dir && *dir)
      p = std::filesystem::path(dir) / p;
  }
  return p;
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path path = resolve_out_path(out);
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write output file: " + path.string());
  file << text;
}

std::vector<double> parse_grid(const std::string& spec) {
  auto to_double = [&spec](const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid grid value '" + tok + "' in '" + spec + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("invalid grid value '" + tok + "' in '" + spec + "'");
    return v;
  };

  std::vector<double> grid;
  if (spec.find(',') != std::string::npos) {
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) grid.push_back(to_double(tok));
  } else if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ':')) parts.push_back(tok);
    if (parts.size() != 2 && parts.size() != 3)
      throw std::invalid_argument("grid must be start:stop or start:stop:step");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double step = parts.size() == 3 ? to_double(parts[2]) : 1.0;
    if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
    if (stop < start) throw std::invalid_argument("grid stop is below start");
    for (double v = start; v <= stop + 1e-9 * step; v += step)
      grid.push_back(v);
  } else if (!spec.empty()) {
    grid.push_back(to_double(spec));
  }
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

struct CommonOptions {
  std::string preset_name;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> events_per_setting;
  bool analytic = false;
  std::string format = "json";
  std::string out;
  int verbosity = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool base_optional) {
  auto* preset = cmd->add_option("--preset", opts.preset_name,
                                 "Named preset (ideal, paper, pre-swap)");
  auto* config = cmd->add_option("--config", opts.config_path,
                                 "JSON config file (a report file also works)");
  preset->excludes(config);
  if (!base_optional) {
    // one of the two must be given; checked after parse
  }
  cmd->add_option("--seed", opts.seed, "Override the RNG seed");
  cmd->add_option("--events-per-setting", opts.events_per_setting,
                  "Override events recorded per setting");
  cmd->add_flag("--analytic", opts.analytic,
                "Exact expectations, no sampling");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out,
                  "Output file (relative paths resolve under SWAPCHAIN_OUT_DIR); "
                  "stdout when omitted");
  cmd->add_flag("-v,--verbose", opts.verbosity, "Verbose progress on stderr");
}

ExperimentPreset preset_from_options(const CommonOptions& opts) {
  if (!opts.config_path.empty()) {
    ExperimentPreset preset = load_preset_file(opts.config_path);
    return preset;
  }
  if (opts.preset_name.empty())
    throw std::invalid_argument("one of --preset or --config is required");
  return get_preset(opts.preset_name);
}

void apply_overrides(const CommonOptions& opts, ExperimentPreset& preset) {
  if (opts.seed) preset.seed = *opts.seed;
  if (opts.events_per_setting) {
    if (*opts.events_per_setting <= 0)
      throw std::invalid_argument("--events-per-setting must be positive");
    preset.events_per_setting = *opts.events_per_setting;
  }
  if (opts.analytic) preset.analytic = true;
}

int do_run(const CommonOptions& opts) {
  ExperimentPreset preset = preset_from_options(opts);
  apply_overrides(opts, preset);

  const RunReport report = run_preset(preset);
  if (opts.verbosity > 0) {
    std::cerr << "run '" << preset.name << "': witness(analytic) "
              << report.witness_analytic << ", success probability "
              << report.success_probability << "\n";
    if (report.witness)
      std::cerr << "  witness estimate " << report.witness->value << " +/- "
                << report.witness->stderr_value << "\n";
  }

  if (opts.format == "csv") {
    if (report.counts.empty())
      throw std::invalid_argument(
          "csv format needs sampled counts; analytic runs emit json only");
    write_output(counts_to_csv(report.counts), opts.out);
  } else {
    write_output(report_to_json(report), opts.out);
  }
  return kExitOk;
}

int do_sweep(const std::string& parameter_name, const std::string& grid_spec,
             const CommonOptions& opts) {
  const SweepParameter parameter = sweep_parameter_from_string(parameter_name);
  const std::vector<double> grid = parse_grid(grid_spec);

  ExperimentPreset base;
  if (!opts.config_path.empty() || !opts.preset_name.empty())
    base = preset_from_options(opts);
  else
    base = get_preset("ideal");
  apply_overrides(opts, base);

  const std::vector<SweepRow> rows = sweep(parameter, grid, base);
  if (opts.format == "csv")
    write_output(sweep_to_csv(parameter, rows), opts.out);
  else
    write_output(sweep_to_json(parameter, rows), opts.out);
  return kExitOk;
}

int do_tomo(const std::string& counts_path, int bootstrap_resamples,
            const CommonOptions& opts) {
  if (!counts_path.empty()) {
    std::ifstream in(counts_path);
    if (!in) throw std::invalid_argument("cannot open counts file: " + counts_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::vector<SettingOutcome> outcomes = counts_from_csv(buffer.str());

    // All nine axis pairs must be present with events.
    std::string missing;
    for (const Setting& s : tomography_settings()) {
      bool found = false;
      for (const auto& o : outcomes)
        if (o.setting == s && o.total() > 0) found = true;
      if (!found) missing += (missing.empty() ? "" : ", ") + setting_label(s);
    }
    if (!missing.empty())
      throw std::invalid_argument("counts file lacks settings: " + missing);

    MleOptions options;
    options.bootstrap_resamples = bootstrap_resamples;
    options.bootstrap_seed = derive_seed(opts.seed.value_or(1), "bootstrap");
    const TomographyResult result = mle_reconstruct(outcomes, options);
    if (opts.format == "csv")
      write_output(tomography_to_csv(result), opts.out);
    else
      write_output(tomography_to_json(result, counts_path, options.bootstrap_seed),
                   opts.out);
    return kExitOk;
  }

  ExperimentPreset preset = preset_from_options(opts);
  apply_overrides(opts, preset);
  preset.settings = tomography_settings();
  preset.tomography = true;
  preset.analytic = false;
  preset.bootstrap_resamples = bootstrap_resamples;

  const RunReport report = run_preset(preset);
  if (opts.format == "csv")
    write_output(tomography_to_csv(*report.tomography), opts.out);
  else
    write_output(report_to_json(report), opts.out);
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Multistage entanglement-swapping simulator and analysis toolkit"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a preset or config");
  add_common(run_cmd, run_opts, false);

  CommonOptions sweep_opts;
  std::string sweep_parameter, sweep_grid;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Sweep one parameter over a grid");
  sweep_cmd
      ->add_option("parameter", sweep_parameter,
                   "visibility | source-whiteness | background-fraction | n-pairs")
      ->required();
  sweep_cmd
      ->add_option("grid", sweep_grid,
                   "Grid spec: start:stop[:step] or comma-separated values")
      ->required();
  add_common(sweep_cmd, sweep_opts, true);

  CommonOptions tomo_opts;
  std::string tomo_counts;
  int tomo_bootstrap = 200;
  CLI::App* tomo_cmd =
      app.add_subcommand("tomo", "Two-qubit tomography with MLE reconstruction");
  tomo_cmd->add_option("--counts", tomo_counts,
                       "Counts CSV file (setting,outcome,count)");
  tomo_cmd->add_option("--bootstrap", tomo_bootstrap,
                       "Bootstrap resamples for error bars");
  add_common(tomo_cmd, tomo_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return do_run(run_opts);
    if (sweep_cmd->parsed()) return do_sweep(sweep_parameter, sweep_grid, sweep_opts);
    if (tomo_cmd->parsed()) {
      if (tomo_counts.empty() && tomo_opts.preset_name.empty() &&
          tomo_opts.config_path.empty())
        throw std::invalid_argument(
            "tomo needs one of --counts, --preset, or --config");
      return do_tomo(tomo_counts, tomo_bootstrap, tomo_opts);
    }
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "swapchain: config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "swapchain: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "swapchain: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace swapchain

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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swapchain/analysis.hpp"
#include "swapchain/noise.hpp"
#include "swapchain/protocol.hpp"
#include "swapchain/rng.hpp"

namespace swapchain {

/// Per-setting counts with the sub-stream seed they were drawn from.
struct CountRecord {
  SettingOutcome outcome;
  std::uint64_t seed = 0;
};

/// A named, reproducible experiment configuration.
struct ExperimentPreset {
  std::string name;
  int n_pairs = 3;
  NoiseModel noise = NoiseModel::ideal(3);
  std::int64_t events_per_setting = 60;
  std::vector<Setting> settings = witness_settings();
  std::uint64_t seed = 1;
  bool analytic = false;   // exact expectations, no sampling
  bool pre_swap = false;   // no BSM conditioning: photons (1, 2n) are I/4
  bool tomography = false; // run MLE reconstruction (requires 9 settings)
  int bootstrap_resamples = 200;
};

struct RunReport {
  ExperimentPreset preset;
  double success_probability = 0.0;
  double witness_analytic = 0.0;
  std::optional<WitnessEstimate> witness;  // absent in analytic mode
  double concurrence_analytic = 0.0;
  std::vector<CountRecord> counts;
  std::optional<TomographyResult> tomography;
  std::vector<std::string> notes;
};

/// Multinomial coincidence counts for one setting. Dark counts replace an
/// event with a uniform accidental outcome at the configured probability.
/// Deterministic for a fixed seed.
SettingOutcome simulate_counts(const Matrix& rho, Setting setting,
                               std::int64_t n_events, double dark_count_prob,
                               std::uint64_t seed);

/// Built-in presets: "ideal", "paper", "pre-swap".
const std::vector<ExperimentPreset>& preset_registry();
ExperimentPreset get_preset(const std::string& name);

/// End-to-end: chain -> background -> counting -> estimation.
RunReport run_preset(const ExperimentPreset& preset);
RunReport run_preset(const std::string& name);

enum class SweepParameter { Visibility, SourceWhiteness, BackgroundFraction, NPairs };

SweepParameter sweep_parameter_from_string(const std::string& name);
std::string to_string(SweepParameter p);

struct SweepRow {
  double value = 0.0;
  double witness = 0.0;
  double witness_stderr = 0.0;
  double success_probability = 0.0;
  double concurrence = 0.0;
};

/// One run per grid value; sub-seeds derived from the base preset seed.
std::vector<SweepRow> sweep(SweepParameter parameter,
                            const std::vector<double>& grid,
                            const ExperimentPreset& base);

/// Shared visibility that brings the analytic witness with background f to
/// `target`: solves (1-f)(-V^2/2) + f/4 = target by bisection on [0,1].
double calibrate_visibility(double target_witness, double background_fraction);

/// Noise model of the "paper" preset: shared visibility calibrated to the
/// measured witness -0.16 with background 10/180, ideal sources.
NoiseModel calibrate_paper_preset();

/// Monte Carlo estimate of the chain success probability from `attempts`
/// Bernoulli trials per stage; used to cross-check the exact bookkeeping.
double mc_success_probability(int n_pairs, const NoiseModel& noise,
                              std::int64_t attempts, std::uint64_t seed);

inline constexpr double kPaperWitnessTarget = -0.16;
inline constexpr double kPaperBackgroundFraction = 10.0 / 180.0;

}  // namespace swapchain

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

#include <stdexcept>
#include <string>

#include "swapchain/experiment.hpp"

namespace swapchain {

/// Config validation failure; `field` is the dotted path of the offender.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// JSON config document. Every key is optional; "preset" selects the base
/// preset the remaining keys override. Unknown keys are rejected.
///
///   {
///     "preset": "paper",
///     "n_pairs": 3,
///     "seed": 7,
///     "events_per_setting": 60,
///     "analytic": false,
///     "pre_swap": false,
///     "tomography": false,
///     "bootstrap_resamples": 200,
///     "settings": "witness" | "tomography" | ["ZZ", "XX", "YY"],
///     "noise": {
///       "visibility": 0.6 | [v1, v2],
///       "source_whiteness": 0.0 | [w1, w2, w3],
///       "background_fraction": 0.0555,
///       "dark_count_prob": 0.0
///     }
///   }
///
/// A full report document is also accepted; its embedded "config" object is
/// used, which makes every report re-runnable as-is.
ExperimentPreset preset_from_config_json(const std::string& json_text);

ExperimentPreset load_preset_file(const std::string& path);

}  // namespace swapchain

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

#include <doctest.h>

#include <string>

#include "swapchain/config.hpp"
#include "swapchain/experiment.hpp"
#include "swapchain/io.hpp"

using namespace swapchain;

TEST_CASE("counts CSV round-trips") {
  std::vector<SettingOutcome> outcomes;
  int v = 1;
  for (Setting s : tomography_settings()) {
    SettingOutcome o;
    o.setting = s;
    for (int k = 0; k < 4; ++k) o.counts[k] = v++;
    outcomes.push_back(o);
  }
  const std::string csv = counts_to_csv(outcomes);
  const auto parsed = counts_from_csv(csv);
  REQUIRE(parsed.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(parsed[i].setting == outcomes[i].setting);
    CHECK(parsed[i].counts == outcomes[i].counts);
  }
}

TEST_CASE("counts CSV diagnostics carry the line number") {
  CHECK_THROWS_WITH_AS(counts_from_csv("bogus\n"),
                       doctest::Contains("header"), std::invalid_argument);
  const std::string bad_setting = "setting,outcome,count\nQQ,pp,3\n";
  CHECK_THROWS_WITH_AS(counts_from_csv(bad_setting),
                       doctest::Contains("line 2"), std::invalid_argument);
  const std::string bad_outcome = "setting,outcome,count\nZZ,qq,3\n";
  CHECK_THROWS_WITH_AS(counts_from_csv(bad_outcome),
                       doctest::Contains("column 2"), std::invalid_argument);
  const std::string bad_count = "setting,outcome,count\nZZ,pp,many\n";
  CHECK_THROWS_WITH_AS(counts_from_csv(bad_count),
                       doctest::Contains("column 3"), std::invalid_argument);
  const std::string negative = "setting,outcome,count\nZZ,pp,-4\n";
  CHECK_THROWS_WITH_AS(counts_from_csv(negative),
                       doctest::Contains("negative"), std::invalid_argument);
}

TEST_CASE("report JSON is schema-stable and deterministic") {
  ExperimentPreset preset = get_preset("paper");
  preset.seed = 5;
  const RunReport report = run_preset(preset);
  const std::string a = report_to_json(report);
  const std::string b = report_to_json(report);
  CHECK(a == b);
  for (const char* field :
       {"\"schema\"", "\"generator\"", "\"config\"", "\"success_probability\"",
        "\"witness\"", "\"counts\"", "\"tomography\"", "\"notes\"", "\"seed\""})
    CHECK(a.find(field) != std::string::npos);
  CHECK(a.find("swapchain.report.v1") != std::string::npos);
  CHECK(a.find("xoshiro256**") != std::string::npos);
}

TEST_CASE("sweep CSV has the fixed column order") {
  std::vector<SweepRow> rows = {{0.5, -0.125, 0.0, 0.015625, 0.25}};
  const std::string csv = sweep_to_csv(SweepParameter::Visibility, rows);
  CHECK(csv.rfind("parameter,value,witness,witness_stderr,success_probability,"
                  "concurrence\n", 0) == 0);
  CHECK(csv.find("visibility,0.5,-0.125,0.0,0.015625,0.25") != std::string::npos);
}

TEST_CASE("config: preset base plus overrides") {
  const std::string text = R"({
    "preset": "paper",
    "seed": 11,
    "events_per_setting": 240,
    "noise": {"background_fraction": 0.0}
  })";
  const ExperimentPreset preset = preset_from_config_json(text);
  CHECK(preset.name == "paper");
  CHECK(preset.seed == 11);
  CHECK(preset.events_per_setting == 240);
  CHECK(preset.noise.background_fraction == 0.0);
  CHECK(preset.noise.bsm_visibility[0] ==
        get_preset("paper").noise.bsm_visibility[0]);
}

TEST_CASE("config: unknown keys are rejected with a field path") {
  CHECK_THROWS_WITH_AS(preset_from_config_json(R"({"sede": 1})"),
                       doctest::Contains("sede"), ConfigError);
  CHECK_THROWS_WITH_AS(
      preset_from_config_json(R"({"noise": {"visbility": 0.5}})"),
      doctest::Contains("noise.visbility"), ConfigError);
}

TEST_CASE("config: type and range validation") {
  CHECK_THROWS_AS(preset_from_config_json(R"({"seed": "seven"})"), ConfigError);
  CHECK_THROWS_AS(preset_from_config_json(R"({"n_pairs": 1})"), ConfigError);
  CHECK_THROWS_AS(preset_from_config_json(R"({"events_per_setting": 0})"),
                  ConfigError);
  CHECK_THROWS_AS(
      preset_from_config_json(R"({"noise": {"visibility": 1.5}})"), ConfigError);
  CHECK_THROWS_AS(
      preset_from_config_json(R"({"noise": {"visibility": [0.5]}})"),
      ConfigError);
  CHECK_THROWS_AS(preset_from_config_json(R"({"settings": []})"), ConfigError);
  CHECK_THROWS_AS(preset_from_config_json("not json"), ConfigError);
}

TEST_CASE("config: n_pairs rebuilds the noise vectors") {
  const ExperimentPreset preset = preset_from_config_json(
      R"({"preset": "ideal", "n_pairs": 4, "noise": {"visibility": [0.9, 0.8, 0.7]}})");
  CHECK(preset.n_pairs == 4);
  REQUIRE(preset.noise.bsm_visibility.size() == 3);
  CHECK(preset.noise.bsm_visibility[2] == 0.7);
  CHECK(preset.noise.source_whiteness.size() == 4);
}

TEST_CASE("config: settings forms") {
  CHECK(preset_from_config_json(R"({"settings": "tomography"})").settings.size() ==
        9);
  const ExperimentPreset preset =
      preset_from_config_json(R"({"settings": ["ZZ", "XY"]})");
  REQUIRE(preset.settings.size() == 2);
  CHECK(setting_label(preset.settings[1]) == "XY");
}

TEST_CASE("a report re-runs to the identical report") {
  ExperimentPreset preset = get_preset("paper");
  preset.seed = 31;
  const std::string report = report_to_json(run_preset(preset));
  const ExperimentPreset replayed = preset_from_config_json(report);
  CHECK(report_to_json(run_preset(replayed)) == report);
}

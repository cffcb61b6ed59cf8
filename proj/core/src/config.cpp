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

#include "swapchain/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace swapchain {

using nlohmann::json;

namespace {

void expect_keys(const json& obj, const std::string& path,
                 std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known)
      throw ConfigError(path.empty() ? key : path + "." + key, "unknown key");
  }
}

double get_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  return v.get<double>();
}

std::vector<double> get_number_or_list(const json& v, const std::string& path,
                                       std::size_t n) {
  std::vector<double> out;
  if (v.is_number()) {
    out.assign(n, v.get<double>());
  } else if (v.is_array()) {
    if (v.size() != n)
      throw ConfigError(path, "expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < v.size(); ++i)
      out.push_back(get_number(v[i], path + "[" + std::to_string(i) + "]"));
  } else {
    throw ConfigError(path, "expected a number or an array of numbers");
  }
  return out;
}

void apply_noise(const json& obj, ExperimentPreset& preset) {
  expect_keys(obj, "noise",
              {"visibility", "source_whiteness", "background_fraction",
               "dark_count_prob"});
  const std::size_t n_sources = preset.noise.source_whiteness.size();
  const std::size_t n_bsms = preset.noise.bsm_visibility.size();
  if (obj.contains("visibility"))
    preset.noise.bsm_visibility =
        get_number_or_list(obj["visibility"], "noise.visibility", n_bsms);
  if (obj.contains("source_whiteness"))
    preset.noise.source_whiteness = get_number_or_list(
        obj["source_whiteness"], "noise.source_whiteness", n_sources);
  if (obj.contains("background_fraction"))
    preset.noise.background_fraction =
        get_number(obj["background_fraction"], "noise.background_fraction");
  if (obj.contains("dark_count_prob"))
    preset.noise.dark_count_prob =
        get_number(obj["dark_count_prob"], "noise.dark_count_prob");
}

std::vector<Setting> parse_settings(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "witness") return witness_settings();
    if (s == "tomography") return tomography_settings();
    throw ConfigError("settings", "expected 'witness', 'tomography', or a list");
  }
  if (!v.is_array() || v.empty())
    throw ConfigError("settings", "expected a non-empty list of labels");
  std::vector<Setting> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string path = "settings[" + std::to_string(i) + "]";
    if (!v[i].is_string()) throw ConfigError(path, "expected a string label");
    try {
      out.push_back(setting_from_label(v[i].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path, e.what());
    }
  }
  return out;
}

ExperimentPreset preset_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "config root must be an object");

  // A report is accepted in place of a config: use its embedded echo.
  if (doc.contains("schema")) {
    if (!doc.contains("config"))
      throw ConfigError("config", "report document lacks an embedded config");
    return preset_from_json(doc["config"]);
  }

  expect_keys(doc, "",
              {"preset", "name", "n_pairs", "seed", "events_per_setting",
               "analytic", "pre_swap", "tomography", "bootstrap_resamples",
               "settings", "noise"});

  ExperimentPreset preset;
  std::string base = "custom";
  if (doc.contains("preset")) {
    if (!doc["preset"].is_string())
      throw ConfigError("preset", "expected a preset name");
    base = doc["preset"].get<std::string>();
  } else if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ConfigError("name", "expected a preset name");
    base = doc["name"].get<std::string>();
  }
  if (base != "custom") {
    try {
      preset = get_preset(base);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("preset", e.what());
    }
  } else {
    preset.name = "custom";
  }

  if (doc.contains("n_pairs")) {
    if (!doc["n_pairs"].is_number_integer())
      throw ConfigError("n_pairs", "expected an integer");
    const int n = doc["n_pairs"].get<int>();
    if (n < 2 || n > 6)
      throw ConfigError("n_pairs", "expected an integer in [2, 6]");
    if (n != preset.n_pairs) {
      // Rebuild the noise vectors for the new chain length, broadcasting the
      // current shared values.
      const double vis = preset.noise.bsm_visibility.empty()
                             ? 1.0
                             : preset.noise.bsm_visibility[0];
      const double white = preset.noise.source_whiteness.empty()
                               ? 0.0
                               : preset.noise.source_whiteness[0];
      preset.n_pairs = n;
      preset.noise = NoiseModel::shared(n, white, vis,
                                        preset.noise.background_fraction,
                                        preset.noise.dark_count_prob);
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      throw ConfigError("seed", "expected a non-negative integer");
    preset.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("events_per_setting")) {
    if (!doc["events_per_setting"].is_number_integer())
      throw ConfigError("events_per_setting", "expected an integer");
    const std::int64_t n = doc["events_per_setting"].get<std::int64_t>();
    if (n <= 0) throw ConfigError("events_per_setting", "must be positive");
    preset.events_per_setting = n;
  }
  for (const char* key : {"analytic", "pre_swap", "tomography"}) {
    if (doc.contains(key) && !doc[key].is_boolean())
      throw ConfigError(key, "expected a boolean");
  }
  if (doc.contains("analytic")) preset.analytic = doc["analytic"].get<bool>();
  if (doc.contains("pre_swap")) preset.pre_swap = doc["pre_swap"].get<bool>();
  if (doc.contains("tomography"))
    preset.tomography = doc["tomography"].get<bool>();
  if (doc.contains("bootstrap_resamples")) {
    if (!doc["bootstrap_resamples"].is_number_integer())
      throw ConfigError("bootstrap_resamples", "expected an integer");
    const int r = doc["bootstrap_resamples"].get<int>();
    if (r < 0) throw ConfigError("bootstrap_resamples", "must be >= 0");
    preset.bootstrap_resamples = r;
  }
  if (doc.contains("settings")) preset.settings = parse_settings(doc["settings"]);
  if (doc.contains("noise")) {
    if (!doc["noise"].is_object()) throw ConfigError("noise", "expected an object");
    apply_noise(doc["noise"], preset);
  }

  try {
    preset.noise.validate(preset.n_pairs);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("noise", e.what());
  }
  return preset;
}

}  // namespace

ExperimentPreset preset_from_config_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  return preset_from_json(doc);
}

ExperimentPreset load_preset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return preset_from_config_json(buffer.str());
}

}  // namespace swapchain

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

#include "swapchain/io.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace swapchain {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::array<const char*, 4> kOutcomeLabels = {"pp", "pm", "mp", "mm"};
constexpr std::array<const char*, 4> kPauliChars = {"I", "X", "Y", "Z"};

ordered_json noise_to_json(const NoiseModel& noise) {
  ordered_json j;
  j["visibility"] = noise.bsm_visibility;
  j["source_whiteness"] = noise.source_whiteness;
  j["background_fraction"] = noise.background_fraction;
  j["dark_count_prob"] = noise.dark_count_prob;
  return j;
}

ordered_json preset_to_json(const ExperimentPreset& preset) {
  ordered_json j;
  j["name"] = preset.name;
  j["n_pairs"] = preset.n_pairs;
  j["noise"] = noise_to_json(preset.noise);
  j["events_per_setting"] = preset.events_per_setting;
  std::vector<std::string> labels;
  labels.reserve(preset.settings.size());
  for (const Setting& s : preset.settings) labels.push_back(setting_label(s));
  j["settings"] = labels;
  j["seed"] = preset.seed;
  j["analytic"] = preset.analytic;
  j["pre_swap"] = preset.pre_swap;
  j["tomography"] = preset.tomography;
  j["bootstrap_resamples"] = preset.bootstrap_resamples;
  return j;
}

ordered_json pauli_table_to_json(const PauliTable& table) {
  ordered_json j;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      j[std::string(kPauliChars[i]) + kPauliChars[k]] = table[i][k];
  return j;
}

ordered_json matrix_grid(const Matrix& m, bool imag) {
  ordered_json rows = ordered_json::array();
  for (long r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (long c = 0; c < m.cols(); ++c)
      row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    rows.push_back(row);
  }
  return rows;
}

ordered_json tomography_body(const TomographyResult& result) {
  ordered_json j;
  j["correlations"] = pauli_table_to_json(result.correlations);
  j["correlation_stderr"] = pauli_table_to_json(result.correlation_stderr);
  j["rho_real"] = matrix_grid(result.rho.mat, false);
  j["rho_imag"] = matrix_grid(result.rho.mat, true);
  j["concurrence"] = result.concurrence;
  j["concurrence_premax"] = result.concurrence_premax;
  j["concurrence_premax_stderr"] = result.concurrence_premax_stderr;
  j["converged"] = result.converged;
  j["iterations"] = result.iterations;
  j["final_gradient_norm"] = result.final_gradient_norm;
  j["log_likelihood"] = result.log_likelihood;
  return j;
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  ordered_json j;
  j["schema"] = "swapchain.report.v1";
  j["generator"] = kGeneratorId;
  j["config"] = preset_to_json(report.preset);
  j["success_probability"] = report.success_probability;

  ordered_json witness;
  witness["analytic"] = report.witness_analytic;
  if (report.witness) {
    witness["estimate"] = report.witness->value;
    witness["stderr"] = report.witness->stderr_value;
  } else {
    witness["estimate"] = nullptr;
    witness["stderr"] = nullptr;
  }
  j["witness"] = witness;
  j["concurrence_analytic"] = report.concurrence_analytic;

  ordered_json counts = ordered_json::array();
  for (const CountRecord& rec : report.counts) {
    ordered_json c;
    c["setting"] = setting_label(rec.outcome.setting);
    c["counts"] = rec.outcome.counts;
    c["seed"] = rec.seed;
    counts.push_back(c);
  }
  j["counts"] = counts;

  if (report.tomography)
    j["tomography"] = tomography_body(*report.tomography);
  else
    j["tomography"] = nullptr;

  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

std::string counts_to_csv(const std::vector<CountRecord>& counts) {
  std::vector<SettingOutcome> outcomes;
  outcomes.reserve(counts.size());
  for (const auto& rec : counts) outcomes.push_back(rec.outcome);
  return counts_to_csv(outcomes);
}

std::string counts_to_csv(const std::vector<SettingOutcome>& outcomes) {
  std::ostringstream out;
  out << "setting,outcome,count\n";
  for (const auto& s : outcomes)
    for (int k = 0; k < 4; ++k)
      out << setting_label(s.setting) << ',' << kOutcomeLabels[k] << ','
          << s.counts[k] << '\n';
  return out.str();
}

std::vector<SettingOutcome> counts_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  auto fail = [&line_no](const std::string& what) -> void {
    throw std::invalid_argument("counts csv, line " + std::to_string(line_no) +
                                ": " + what);
  };

  if (!std::getline(in, line)) throw std::invalid_argument("counts csv: empty file");
  ++line_no;
  if (line == "setting,outcome,count\r") line.pop_back();
  if (line != "setting,outcome,count")
    fail("expected header 'setting,outcome,count'");

  std::vector<SettingOutcome> outcomes;
  auto find_or_add = [&outcomes](Setting s) -> SettingOutcome& {
    for (auto& o : outcomes)
      if (o.setting == s) return o;
    outcomes.push_back(SettingOutcome{s, {0, 0, 0, 0}});
    return outcomes.back();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      fail("expected three comma-separated columns");

    const std::string setting_str = line.substr(0, c1);
    const std::string outcome_str = line.substr(c1 + 1, c2 - c1 - 1);
    const std::string count_str = line.substr(c2 + 1);

    Setting setting{};
    try {
      setting = setting_from_label(setting_str);
    } catch (const std::invalid_argument&) {
      fail("column 1: unknown setting '" + setting_str + "'");
    }

    int k = -1;
    for (int i = 0; i < 4; ++i)
      if (outcome_str == kOutcomeLabels[i]) k = i;
    if (k < 0) fail("column 2: unknown outcome '" + outcome_str + "'");

    std::int64_t count = 0;
    try {
      std::size_t used = 0;
      count = std::stoll(count_str, &used);
      if (used != count_str.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail("column 3: invalid count '" + count_str + "'");
    }
    if (count < 0) fail("column 3: negative count");

    find_or_add(setting).counts[k] = count;
  }
  if (outcomes.empty()) throw std::invalid_argument("counts csv: no data rows");
  return outcomes;
}

namespace {
// Shortest round-trip decimal form, shared with the JSON writer.
std::string num(double x) { return ordered_json(x).dump(); }
}  // namespace

std::string sweep_to_csv(SweepParameter parameter,
                         const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "parameter,value,witness,witness_stderr,success_probability,concurrence\n";
  for (const auto& r : rows)
    out << to_string(parameter) << ',' << num(r.value) << ',' << num(r.witness)
        << ',' << num(r.witness_stderr) << ',' << num(r.success_probability)
        << ',' << num(r.concurrence) << '\n';
  return out.str();
}

std::string sweep_to_json(SweepParameter parameter,
                          const std::vector<SweepRow>& rows) {
  ordered_json j;
  j["schema"] = "swapchain.sweep.v1";
  j["parameter"] = to_string(parameter);
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["value"] = r.value;
    row["witness"] = r.witness;
    row["witness_stderr"] = r.witness_stderr;
    row["success_probability"] = r.success_probability;
    row["concurrence"] = r.concurrence;
    arr.push_back(row);
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

std::string tomography_to_json(const TomographyResult& result,
                               const std::string& source,
                               std::uint64_t bootstrap_seed) {
  ordered_json j;
  j["schema"] = "swapchain.tomography.v1";
  j["generator"] = kGeneratorId;
  j["source"] = source;
  j["bootstrap_seed"] = bootstrap_seed;
  j["tomography"] = tomography_body(result);
  return j.dump(2) + "\n";
}

std::string tomography_to_csv(const TomographyResult& result) {
  std::ostringstream out;
  out << "correlation,value,stderr\n";
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      out << kPauliChars[i] << kPauliChars[k] << ','
          << num(result.correlations[i][k]) << ','
          << num(result.correlation_stderr[i][k]) << '\n';
  return out.str();
}

}  // namespace swapchain

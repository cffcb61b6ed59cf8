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

#include <string>
#include <vector>

#include "swapchain/experiment.hpp"

namespace swapchain {

/// Structured report document, schema "swapchain.report.v1". Field names and
/// ordering are stable; no timing metadata is serialized, so re-running with
/// the same seed reproduces the bytes exactly.
std::string report_to_json(const RunReport& report);

/// Counts interchange CSV: header "setting,outcome,count", settings ZZ..YY,
/// outcomes pp/pm/mp/mm (Y axis: p = |L>).
std::string counts_to_csv(const std::vector<CountRecord>& counts);
std::string counts_to_csv(const std::vector<SettingOutcome>& outcomes);

/// Parse the interchange CSV; throws std::invalid_argument with a
/// line/column diagnostic on malformed input.
std::vector<SettingOutcome> counts_from_csv(const std::string& text);

std::string sweep_to_csv(SweepParameter parameter,
                         const std::vector<SweepRow>& rows);
std::string sweep_to_json(SweepParameter parameter,
                          const std::vector<SweepRow>& rows);

/// Standalone tomography document (used when reconstructing from a counts
/// file rather than a preset run).
std::string tomography_to_json(const TomographyResult& result,
                               const std::string& source,
                               std::uint64_t bootstrap_seed);
/// Plot-ready correlation table: correlation,value,stderr.
std::string tomography_to_csv(const TomographyResult& result);

}  // namespace swapchain

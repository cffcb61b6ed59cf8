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

namespace swapchain {

/// Entry point behind the `swapchain` binary. Subcommands: run, sweep, tomo.
/// Exit codes: 0 success, 2 validation or input error, 3 numerical failure.
int cli_main(int argc, const char* const* argv);

}  // namespace swapchain

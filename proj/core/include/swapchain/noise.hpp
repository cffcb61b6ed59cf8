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

#include <vector>

#include "swapchain/hilbert.hpp"

namespace swapchain {

/// Phenomenological noise parameters for a chain run.
///
/// Each source emits (1-w)|Psi-><Psi-| + w I/4; each Bell-state measurement
/// damps the HH<->VV coherence by its visibility; background_fraction mixes
/// polarization-uncorrelated accidentals into the final two-photon state;
/// dark_count_prob is the chance a recorded event is a uniform accidental
/// (consumed only by the counting layer).
struct NoiseModel {
  std::vector<double> source_whiteness;  // one entry per pair
  std::vector<double> bsm_visibility;    // one entry per BSM
  double background_fraction = 0.0;
  double dark_count_prob = 0.0;

  /// Noise-free model for an n-pair chain.
  static NoiseModel ideal(int n_pairs);

  /// Shared parameters broadcast over n_pairs sources and n_pairs-1 BSMs.
  static NoiseModel shared(int n_pairs, double whiteness, double visibility,
                           double background, double dark = 0.0);

  /// Throws std::invalid_argument if any parameter is out of range or the
  /// vectors do not match the chain length.
  void validate(int n_pairs) const;
};

/// p |Psi-><Psi-| + (1-p) I/4.
Matrix werner(double p);

/// (1-w) rho + w I/dim.
Matrix mix_white(const Matrix& rho, double w);

/// Accidental-coincidence admixture on the final two-photon state:
/// (1-f) rho + f I/4.
Matrix add_background(const Matrix& rho, double f);

}  // namespace swapchain

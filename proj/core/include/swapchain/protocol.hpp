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

#include <span>
#include <vector>

#include "swapchain/hilbert.hpp"
#include "swapchain/noise.hpp"
#include "swapchain/states.hpp"

namespace swapchain {

/// Diagonal-basis detector outcome behind the interference PBS.
enum class Diag { Plus, Minus };

/// Coincidence pattern at the two detectors of one BSM. Equal outcomes
/// ((+,+) or (-,-)) herald Phi+, opposite outcomes herald Phi-.
struct DetectorPattern {
  Diag first = Diag::Plus;
  Diag second = Diag::Plus;

  BellKind heralded_kind() const {
    return first == second ? BellKind::PhiPlus : BellKind::PhiMinus;
  }
  /// Sign of the HH<->VV cross term in the POVM element.
  double coherence_sign() const { return first == second ? 1.0 : -1.0; }
};

/// One Bell-state measurement: target photons by label, registered pattern,
/// and the two-photon interference visibility at the PBS.
struct BsmSpec {
  int photon_i = 0;
  int photon_j = 0;
  DetectorPattern pattern;
  double visibility = 1.0;
};

struct StageRecord {
  int photon_i = 0;
  int photon_j = 0;
  DetectorPattern pattern;
  double visibility = 1.0;
  double probability = 0.0;  // conditional on previous stages
};

struct SwapResult {
  DensityMatrix final_state;  // photons (1, 2n)
  double success_probability = 0.0;
  std::vector<StageRecord> stage_log;
};

/// Two-qubit POVM element for a coincidence pattern at visibility V:
///   (+,+): 1/4 [ |HH><HH| + |VV><VV| + V (|HH><VV| + |VV><HH|) ]
/// with the cross-term sign flipped for (+,-) / (-,+). At V=1 this is
/// 1/2 |Phi+-><Phi+-|.
Matrix bsm_element(DetectorPattern pattern, double visibility);

/// Generalized-measurement update: p = Tr[(M_ij x I) rho], post state =
/// Tr_ij[ sqrt(M) rho sqrt(M) ] / p. Photons i and j leave the register.
/// Throws std::runtime_error if p < 1e-12 (pattern impossible on this state).
std::pair<DensityMatrix, double> apply_bsm(const DensityMatrix& rho,
                                           const BsmSpec& spec);

/// Cascaded entanglement swapping: n_pairs sources (noise per NoiseModel),
/// BSMs on photons (2,3), (4,5), ..., (2n-2, 2n-1) in order. Visibilities in
/// `specs` override the NoiseModel when set_visibility_from_noise is false.
SwapResult run_chain(int n_pairs, std::span<const BsmSpec> specs,
                     const NoiseModel& source_noise);

/// Convenience: all patterns (+,+), visibilities from the noise model.
SwapResult run_chain(int n_pairs, const NoiseModel& noise);

/// Predicted Bell kind of the final pair for noiseless sources, by group
/// composition of the singlet chain with the heralded intermediate outcomes.
BellKind outcome_bookkeeping(int n_pairs, std::span<const BellKind> outcomes);

}  // namespace swapchain

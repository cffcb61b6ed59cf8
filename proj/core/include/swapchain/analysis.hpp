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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swapchain/hilbert.hpp"
#include "swapchain/states.hpp"

namespace swapchain {

/// A two-photon measurement setting: one analysis axis per photon.
struct Setting {
  Axis first = Axis::Z;
  Axis second = Axis::Z;

  bool operator==(const Setting&) const = default;
};

std::string setting_label(Setting s);          // e.g. "ZX"
Setting setting_from_label(const std::string&);  // throws on unknown label

/// The three complementary common bases of the witness protocol.
std::vector<Setting> witness_settings();
/// All nine axis pairs, first axis major (ZZ, ZX, ZY, XZ, ...).
std::vector<Setting> tomography_settings();

/// Coincidence counts for one setting, ordered (++, +-, -+, --) in the
/// setting's eigenbases (Z: +=H, X: +=|+>, Y: +=|L>).
struct SettingOutcome {
  Setting setting;
  std::array<std::int64_t, 4> counts{};

  std::int64_t total() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
};

/// Rank-1 projector onto the outcome (k in 0..3 over ++,+-,-+,--).
Matrix outcome_projector(Setting s, int k);

/// Exact outcome probabilities of a setting on a two-qubit state.
std::array<double, 4> outcome_probabilities(const Matrix& rho, Setting s);

/// Entanglement witness W = 1/2 (|HH><HH| + |VV><VV| + |++><++| + |--><--|
/// - |RL><RL| - |LR><LR|); negative expectation certifies entanglement.
struct WitnessOperator {
  Matrix matrix;
  struct Term {
    Matrix projector;
    double sign;
    std::string label;
  };
  std::array<Term, 6> terms;
};

const WitnessOperator& witness_operator();

double witness_value(const Matrix& rho);
double witness_value(const DensityMatrix& rho);

struct WitnessEstimate {
  double value = 0.0;
  double stderr_value = 0.0;
};

/// Witness from the three-setting protocol: each projector expectation is
/// its outcome fraction within its setting; standard error by multinomial
/// propagation across the independent settings.
WitnessEstimate witness_from_counts(const SettingOutcome& zz,
                                    const SettingOutcome& xx,
                                    const SettingOutcome& yy);

/// Wootters concurrence of a two-qubit state.
double concurrence(const Matrix& rho);

/// The pre-max Wootters combination lambda1 - lambda2 - lambda3 - lambda4;
/// may be negative (concurrence clamps it at zero).
double concurrence_premax(const Matrix& rho);

/// <sigma_i x sigma_j> for i,j in {I, X, Y, Z}; [0][0] is always 1.
/// Indexing: 0=I, 1=X, 2=Y, 3=Z.
using PauliTable = std::array<std::array<double, 4>, 4>;

PauliTable pauli_expectations(const Matrix& rho);

/// rho = 1/4 sum <sigma_i sigma_j> sigma_i x sigma_j. Hermitian and trace-1
/// by construction; may be non-PSD for noisy data.
Matrix linear_inversion(const PauliTable& correlations);

/// Nearest-PSD projection: clip negative eigenvalues, renormalize trace.
Matrix psd_project(const Matrix& hermitian);

/// Measured correlations from a full 9-setting dataset. Single-qubit rows
/// and columns are averaged over every setting containing that axis.
PauliTable correlations_from_counts(const std::vector<SettingOutcome>& settings);

struct MleOptions {
  int max_iterations = 10000;
  double gradient_tolerance = 1e-8;  // max-norm of the per-event NLL gradient
  int bootstrap_resamples = 200;
  std::uint64_t bootstrap_seed = 1;
};

struct TomographyResult {
  PauliTable correlations{};         // measured, from counts
  PauliTable correlation_stderr{};   // bootstrap; zero when disabled
  DensityMatrix rho;                 // MLE state (PSD, trace 1)
  double concurrence = 0.0;
  double concurrence_premax = 0.0;
  double concurrence_premax_stderr = 0.0;
  bool converged = false;
  int iterations = 0;
  double final_gradient_norm = 0.0;
  double log_likelihood = 0.0;  // natural log, total over events
};

/// Maximum-likelihood reconstruction over rho = T^dag T / Tr(T^dag T) with a
/// lower-triangular T (16 real parameters), first-order ascent from the
/// PSD-projected linear-inversion estimate. Requires all 9 settings with
/// positive totals.
TomographyResult mle_reconstruct(const std::vector<SettingOutcome>& settings,
                                 const MleOptions& options = {});

/// Negative log-likelihood per event and its 16-component gradient at the
/// parameter vector theta; exposed for the finite-difference contract tests.
double mle_nll(const std::vector<SettingOutcome>& settings,
               const std::array<double, 16>& theta);
std::array<double, 16> mle_gradient(const std::vector<SettingOutcome>& settings,
                                    const std::array<double, 16>& theta);

/// Lower-triangular T from the 16-parameter vector and the induced state.
Matrix mle_state_from_parameters(const std::array<double, 16>& theta);

/// Parameters whose induced state reproduces a strictly positive rho.
std::array<double, 16> mle_parameters_from_state(const Matrix& rho);

/// Uhlmann fidelity F(rho, sigma) = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const Matrix& rho, const Matrix& sigma);

/// <psi| rho |psi> for a pure target.
double fidelity_pure(const Vector& psi, const Matrix& rho);

}  // namespace swapchain

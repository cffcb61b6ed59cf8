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
#include <string>
#include <utility>

#include "swapchain/hilbert.hpp"

namespace swapchain {

/// Single-photon polarization basis labels.
///
/// Conventions: |+/-> = (|H> +/- |V>)/sqrt2, |L> = (|H> + i|V>)/sqrt2,
/// |R> = (|H> - i|V>)/sqrt2.
enum class Pol { H, V, Plus, Minus, R, L };

/// The four Bell states. PsiPm = (|HV> +/- |VH>)/sqrt2,
/// PhiPm = (|HH> +/- |VV>)/sqrt2.
enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellKind, 4> kBellKinds = {
    BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus,
    BellKind::PhiMinus};

std::string to_string(BellKind kind);

/// Measurement axes; eigenbases map Z <-> {H,V}, X <-> {+,-}, Y <-> {L,R}
/// with sigma_y |L> = +|L>.
enum class Axis { Z, X, Y };

inline constexpr std::array<Axis, 3> kAxes = {Axis::Z, Axis::X, Axis::Y};

char axis_char(Axis a);
Axis axis_from_char(char c);

/// Single-qubit polarization ket (2 amplitudes, H first).
Vector ket(Pol label);

/// Bell state amplitudes over (HH, HV, VH, VV).
Vector bell(BellKind kind);

Matrix bell_projector(BellKind kind);

/// 2x2 Pauli matrix for the axis.
Matrix pauli(Axis axis);

/// Eigenvector of pauli(axis) with eigenvalue +1 (plus=true) or -1.
Vector axis_eigenvector(Axis axis, bool plus);

/// N singlet pairs on photons 1..2n, pair k on photons (2k-1, 2k).
struct ChainState {
  PureState pure;
  std::vector<BellKind> pair_kinds;
};

ChainState chain_initial(int n_pairs);

/// Coefficient table c[k1][k2] = <bell(k1)_ab (x) bell(k2)_cd | state> for a
/// 4-qubit state and a pairing given by register labels ((a,b),(c,d)).
/// Indices follow kBellKinds order. Sum |c|^2 = 1 for normalized input.
using BellCoefficients = std::array<std::array<Complex, 4>, 4>;

BellCoefficients bell_coefficients(const PureState& state,
                                   std::pair<int, int> first_pair,
                                   std::pair<int, int> second_pair);

}  // namespace swapchain

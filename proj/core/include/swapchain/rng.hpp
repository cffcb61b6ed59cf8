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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace swapchain {

/// Generator identifier embedded in every report that carries sampled data.
inline constexpr const char* kGeneratorId = "xoshiro256**";

/// SplitMix64 step; used to expand seeds and to derive sub-streams.
std::uint64_t splitmix64(std::uint64_t& state);

/// FNV-1a hash of a label, for stable stream derivation from strings.
std::uint64_t fnv1a64(std::string_view s);

/// xoshiro256** with SplitMix64 seeding.
///
/// Streams are derived, not jumped: derive(seed, label) hashes the label into
/// the seed, so parallel consumers get independent generators whose output is
/// a pure function of (seed, label).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal deviate (Box-Muller, no state caching).
  double normal();

  /// Independent generator for a named sub-stream of this generator's seed.
  Rng derive(std::string_view label) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

/// Sub-seed for a named stream: splitmix64(seed xor fnv1a64(label)).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

/// One multinomial draw of `n` events over `probs` (must sum to 1 within
/// 1e-9). Per-event CDF inversion; deterministic for a fixed generator state.
std::vector<std::int64_t> multinomial(Rng& rng, std::int64_t n,
                                      std::span<const double> probs);

/// Haar-random pure state of dimension `dim` (Gaussian amplitudes, normalized).
Eigen::VectorXcd random_pure_state(Rng& rng, int dim);

/// Hilbert-Schmidt random density matrix: G G^dag / tr, G Ginibre.
Eigen::MatrixXcd random_density_matrix(Rng& rng, int dim);

}  // namespace swapchain

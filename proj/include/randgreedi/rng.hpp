// Copyright 2026 The Authors.
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

#ifndef RANDGREEDI_RNG_H_
#define RANDGREEDI_RNG_H_

#include <cmath>
#include <cstdint>

namespace randgreedi {

// Counter-based randomness: every draw is a pure function of
// (seed, stream, counter), so concurrent workers and repeated runs see
// identical values without sharing generator state.
namespace rng {

// Disjoint stream tags. Keeping assignment coins and algorithm coins on
// separate streams means changing the machine count never perturbs draws
// made by other components.
enum Stream : std::uint64_t {
  kPartition = 1,
  kDoubleGreedy = 2,
  kTrial = 3,
  kInstanceGen = 4,
  kLastAlg = 5,
  kSampling = 6,
};

// SplitMix64 finalizer.
inline std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t Key(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t counter) {
  return Mix64(Mix64(Mix64(seed) ^ stream) ^ counter);
}

// Uniform in [0, 1) with 53-bit resolution.
inline double Uniform01(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t counter) {
  return static_cast<double>(Key(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound). Double rounding bias is negligible for the
// small bounds used here (machine counts, element counts).
inline int UniformInt(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t counter, int bound) {
  int v = static_cast<int>(Uniform01(seed, stream, counter) *
                           static_cast<double>(bound));
  return v >= bound ? bound - 1 : v;
}

// Standard normal via Box-Muller; consumes counters 2c and 2c+1.
inline double Normal(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t counter) {
  double u1 = Uniform01(seed, stream, 2 * counter);
  double u2 = Uniform01(seed, stream, 2 * counter + 1);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

inline std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream,
                                std::uint64_t index) {
  return Key(master, stream, index);
}

}  // namespace rng
}  // namespace randgreedi

#endif  // RANDGREEDI_RNG_H_

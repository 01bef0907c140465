// Copyright 2026 The relaxdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELAXDP_RANDOM_H_
#define RELAXDP_RANDOM_H_

#include <cmath>
#include <cstdint>

namespace relaxdp {

// Deterministic counter-based pseudo-random stream (SplitMix64). Streams are
// cheap to construct, so every mechanism call and every simulation trial gets
// its own stream derived from (seed, index); results are bit-reproducible
// across runs and independent of evaluation order.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(Mix(seed)) {}

  // Stream for the `index`-th call under `seed`.
  static RandomStream AtCall(std::uint64_t seed, std::uint64_t index) {
    RandomStream s(seed);
    s.state_ = Mix(s.state_ ^ Mix(index * 0x9e3779b97f4a7c15ULL +
                                  0xd1b54a32d192ed03ULL));
    return s;
  }

  std::uint64_t NextU64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in the open interval (0, 1); never returns an endpoint.
  double NextUnit() {
    return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double NextUniform(double lo, double hi) {
    return lo + (hi - lo) * NextUnit();
  }

  // Uniform integer in [0, bound). bound > 0.
  std::uint64_t NextBelow(std::uint64_t bound) {
    // Multiply-shift; bias is < 2^-64 * bound, irrelevant at our scales.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(NextU64()) * bound) >> 64);
  }

 private:
  static std::uint64_t Mix(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
  }

  std::uint64_t state_;
};

// Laplace(0, scale) sample via the inverse CDF applied to one 64-bit uniform.
// Variance is 2*scale^2. A zero scale returns exactly 0.0 so that noise-free
// answers stay bit-exact integers.
inline double SampleLaplace(double scale, RandomStream& stream) {
  if (scale == 0.0) return 0.0;
  const double u = stream.NextUnit() - 0.5;  // (-0.5, 0.5), never 0
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0.0 ? -magnitude : magnitude;
}

}  // namespace relaxdp

#endif  // RELAXDP_RANDOM_H_

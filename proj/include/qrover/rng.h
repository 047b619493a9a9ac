// Copyright 2026 The qrover Authors
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

#ifndef QROVER_RNG_H_
#define QROVER_RNG_H_

#include <cmath>
#include <cstdint>

namespace qrover {

/// SplitMix64. The state advances by the golden-ratio increment and each
/// output is the standard three-round xor-shift-multiply finalizer. The
/// algorithm is fixed so that seeded experiments replay bit-exactly in any
/// language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double uniform_open_closed() { return 1.0 - uniform(); }

  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
  }

  /// Standard normal via Box-Muller (consumes two draws, no caching).
  double normal() {
    double u1 = uniform_open_closed();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Binomial(n, p) by direct Bernoulli summation.
  std::uint64_t binomial(std::uint64_t n, double p) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (uniform() < p) ++hits;
    }
    return hits;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qrover

#endif  // QROVER_RNG_H_

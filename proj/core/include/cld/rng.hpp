// Copyright 2026 The cld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLD_RNG_HPP_
#define CLD_RNG_HPP_

#include <cstdint>

namespace cld {

// SplitMix64. Small, fast, and fully specified, so streams are reproducible
// across compilers and standard libraries.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection keeps the result exactly uniform.
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t r;
    do {
      r = (*this)();
    } while (r >= limit);
    return r % n;
  }

  int sign() { return ((*this)() >> 63) ? 1 : -1; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

enum class StreamPurpose : std::uint64_t {
  kGame = 1,
  kTarget = 2,
  kStrategySign = 3,
  kUtilitySign = 4,
  kRademacher = 5,
  kSweep = 6,
  kTieBreak = 7,
};

// Independent stream for (seed, player, round, purpose). Adding a consumer
// with a new purpose never shifts another consumer's draws.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t player,
                                std::uint64_t round, StreamPurpose purpose) {
  std::uint64_t h = mix64(seed ^ 0x6A09E667F3BCC909ULL);
  h = mix64(h ^ (player + 0x9E3779B97F4A7C15ULL));
  h = mix64(h ^ (round * 0xD1B54A32D192ED03ULL));
  h = mix64(h ^ static_cast<std::uint64_t>(purpose));
  return SplitMix64(h);
}

}  // namespace cld

#endif  // CLD_RNG_HPP_

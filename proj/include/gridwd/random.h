// Copyright 2026 The gridwd Authors
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

#ifndef GRIDWD_RANDOM_H_
#define GRIDWD_RANDOM_H_

#include <cstdint>
#include <random>

namespace gridwd {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-trial seed: mix64(mix64(master ^ mix64(m)) ^ trial). Every trial of a
// sweep gets an independent stream, so results do not depend on the order in
// which trials execute.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master,
                                          std::uint64_t m,
                                          std::uint64_t trial) {
  return mix64(mix64(master ^ mix64(m)) ^ trial);
}

// Sub-streams of one trial.
enum class Stream : std::uint64_t { kGridP = 1, kGridQ = 2, kEqualize = 3 };

constexpr std::uint64_t stream_seed(std::uint64_t trial_seed, Stream s) {
  return mix64(trial_seed + static_cast<std::uint64_t>(s));
}

// mt19937_64 output is fixed by the standard; the bounded draw below is
// implemented here because std::uniform_int_distribution is not.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gridwd

#endif  // GRIDWD_RANDOM_H_

// Copyright 2026 the mtk authors.
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

// Counter-based seedable RNG. Every draw is a pure function of
// (key, counter), so per-record substreams keyed by hash(master_seed,
// record_id) give outputs independent of execution order and thread count.

#ifndef MTK_RNG_HPP_
#define MTK_RNG_HPP_

#include <cstdint>
#include <string_view>

namespace mtk {

// SplitMix64 finalizer; a solid 64-bit mixer.
inline uint64_t Mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Combines a seed with a label (e.g. a record id or language pair) into a
// substream key. FNV-1a over the label, mixed with the seed.
uint64_t SubstreamKey(uint64_t seed, std::string_view label);

inline uint64_t SubstreamKey(uint64_t seed, uint64_t index) {
  return Mix64(seed ^ Mix64(index + 0x51ED270B0D1F2ULL));
}

class Rng {
 public:
  explicit Rng(uint64_t key) : key_(key) {}

  uint64_t NextU64() { return Mix64(key_ ^ Mix64(counter_++)); }

  // Uniform in [0, n). Rejection-free Lemire reduction is overkill here;
  // 128-bit multiply keeps bias below 2^-64.
  uint64_t UniformIndex(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(NextU64()) * n) >> 64);
  }

  // Uniform in [0, 1) with 53 random bits.
  double UniformDouble() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return UniformDouble() < p; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace mtk

#endif  // MTK_RNG_HPP_

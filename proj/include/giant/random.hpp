// Copyright 2026 The Giant Authors
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

#ifndef GIANT_RANDOM_HPP_
#define GIANT_RANDOM_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace giant {

// Explicit random stream. Every sampler takes one by reference; nothing in the
// library touches global random state, so replicas can run on any worker as
// long as each owns its stream.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on (0, 1]; safe to pass to log().
  double uniform_positive() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }
  // Unbiased integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Seed for replica `index` of the stream family `tag` under a base seed.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view tag,
                          std::uint64_t index);

inline Rng derive_stream(std::uint64_t seed, std::string_view tag,
                         std::uint64_t index) {
  return Rng(stream_seed(seed, tag, index));
}

// Fisher-Yates with the library's own bounded draw, so results do not depend
// on the standard library's distribution implementations.
template <class T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace giant

#endif  // GIANT_RANDOM_HPP_

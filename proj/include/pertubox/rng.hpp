// Copyright 2026 The Pertubox Authors
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

#ifndef PERTUBOX_RNG_HPP_
#define PERTUBOX_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string_view>
#include <utility>
#include <vector>

namespace pertubox {

// Counter-based deterministic generator. Every draw is a pure function of
// (seed, stream label, counter), so a given (seed, label) pair replays the
// same sequence on any platform, independent of call interleaving in other
// streams. Sub-streams derived by label carry independent counters.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::string_view label = {})
      : key_(mix64(seed ^ kSeedSalt)) {
    if (!label.empty()) key_ = derive(key_, label);
  }

  // Child generator for an independent named stream, e.g. "rotation/R".
  [[nodiscard]] Rng stream(std::string_view label) const {
    return Rng(derive(key_, label), RawKey{});
  }

  std::uint64_t next_u64() { return mix64(key_ + ++counter_ * kGamma); }

  // Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; consumes two words per draw.
  double gaussian() {
    const double u1 =
        static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  double gaussian(double mean, double stddev) {
    return mean + stddev * gaussian();
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Unbiased index in [0, n); rejection sampling avoids modulus bias.
  std::size_t uniform_index(std::size_t n) {
    const auto bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

 private:
  struct RawKey {};
  Rng(std::uint64_t key, RawKey) : key_(key) {}

  static constexpr std::uint64_t kSeedSalt = 0x7065727475626f78ULL;  // stream root
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  static std::uint64_t derive(std::uint64_t base, std::string_view label) {
    // FNV-1a over the label, folded into the parent key.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return mix64(base ^ mix64(h + kGamma));
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// Deterministic Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.uniform_index(i)]);
  }
}

}  // namespace pertubox

#endif  // PERTUBOX_RNG_HPP_

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

#pragma once

// Seedable, splittable random streams.
//
// A run seed is never consumed directly. Each consumer asks for a named
// stream; the stream seed is derived from (seed, name) with SplitMix64, so
// drawing from one stream never shifts another. Stream names in use:
//   "lar.sample"  V_p membership coin per cheap element
//   "rla.coin"    fair admission coin per recorded candidate
//   "gen.*"       instance generators

#include <cstdint>
#include <random>
#include <string_view>

namespace smk {

inline constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr uint64_t HashName(std::string_view name) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Child seed for the given index; used to fan out repetitions of one cell.
inline constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
  return SplitMix64(SplitMix64(seed) ^ SplitMix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(SplitMix64(seed)) {}

  // Independent stream keyed by name.
  Rng Stream(std::string_view name) const {
    return Rng(SplitMix64(seed_ ^ HashName(name)));
  }

  uint64_t seed() const { return seed_; }
  uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits; bit-identical across standard libraries.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform index in [0, bound).
  uint64_t Index(uint64_t bound) {
    return static_cast<uint64_t>(Uniform() * static_cast<double>(bound));
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace smk

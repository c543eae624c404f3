// Copyright 2026 The qbluestein Authors
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

#include <cstdint>
#include <random>

#include "qbluestein/numerics.hpp"

namespace qbluestein {

// All randomness in the library runs on std::mt19937_64. Per-stream seeds are
// derived with splitmix64 so runs are reproducible and independent of thread
// scheduling. Uniforms and normals are produced here rather than through
// <random> distributions, whose output is implementation-defined.

using Engine = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Engine for stream (seed, a, b), e.g. (seed, n, trial).
Engine make_engine(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Engine& engine);

double standard_normal(Engine& engine);

/// Complex Gaussian vector scaled to unit L2 norm.
ComplexVec random_unit_vector(std::size_t n, Engine& engine);

}  // namespace qbluestein

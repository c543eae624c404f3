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

#include "qbluestein/random.hpp"

#include <cmath>

namespace qbluestein {

Engine make_engine(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return Engine(splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b));
}

double uniform01(Engine& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

double standard_normal(Engine& engine) {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u = 1.0 - uniform01(engine);
  const double v = uniform01(engine);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
}

ComplexVec random_unit_vector(std::size_t n, Engine& engine) {
  ComplexVec x(n);
  double norm = 0.0;
  do {
    for (Complex& v : x) v = {standard_normal(engine), standard_normal(engine)};
    norm = l2_norm(x);
  } while (norm == 0.0);
  for (Complex& v : x) v /= norm;
  return x;
}

}  // namespace qbluestein

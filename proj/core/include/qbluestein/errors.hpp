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

#include <stdexcept>
#include <string>

namespace qbluestein {

// Error taxonomy shared by every module. Callers that only care about "bad
// input" can catch std::invalid_argument; the derived types let tests pin
// down which precondition was violated.

/// Vector or register dimension does not match what the operation needs.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Qubit or basis index outside the register.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed argument (duplicate qubits, zero qubit count, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero-norm input, or a block-encoding amplitude above one.
class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Diagonal entry that is not on the unit circle.
class UnitarityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense reconstruction requested for a register that is too wide.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Post-selection onto a branch with (numerically) zero probability.
class DegenerateBranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbluestein

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
#include <map>
#include <span>
#include <vector>

#include "qbluestein/circuit.hpp"
#include "qbluestein/numerics.hpp"

namespace qbluestein {

struct PostSelection;

/// Dense state over `num_qubits` qubits. Qubit 0 is the least-significant bit
/// of the basis index. Operations mutate the amplitudes in place.
class StateVector {
 public:
  /// |j> on q qubits. Throws IndexError unless j < 2^q.
  static StateVector basis(unsigned num_qubits, std::uint64_t index);

  /// Wraps raw amplitudes; the length must be a power of two >= 2.
  static StateVector from_amplitudes(ComplexVec amplitudes);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

  StateVector& apply(const Gate& gate);
  StateVector& apply(const Circuit& circuit);

  /// Multiplies amplitude j by phases[j]. Entries must be unimodular to 1e-12.
  StateVector& apply_diagonal(std::span<const Complex> phases);

  /// For each index k of the other qubits, rotates the ancilla pair
  /// (a_{k,0}, a_{k,1}) by [[beta_k, -gamma_k], [gamma_k, conj(beta_k)]].
  StateVector& apply_multiplexed_ancilla_rotation(std::span<const Complex> betas, Qubit ancilla);

  /// Projects `qubit` onto `outcome`. Needs at least two qubits so the
  /// remaining register is non-empty.
  PostSelection postselect(Qubit qubit, int outcome) const;

  std::vector<double> probabilities() const;

  /// Draws `shots` outcomes; identical (seed, state) give identical counts.
  std::map<std::uint64_t, std::uint64_t> sample(std::uint64_t shots, std::uint64_t seed) const;

 private:
  StateVector(unsigned num_qubits, ComplexVec amplitudes);

  void check_qubit(Qubit q) const;

  unsigned num_qubits_;
  ComplexVec amplitudes_;
};

struct PostSelection {
  /// Renormalized state on the remaining num_qubits - 1 qubits.
  StateVector state;
  /// Branch amplitudes before renormalization, indexed like `state`.
  ComplexVec branch;
  double probability;
};

/// Smallest branch probability postselect() accepts.
inline constexpr double kMinBranchProbability = 1e-15;

/// Loads x (zero padded) into q qubits normalized to unit length. Returns the
/// state together with ||x||, the factor that was divided out.
struct LoadedState {
  StateVector state;
  double norm;
};
LoadedState init_amplitudes(unsigned num_qubits, std::span<const Complex> x);

}  // namespace qbluestein

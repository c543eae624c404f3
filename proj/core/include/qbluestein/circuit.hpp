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

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <string_view>
#include <variant>
#include <vector>

#include "qbluestein/numerics.hpp"

namespace qbluestein {

using Qubit = unsigned;

// Gate IR. Phase-type gates act as |1> -> e^{i angle}|1>; angles are stored
// reduced into (-2pi, 2pi).

struct Hadamard {
  Qubit target;
};

struct Phase {
  Qubit target;
  double angle;
};

struct ControlledPhase {
  Qubit control;
  Qubit target;
  double angle;
};

struct Swap {
  Qubit a;
  Qubit b;
};

/// Block-encoding of a sub-normalized diagonal. For every index k of the
/// remaining qubits (the basis index with the ancilla bit removed), the
/// ancilla pair is rotated by [[beta_k, -gamma_k], [gamma_k, conj(beta_k)]]
/// with gamma_k = sqrt(1 - |beta_k|^2).
struct MultiplexedAncillaRotation {
  ComplexVec betas;
  Qubit ancilla;
};

using Gate = std::variant<Hadamard, Phase, ControlledPhase, Swap, MultiplexedAncillaRotation>;

Gate make_phase(Qubit target, double angle);
Gate make_controlled_phase(Qubit control, Qubit target, double angle);

/// Reduce an angle into (-2pi, 2pi). Throws ArgumentError if non-finite.
double reduce_angle(double angle);

std::vector<Qubit> gate_qubits(const Gate& gate);
std::string_view gate_kind_name(const Gate& gate);

/// |beta| within 1e-12 above one is clamped; anything larger throws
/// NormalizationError.
inline constexpr double kBetaClampTolerance = 1e-12;
ComplexVec checked_betas(std::span<const Complex> betas);

class Circuit {
 public:
  explicit Circuit(unsigned width);

  unsigned width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates qubit indices against the width before appending.
  Circuit& append(Gate gate);
  Circuit& extend(const Circuit& other);

  /// Reversed order with negated angles. Throws ArgumentError when the
  /// circuit holds a multiplexed rotation, whose adjoint is outside the IR.
  Circuit adjoint() const;

 private:
  unsigned width_;
  std::vector<Gate> gates_;
};

/// m-qubit QFT with kernel e^{-2 pi i jk / M}, M = 2^m (entry (k, j) of the
/// forward matrix is M^{-1/2} e^{-2 pi i jk/M}). Hadamards, controlled-phase
/// ladder, then floor(m/2) swaps. The inverse is the adjoint circuit.
Circuit qft_circuit(unsigned m, Direction direction = Direction::kForward);

/// theta = pi * numerator / denominator, kept exact so large bit weights can
/// be reduced in integer arithmetic.
struct PiFraction {
  std::int64_t numerator;
  std::int64_t denominator;
};
inline constexpr std::int64_t kMaxPiDenominator = std::int64_t{1} << 31;

/// |j> -> e^{i theta j^2}|j> via the bit expansion
///   j^2 = sum_l j_l 4^l + sum_{l<r} j_l j_r 2^{l+r+1},
/// i.e. one Phase per bit and one ControlledPhase per bit pair.
Circuit quadratic_phase_circuit(unsigned m, double theta);
Circuit quadratic_phase_circuit(unsigned m, PiFraction theta);

struct GateReport {
  std::size_t hadamard = 0;
  std::size_t phase = 0;
  std::size_t controlled_phase = 0;
  std::size_t swap = 0;
  std::size_t multiplexed = 0;
  /// Each multiplexed rotation also counts as 2^(width-1) two-level rotations.
  std::size_t multiplexed_two_level = 0;
  /// Number of gate records, macro operations included.
  std::size_t total = 0;
  /// Everything except the multiplexed macro operations.
  std::size_t elementary = 0;
  std::size_t two_qubit = 0;
};

GateReport gate_counts(const Circuit& circuit);

inline constexpr unsigned kMaxDenseWidth = 12;

using DenseMatrix = Eigen::MatrixXcd;

/// Ordered product of the gate unitaries (last gate leftmost). Built from
/// each gate's local 2x2/4x4 matrix, independently of the simulator kernels.
/// Throws ResourceError above kMaxDenseWidth qubits.
DenseMatrix circuit_to_matrix(const Circuit& circuit);

nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& doc);

}  // namespace qbluestein

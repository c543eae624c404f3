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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qbluestein/circuit.hpp"
#include "qbluestein/numerics.hpp"
#include "qbluestein/state_vector.hpp"

namespace qbluestein {

/// Everything needed to run an n-point transform on a 2^m workspace.
struct BluesteinPlan {
  std::size_t n = 0;
  unsigned m = 0;
  std::size_t big_m = 0;
  ComplexVec kernel_b;   // wrapped chirp kernel, length big_m
  ComplexVec fourier_b;  // unnormalized forward DFT of kernel_b
  double alpha = 0.0;    // max_k |fourier_b[k]|

  /// Qubit index of the block-encoding ancilla (one above the main register).
  Qubit ancilla() const { return m; }
  /// beta_k = fourier_b[k] / alpha.
  ComplexVec betas() const;
};

/// Minimal m >= 1 with 2^m >= 2n - 1. Throws ArgumentError for n == 0.
BluesteinPlan build_plan(std::size_t n);

/// Input chirp and output de-chirp share the same diagonal e^{-i pi j^2/n}.
Circuit chirp_circuit(const BluesteinPlan& plan);

/// Full (m+1)-qubit circuit: chirp, QFT, multiplexed rotation, inverse QFT,
/// de-chirp.
Circuit qba_circuit(const BluesteinPlan& plan);

enum class ChirpPath {
  kGates,     // quadratic_phase_circuit, the default
  kDiagonal,  // apply_diagonal with precomputed phases
};

struct QbaOptions {
  ChirpPath chirp_path = ChirpPath::kGates;
  bool verify = false;  // fill max_abs_error_vs_oracle from dft_direct
};

struct QbaResult {
  /// alpha * ||x|| * (post-selected amplitude k), k < n. Equals the
  /// unnormalized DFT of x.
  ComplexVec y;
  /// Ancilla-0 branch of the main register before renormalization, length M.
  /// Indices >= n are convolution garbage.
  ComplexVec branch;
  /// Probability of the ancilla-0 outcome (logical plus garbage mass).
  double success_probability = 0.0;
  /// sum_{k<n} |branch_k|^2; equals n / alpha^2 for exact arithmetic.
  double logical_mass = 0.0;
  /// |y_k|^2 / sum |y|^2, the measurement distribution conditioned on
  /// landing in the logical subspace.
  std::vector<double> logical_probabilities;
  GateReport gate_report;
  std::optional<double> max_abs_error_vs_oracle;

  /// Logical amplitudes normalized to unit length.
  ComplexVec normalized_logical() const;
};

/// Gate-by-gate state-vector execution on m+1 qubits.
QbaResult run_qba(std::span<const Complex> x, const BluesteinPlan& plan,
                  const QbaOptions& options = {});

inline constexpr unsigned kMaxDenseQbaQubits = 10;

/// Same contract as run_qba, computed as the dense product
/// D_dechirp * QFT^-1 * diag(beta) * QFT * D_chirp acting on the main
/// register. diag(beta) is the ancilla-0 block of the multiplexed rotation.
/// Throws ResourceError for m > kMaxDenseQbaQubits.
QbaResult run_qba_dense(std::span<const Complex> x, const BluesteinPlan& plan);

/// Gate tallies for one plan, taken from the circuits the pipeline runs.
struct QbaGateStats {
  std::size_t n = 0;
  unsigned m = 0;
  std::size_t big_m = 0;
  std::size_t diagonal_gates = 0;  // chirp + de-chirp
  std::size_t qft_gates = 0;       // forward + inverse QFT, swaps included
  std::size_t swap_gates = 0;
  std::size_t total = 0;           // elementary gates, macro operation excluded
  std::size_t two_qubit = 0;
  std::size_t macro_ops = 0;
};

QbaGateStats qba_gate_stats(const BluesteinPlan& plan);

/// Smallest n whose plan uses exactly m main-register qubits (m >= 1).
std::size_t smallest_n_for_qubits(unsigned m);

struct GateScalingFit {
  unsigned m_min = 0;
  unsigned m_max = 0;
  std::vector<QbaGateStats> rows;  // one per m
  LineFit vs_m_squared;            // total = slope * m^2 + intercept
  LineFit log_log;                 // log total = exponent * log m + c
  double exponent() const { return log_log.slope; }
};

/// Least-squares fits of the elementary gate total over m in [m_min, m_max].
GateScalingFit fit_gate_scaling(unsigned m_min, unsigned m_max);

struct VerifyRow {
  std::size_t n = 0;
  unsigned m = 0;
  double alpha = 0.0;
  double max_relative_error = 0.0;
  double mean_relative_error = 0.0;
  /// max over trials of |logical_mass - n/alpha^2|.
  double max_mass_deviation = 0.0;
  double min_success_probability = 0.0;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  double max_relative_error() const;
  double max_mass_deviation() const;
};

inline constexpr double kMassIdentityTolerance = 1e-8;

/// Random unit-norm complex inputs for every n in [n_min, n_max]; trial t of
/// length n draws from stream (seed, n, t) so results do not depend on
/// `threads`.
VerifyReport verify_range(std::size_t n_min, std::size_t n_max, std::size_t trials,
                          std::uint64_t seed, unsigned threads = 1);

}  // namespace qbluestein

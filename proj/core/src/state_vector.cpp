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

#include "qbluestein/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qbluestein/errors.hpp"
#include "qbluestein/random.hpp"

namespace qbluestein {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kUnimodularTolerance = 1e-12;

// Index of the other qubits once bit q is removed.
inline std::size_t compress(std::size_t i, Qubit q) {
  return (i & ((std::size_t{1} << q) - 1)) | ((i >> (q + 1)) << q);
}

}  // namespace

StateVector::StateVector(unsigned num_qubits, ComplexVec amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t index) {
  if (num_qubits == 0) throw ArgumentError("state needs at least one qubit");
  if (num_qubits >= 40) throw ResourceError("state vector too large");
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) {
    throw IndexError("basis index " + std::to_string(index) + " outside 2^" +
                     std::to_string(num_qubits));
  }
  ComplexVec amps(dim, Complex{});
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(ComplexVec amplitudes) {
  if (amplitudes.size() < 2 || !is_power_of_two(amplitudes.size())) {
    throw SizeError("state length must be a power of two >= 2");
  }
  check_complex_vec(amplitudes, "state amplitudes");
  const auto q = static_cast<unsigned>(std::countr_zero(amplitudes.size()));
  return StateVector(q, std::move(amplitudes));
}

LoadedState init_amplitudes(unsigned num_qubits, std::span<const Complex> x) {
  check_complex_vec(x, "init_amplitudes");
  StateVector s = StateVector::basis(num_qubits, 0);
  if (x.size() > s.dimension()) {
    throw SizeError("init_amplitudes: " + std::to_string(x.size()) + " entries exceed 2^" +
                    std::to_string(num_qubits));
  }
  const double norm = l2_norm(x);
  if (norm == 0.0) throw NormalizationError("init_amplitudes: zero vector");
  ComplexVec amps(s.dimension(), Complex{});
  for (std::size_t j = 0; j < x.size(); ++j) amps[j] = x[j] / norm;
  return {StateVector::from_amplitudes(std::move(amps)), norm};
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return s;
}

void StateVector::check_qubit(Qubit q) const {
  if (q >= num_qubits_) {
    throw IndexError("qubit " + std::to_string(q) + " outside " + std::to_string(num_qubits_) +
                     "-qubit state");
  }
}

StateVector& StateVector::apply(const Gate& gate) {
  const std::vector<Qubit> qubits = gate_qubits(gate);
  for (Qubit q : qubits) check_qubit(q);
  if (qubits.size() == 2 && qubits[0] == qubits[1]) {
    throw ArgumentError("two-qubit gate with duplicate qubit " + std::to_string(qubits[0]));
  }
  const std::size_t dim = amplitudes_.size();
  std::visit(
      Overloaded{
          [&](const Hadamard& g) {
            const std::size_t bit = std::size_t{1} << g.target;
            const double s = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < dim; ++i) {
              if (i & bit) continue;
              const Complex a0 = amplitudes_[i];
              const Complex a1 = amplitudes_[i | bit];
              amplitudes_[i] = s * (a0 + a1);
              amplitudes_[i | bit] = s * (a0 - a1);
            }
          },
          [&](const Phase& g) {
            const std::size_t bit = std::size_t{1} << g.target;
            const Complex w = std::polar(1.0, g.angle);
            for (std::size_t i = bit; i < dim; ++i) {
              if (i & bit) amplitudes_[i] *= w;
            }
          },
          [&](const ControlledPhase& g) {
            const std::size_t mask = (std::size_t{1} << g.control) | (std::size_t{1} << g.target);
            const Complex w = std::polar(1.0, g.angle);
            for (std::size_t i = 0; i < dim; ++i) {
              if ((i & mask) == mask) amplitudes_[i] *= w;
            }
          },
          [&](const Swap& g) {
            const std::size_t ba = std::size_t{1} << g.a;
            const std::size_t bb = std::size_t{1} << g.b;
            for (std::size_t i = 0; i < dim; ++i) {
              // Visit each (a=1, b=0) index once and swap with its (a=0, b=1) partner.
              if ((i & ba) && !(i & bb)) std::swap(amplitudes_[i], amplitudes_[(i ^ ba) | bb]);
            }
          },
          [&](const MultiplexedAncillaRotation& g) {
            apply_multiplexed_ancilla_rotation(g.betas, g.ancilla);
          },
      },
      gate);
  return *this;
}

StateVector& StateVector::apply(const Circuit& circuit) {
  if (circuit.width() > num_qubits_) throw SizeError("circuit wider than state");
  for (const Gate& g : circuit.gates()) apply(g);
  return *this;
}

StateVector& StateVector::apply_diagonal(std::span<const Complex> phases) {
  if (phases.size() != amplitudes_.size()) {
    throw SizeError("apply_diagonal: " + std::to_string(phases.size()) + " phases for " +
                    std::to_string(amplitudes_.size()) + " amplitudes");
  }
  for (std::size_t j = 0; j < phases.size(); ++j) {
    if (std::abs(std::abs(phases[j]) - 1.0) > kUnimodularTolerance) {
      throw UnitarityError("apply_diagonal: entry " + std::to_string(j) + " not unimodular");
    }
  }
  for (std::size_t j = 0; j < phases.size(); ++j) amplitudes_[j] *= phases[j];
  return *this;
}

StateVector& StateVector::apply_multiplexed_ancilla_rotation(std::span<const Complex> betas,
                                                             Qubit ancilla) {
  check_qubit(ancilla);
  if (betas.size() != amplitudes_.size() / 2) {
    throw SizeError("multiplexed rotation: expected " + std::to_string(amplitudes_.size() / 2) +
                    " betas, got " + std::to_string(betas.size()));
  }
  const ComplexVec beta = checked_betas(betas);
  const std::size_t bit = std::size_t{1} << ancilla;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & bit) continue;
    const Complex b = beta[compress(i, ancilla)];
    const double gamma = std::sqrt(std::max(0.0, 1.0 - std::norm(b)));
    const Complex a0 = amplitudes_[i];
    const Complex a1 = amplitudes_[i | bit];
    amplitudes_[i] = b * a0 - gamma * a1;
    amplitudes_[i | bit] = gamma * a0 + std::conj(b) * a1;
  }
  return *this;
}

PostSelection StateVector::postselect(Qubit qubit, int outcome) const {
  check_qubit(qubit);
  if (outcome != 0 && outcome != 1) throw ArgumentError("outcome must be 0 or 1");
  if (num_qubits_ < 2) throw ArgumentError("postselect needs at least two qubits");
  const std::size_t bit = std::size_t{1} << qubit;
  ComplexVec branch(amplitudes_.size() / 2);
  double p = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (((i & bit) != 0) != (outcome == 1)) continue;
    branch[compress(i, qubit)] = amplitudes_[i];
    p += std::norm(amplitudes_[i]);
  }
  if (p < kMinBranchProbability) {
    throw DegenerateBranchError("postselect: branch probability " + std::to_string(p) +
                                " below threshold");
  }
  ComplexVec renorm = branch;
  const double scale = 1.0 / std::sqrt(p);
  for (Complex& a : renorm) a *= scale;
  return {StateVector(num_qubits_ - 1, std::move(renorm)), std::move(branch), p};
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
  return p;
}

std::map<std::uint64_t, std::uint64_t> StateVector::sample(std::uint64_t shots,
                                                           std::uint64_t seed) const {
  if (shots == 0) throw ArgumentError("sample: shots must be >= 1");
  const std::vector<double> p = probabilities();
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) cdf[i] = (acc += p[i]);
  // Last index with non-zero probability absorbs rounding at the top of the CDF.
  std::size_t last = p.size() - 1;
  while (last > 0 && p[last] == 0.0) --last;

  Engine engine = make_engine(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform01(engine) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx > last) idx = last;
    ++counts[idx];
  }
  return counts;
}

}  // namespace qbluestein

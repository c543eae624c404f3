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

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qbluestein/errors.hpp"
#include "qbluestein/random.hpp"

using namespace qbluestein;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector random_state(unsigned q, std::uint64_t seed) {
  Engine e = make_engine(seed, q);
  return StateVector::from_amplitudes(random_unit_vector(std::size_t{1} << q, e));
}

// Dense matrix of a single gate via column-by-column simulation.
DenseMatrix simulated_matrix(const Gate& g, unsigned q) {
  const std::size_t dim = std::size_t{1} << q;
  DenseMatrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector s = StateVector::basis(q, j);
    s.apply(g);
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = s[i];
  }
  return u;
}

}  // namespace

TEST(init_basis, fixtures) {
  const StateVector s = StateVector::basis(3, 1);
  EXPECT_EQ(s.dimension(), 8u);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(s[i], i == 1 ? Complex{1} : Complex{});
  EXPECT_EQ(StateVector::basis(1, 0)[0], Complex{1});
  EXPECT_EQ(StateVector::basis(4, 15)[15], Complex{1});
  EXPECT_THROW(StateVector::basis(2, 4), IndexError);
  EXPECT_THROW(StateVector::basis(0, 0), ArgumentError);
}

TEST(init_amplitudes, normalizes_and_pads) {
  const LoadedState l = init_amplitudes(4, ComplexVec{1, 1, 1, 0, 0, 0});
  EXPECT_NEAR(l.norm, std::sqrt(3.0), 1e-15);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_NEAR(std::abs(l.state[i] - Complex(i < 3 ? 1 / std::sqrt(3.0) : 0.0)), 0, 1e-15);
  }
  const LoadedState one = init_amplitudes(2, ComplexVec{1});
  EXPECT_EQ(one.state[0], Complex{1});
  EXPECT_EQ(one.state[3], Complex{});

  Engine e = make_engine(12);
  ComplexVec x(5);
  for (Complex& v : x) v = {standard_normal(e), standard_normal(e)};
  EXPECT_NEAR(init_amplitudes(3, x).state.norm_squared(), 1.0, 1e-12);

  EXPECT_THROW(init_amplitudes(2, ComplexVec(5, 1.0)), SizeError);
  EXPECT_THROW(init_amplitudes(2, ComplexVec{0, 0}), NormalizationError);
}

TEST(apply_gate, hadamard_and_phase) {
  StateVector s = StateVector::basis(1, 0);
  s.apply(Hadamard{0});
  EXPECT_NEAR(std::abs(s[0] - kInvSqrt2), 0, 1e-16);
  EXPECT_NEAR(std::abs(s[1] - kInvSqrt2), 0, 1e-16);
  s.apply(Phase{0, kPi});
  EXPECT_NEAR(std::abs(s[0] - kInvSqrt2), 0, 1e-16);
  EXPECT_NEAR(std::abs(s[1] + kInvSqrt2), 0, 1e-15);
}

TEST(apply_gate, controlled_phase_dense_matrix) {
  const double theta = 0.7321;
  const DenseMatrix u = simulated_matrix(ControlledPhase{0, 1, theta}, 2);
  DenseMatrix expected = DenseMatrix::Identity(4, 4);
  expected(3, 3) = std::polar(1.0, theta);
  EXPECT_LT((u - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(apply_gate, swap_permutes_bits) {
  StateVector s = StateVector::basis(3, 0b001);
  s.apply(Swap{0, 2});
  EXPECT_EQ(s[0b100], Complex{1});
  s.apply(Swap{1, 2});
  EXPECT_EQ(s[0b010], Complex{1});
}

TEST(apply_gate, errors) {
  StateVector s = StateVector::basis(2, 0);
  EXPECT_THROW(s.apply(Hadamard{2}), IndexError);
  EXPECT_THROW(s.apply(ControlledPhase{1, 1, 0.3}), ArgumentError);
  EXPECT_THROW(s.apply(Swap{0, 0}), ArgumentError);
}

TEST(apply_gate, every_gate_matches_circuit_to_matrix_and_is_unitary) {
  const unsigned q = 4;
  Engine e = make_engine(13);
  std::vector<Gate> gates{Hadamard{2}, Phase{1, 1.1}, ControlledPhase{3, 0, -2.2}, Swap{1, 3}};
  gates.push_back(MultiplexedAncillaRotation{random_unit_vector(8, e), 2});
  for (const Gate& g : gates) {
    Circuit c(q);
    c.append(g);
    const DenseMatrix sim = simulated_matrix(g, q);
    EXPECT_LT((sim - circuit_to_matrix(c)).cwiseAbs().maxCoeff(), 1e-15) << gate_kind_name(g);
    EXPECT_LT(oracle::unitarity_defect(sim), 1e-12) << gate_kind_name(g);
  }
}

TEST(apply_gate, preserves_norm) {
  StateVector s = random_state(5, 14);
  Engine e = make_engine(15);
  for (int step = 0; step < 500; ++step) {
    const auto a = static_cast<Qubit>(e() % 5);
    const auto b = static_cast<Qubit>((a + 1 + e() % 4) % 5);
    switch (e() % 4) {
      case 0: s.apply(Hadamard{a}); break;
      case 1: s.apply(Phase{a, uniform01(e) * 6}); break;
      case 2: s.apply(ControlledPhase{a, b, uniform01(e) * 6}); break;
      default: s.apply(Swap{a, b}); break;
    }
    ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
  }
}

TEST(apply_diagonal, identity_fixture_and_errors) {
  StateVector s = random_state(3, 16);
  const StateVector before = s;
  s.apply_diagonal(ComplexVec(8, 1.0));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(s[i], before[i]);

  StateVector b = StateVector::basis(3, 1);
  ComplexVec phases(8);
  for (std::size_t j = 0; j < 8; ++j) phases[j] = chirp(j, 3, -1);
  b.apply_diagonal(phases);
  EXPECT_LT(std::abs(b[1] - std::polar(1.0, -kPi / 3)), 1e-15);

  EXPECT_THROW(s.apply_diagonal(ComplexVec(4, 1.0)), SizeError);
  ComplexVec bad(8, 1.0);
  bad[5] = 1.01;
  EXPECT_THROW(s.apply_diagonal(bad), UnitarityError);
}

TEST(apply_diagonal, random_unimodular_preserves_norm) {
  StateVector s = random_state(6, 17);
  Engine e = make_engine(18);
  ComplexVec phases(64);
  for (Complex& p : phases) p = std::polar(1.0, uniform01(e) * 2 * kPi);
  s.apply_diagonal(phases);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(multiplexed_rotation, identity_and_full_flip) {
  StateVector s = random_state(3, 19);
  const StateVector before = s;
  s.apply_multiplexed_ancilla_rotation(ComplexVec(4, 1.0), 2);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(s[i], before[i]);

  // Ancilla (qubit 2) in |0>, all beta = 0: amplitude moves to the |1> half.
  StateVector t = init_amplitudes(3, ComplexVec{0.5, 0.5, 0.5, 0.5}).state;
  t.apply_multiplexed_ancilla_rotation(ComplexVec(4, 0.0), 2);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(std::abs(t[k]), 0, 1e-15);
    EXPECT_NEAR(std::abs(t[k + 4] - 0.5), 0, 1e-15);
  }
}

TEST(multiplexed_rotation, dense_reconstruction_is_unitary) {
  Engine e = make_engine(20);
  for (Qubit anc = 0; anc < 3; ++anc) {
    ComplexVec betas(4);
    for (Complex& b : betas) b = std::polar(uniform01(e), uniform01(e) * 2 * kPi);
    const DenseMatrix u = simulated_matrix(MultiplexedAncillaRotation{betas, anc}, 3);
    EXPECT_LT(oracle::unitarity_defect(u), 1e-12);
  }
}

TEST(multiplexed_rotation, beta_bounds) {
  StateVector s = StateVector::basis(2, 0);
  // Within 1e-12 of one: clamped.
  s.apply_multiplexed_ancilla_rotation(ComplexVec{1.0 + 5e-13, 0.5}, 1);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  EXPECT_THROW(s.apply_multiplexed_ancilla_rotation(ComplexVec{1.001, 0.5}, 1), NormalizationError);
  EXPECT_THROW(s.apply_multiplexed_ancilla_rotation(ComplexVec{1.0}, 1), SizeError);
  EXPECT_THROW(s.apply_multiplexed_ancilla_rotation(ComplexVec{1.0, 1.0}, 2), IndexError);
}

TEST(postselect, fixtures) {
  // |0> on qubit 0, |+> on the ancilla (qubit 1).
  StateVector s = StateVector::basis(2, 0);
  s.apply(Hadamard{1});
  const PostSelection ps = s.postselect(1, 0);
  EXPECT_NEAR(ps.probability, 0.5, 1e-15);
  EXPECT_EQ(ps.state.num_qubits(), 1u);
  EXPECT_NEAR(std::abs(ps.state[0] - 1.0), 0, 1e-15);

  const StateVector b = StateVector::basis(3, 0b101);
  const PostSelection full = b.postselect(1, 0);
  EXPECT_DOUBLE_EQ(full.probability, 1.0);
  EXPECT_EQ(full.state[0b11], Complex{1});

  EXPECT_THROW(b.postselect(1, 1), DegenerateBranchError);
  EXPECT_THROW(b.postselect(3, 0), IndexError);
  EXPECT_THROW(b.postselect(0, 2), ArgumentError);
  EXPECT_THROW(StateVector::basis(1, 0).postselect(0, 0), ArgumentError);
}

TEST(postselect, branch_norm_equals_probability) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const StateVector s = random_state(5, 30 + seed);
    for (Qubit q = 0; q < 5; ++q) {
      for (int outcome : {0, 1}) {
        const PostSelection ps = s.postselect(q, outcome);
        EXPECT_NEAR(l2_norm(ps.branch) * l2_norm(ps.branch), ps.probability, 1e-12);
        EXPECT_NEAR(ps.state.norm_squared(), 1.0, 1e-12);
      }
    }
  }
}

TEST(probabilities, fixtures) {
  const std::vector<double> p = StateVector::basis(3, 6).probabilities();
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(p[i], i == 6 ? 1.0 : 0.0);
  StateVector u = StateVector::basis(2, 0);
  u.apply(Hadamard{0}).apply(Hadamard{1});
  for (double v : u.probabilities()) EXPECT_NEAR(v, 0.25, 1e-15);
}

TEST(sample, deterministic_and_convergent) {
  StateVector u = StateVector::basis(2, 0);
  u.apply(Hadamard{0}).apply(Hadamard{1});
  const auto a = u.sample(40000, 99);
  EXPECT_EQ(a, u.sample(40000, 99));
  EXPECT_NE(a, u.sample(40000, 100));
  std::uint64_t total = 0;
  for (const auto& [idx, count] : a) {
    EXPECT_LT(idx, 4u);
    EXPECT_NEAR(static_cast<double>(count) / 40000.0, 0.25, 0.01);
    total += count;
  }
  EXPECT_EQ(total, 40000u);

  const auto single = StateVector::basis(3, 5).sample(1, 7);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.begin()->first, 5u);
  EXPECT_THROW(u.sample(0, 1), ArgumentError);
}

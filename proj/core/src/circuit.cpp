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

#include "qbluestein/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "qbluestein/errors.hpp"

namespace qbluestein {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

double reduce_angle(double angle) {
  if (!std::isfinite(angle)) throw ArgumentError("gate angle must be finite");
  return std::fmod(angle, kTwoPi);
}

Gate make_phase(Qubit target, double angle) { return Phase{target, reduce_angle(angle)}; }

Gate make_controlled_phase(Qubit control, Qubit target, double angle) {
  return ControlledPhase{control, target, reduce_angle(angle)};
}

std::vector<Qubit> gate_qubits(const Gate& gate) {
  return std::visit(Overloaded{
                        [](const Hadamard& g) { return std::vector<Qubit>{g.target}; },
                        [](const Phase& g) { return std::vector<Qubit>{g.target}; },
                        [](const ControlledPhase& g) {
                          return std::vector<Qubit>{g.control, g.target};
                        },
                        [](const Swap& g) { return std::vector<Qubit>{g.a, g.b}; },
                        [](const MultiplexedAncillaRotation& g) {
                          return std::vector<Qubit>{g.ancilla};
                        },
                    },
                    gate);
}

std::string_view gate_kind_name(const Gate& gate) {
  return std::visit(Overloaded{
                        [](const Hadamard&) { return std::string_view{"H"}; },
                        [](const Phase&) { return std::string_view{"P"}; },
                        [](const ControlledPhase&) { return std::string_view{"CP"}; },
                        [](const Swap&) { return std::string_view{"SWAP"}; },
                        [](const MultiplexedAncillaRotation&) {
                          return std::string_view{"MUX_ANCILLA_ROTATION"};
                        },
                    },
                    gate);
}

ComplexVec checked_betas(std::span<const Complex> betas) {
  check_complex_vec(betas, "multiplexed ancilla rotation");
  ComplexVec out(betas.begin(), betas.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double mag = std::abs(out[k]);
    if (mag > 1.0 + kBetaClampTolerance) {
      throw NormalizationError("multiplexed ancilla rotation: |beta_" + std::to_string(k) +
                               "| = " + std::to_string(mag) +
                               " exceeds 1 (normalization constant too small)");
    }
    if (mag > 1.0) out[k] /= mag;
  }
  return out;
}

Circuit::Circuit(unsigned width) : width_(width) {
  if (width == 0) throw ArgumentError("circuit width must be >= 1");
}

Circuit& Circuit::append(Gate gate) {
  const std::vector<Qubit> qubits = gate_qubits(gate);
  for (Qubit q : qubits) {
    if (q >= width_) {
      throw IndexError("qubit " + std::to_string(q) + " outside circuit width " +
                       std::to_string(width_));
    }
  }
  if (qubits.size() == 2 && qubits[0] == qubits[1]) {
    throw ArgumentError("two-qubit gate on a single qubit " + std::to_string(qubits[0]));
  }
  if (auto* mux = std::get_if<MultiplexedAncillaRotation>(&gate)) {
    if (mux->betas.size() != (std::size_t{1} << (width_ - 1))) {
      throw SizeError("multiplexed rotation needs 2^(width-1) betas");
    }
    mux->betas = checked_betas(mux->betas);
  }
  if (auto* p = std::get_if<Phase>(&gate)) p->angle = reduce_angle(p->angle);
  if (auto* cp = std::get_if<ControlledPhase>(&gate)) cp->angle = reduce_angle(cp->angle);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
  if (other.width_ > width_) throw SizeError("cannot extend with a wider circuit");
  for (const Gate& g : other.gates_) append(g);
  return *this;
}

Circuit Circuit::adjoint() const {
  Circuit out(width_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.append(std::visit(
        Overloaded{
            [](const Hadamard& g) -> Gate { return g; },
            [](const Phase& g) -> Gate { return Phase{g.target, -g.angle}; },
            [](const ControlledPhase& g) -> Gate {
              return ControlledPhase{g.control, g.target, -g.angle};
            },
            [](const Swap& g) -> Gate { return g; },
            [](const MultiplexedAncillaRotation&) -> Gate {
              throw ArgumentError("adjoint of a multiplexed ancilla rotation is not in the IR");
            },
        },
        *it));
  }
  return out;
}

Circuit qft_circuit(unsigned m, Direction direction) {
  if (m == 0) throw ArgumentError("qft_circuit: m must be >= 1");
  Circuit c(m);
  for (unsigned i = m; i-- > 0;) {
    c.append(Hadamard{i});
    for (unsigned j = i; j-- > 0;) {
      c.append(make_controlled_phase(j, i, -kPi / std::ldexp(1.0, static_cast<int>(i - j))));
    }
  }
  for (unsigned i = 0; i < m / 2; ++i) c.append(Swap{i, m - 1 - i});
  return direction == Direction::kForward ? c : c.adjoint();
}

Circuit quadratic_phase_circuit(unsigned m, double theta) {
  if (m == 0) throw ArgumentError("quadratic_phase_circuit: m must be >= 1");
  if (!std::isfinite(theta)) throw ArgumentError("quadratic_phase_circuit: theta must be finite");
  Circuit c(m);
  // Scaling by a power of two is exact, so only theta itself carries rounding.
  for (unsigned l = 0; l < m; ++l) {
    c.append(make_phase(l, std::ldexp(theta, static_cast<int>(2 * l))));
  }
  for (unsigned l = 0; l < m; ++l) {
    for (unsigned r = l + 1; r < m; ++r) {
      c.append(make_controlled_phase(l, r, std::ldexp(theta, static_cast<int>(l + r + 1))));
    }
  }
  return c;
}

namespace {

// pi * numerator * 2^shift / denominator reduced to an angle in (-pi, pi].
// Operands stay below 2^32 (denominator is capped), so products fit in int64.
double reduced_pi_multiple(PiFraction theta, unsigned shift) {
  const std::int64_t period = 2 * theta.denominator;
  std::int64_t weight = 1;
  for (unsigned s = 0; s < shift; ++s) weight = (weight * 2) % period;
  std::int64_t num = theta.numerator % period;
  if (num < 0) num += period;
  std::int64_t r = num * weight % period;
  if (r > theta.denominator) r -= period;
  return kPi * static_cast<double>(r) / static_cast<double>(theta.denominator);
}

}  // namespace

Circuit quadratic_phase_circuit(unsigned m, PiFraction theta) {
  if (m == 0) throw ArgumentError("quadratic_phase_circuit: m must be >= 1");
  if (theta.denominator == 0) throw ArgumentError("quadratic_phase_circuit: zero denominator");
  if (theta.denominator > kMaxPiDenominator || theta.denominator < -kMaxPiDenominator) {
    throw ArgumentError("quadratic_phase_circuit: denominator too large");
  }
  if (theta.denominator < 0) {
    theta.numerator = -theta.numerator;
    theta.denominator = -theta.denominator;
  }
  Circuit c(m);
  for (unsigned l = 0; l < m; ++l) {
    c.append(make_phase(l, reduced_pi_multiple(theta, 2 * l)));
  }
  for (unsigned l = 0; l < m; ++l) {
    for (unsigned r = l + 1; r < m; ++r) {
      c.append(make_controlled_phase(l, r, reduced_pi_multiple(theta, l + r + 1)));
    }
  }
  return c;
}

GateReport gate_counts(const Circuit& circuit) {
  GateReport r;
  for (const Gate& g : circuit.gates()) {
    std::visit(Overloaded{
                   [&](const Hadamard&) { ++r.hadamard; },
                   [&](const Phase&) { ++r.phase; },
                   [&](const ControlledPhase&) { ++r.controlled_phase; },
                   [&](const Swap&) { ++r.swap; },
                   [&](const MultiplexedAncillaRotation&) {
                     ++r.multiplexed;
                     r.multiplexed_two_level += std::size_t{1} << (circuit.width() - 1);
                   },
               },
               g);
  }
  r.total = circuit.size();
  r.elementary = r.hadamard + r.phase + r.controlled_phase + r.swap;
  r.two_qubit = r.controlled_phase + r.swap;
  return r;
}

namespace {

using Local2 = Eigen::Matrix2cd;
using Local4 = Eigen::Matrix4cd;

// Left-multiply `u` by a one-qubit operator on `q`. `block(k)` returns the
// 2x2 matrix for rows whose other bits form the compressed index k.
template <class BlockFn>
void left_apply_1q(DenseMatrix& u, Qubit q, BlockFn block) {
  const std::size_t dim = static_cast<std::size_t>(u.rows());
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i0 = 0; i0 < dim; ++i0) {
    if (i0 & bit) continue;
    const std::size_t i1 = i0 | bit;
    const std::size_t k = (i0 & (bit - 1)) | ((i0 >> (q + 1)) << q);
    const Local2 g = block(k);
    const Eigen::RowVectorXcd r0 = u.row(i0);
    const Eigen::RowVectorXcd r1 = u.row(i1);
    u.row(i0) = g(0, 0) * r0 + g(0, 1) * r1;
    u.row(i1) = g(1, 0) * r0 + g(1, 1) * r1;
  }
}

// Local index = bit(q0) + 2 * bit(q1).
void left_apply_2q(DenseMatrix& u, Qubit q0, Qubit q1, const Local4& g) {
  const std::size_t dim = static_cast<std::size_t>(u.rows());
  const std::size_t b0 = std::size_t{1} << q0;
  const std::size_t b1 = std::size_t{1} << q1;
  for (std::size_t base = 0; base < dim; ++base) {
    if ((base & b0) || (base & b1)) continue;
    const std::size_t rows[4] = {base, base | b0, base | b1, base | b0 | b1};
    Eigen::MatrixXcd old(4, u.cols());
    for (int r = 0; r < 4; ++r) old.row(r) = u.row(static_cast<Eigen::Index>(rows[r]));
    for (int r = 0; r < 4; ++r) {
      Eigen::RowVectorXcd acc = Eigen::RowVectorXcd::Zero(u.cols());
      for (int c = 0; c < 4; ++c) {
        if (g(r, c) != Complex{}) acc += g(r, c) * old.row(c);
      }
      u.row(static_cast<Eigen::Index>(rows[r])) = acc;
    }
  }
}

}  // namespace

DenseMatrix circuit_to_matrix(const Circuit& circuit) {
  if (circuit.width() > kMaxDenseWidth) {
    throw ResourceError("circuit_to_matrix: width " + std::to_string(circuit.width()) +
                        " exceeds " + std::to_string(kMaxDenseWidth));
  }
  const Eigen::Index dim = Eigen::Index{1} << circuit.width();
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  const double s = 1.0 / std::sqrt(2.0);
  for (const Gate& gate : circuit.gates()) {
    std::visit(Overloaded{
                   [&](const Hadamard& g) {
                     Local2 h;
                     h << s, s, s, -s;
                     left_apply_1q(u, g.target, [&](std::size_t) { return h; });
                   },
                   [&](const Phase& g) {
                     Local2 p = Local2::Identity();
                     p(1, 1) = std::polar(1.0, g.angle);
                     left_apply_1q(u, g.target, [&](std::size_t) { return p; });
                   },
                   [&](const ControlledPhase& g) {
                     Local4 cp = Local4::Identity();
                     cp(3, 3) = std::polar(1.0, g.angle);
                     left_apply_2q(u, g.control, g.target, cp);
                   },
                   [&](const Swap& g) {
                     Local4 sw = Local4::Zero();
                     sw(0, 0) = sw(3, 3) = 1.0;
                     sw(1, 2) = sw(2, 1) = 1.0;
                     left_apply_2q(u, g.a, g.b, sw);
                   },
                   [&](const MultiplexedAncillaRotation& g) {
                     left_apply_1q(u, g.ancilla, [&](std::size_t k) {
                       const Complex beta = g.betas[k];
                       const double gamma = std::sqrt(std::max(0.0, 1.0 - std::norm(beta)));
                       Local2 block;
                       block << beta, -gamma, gamma, std::conj(beta);
                       return block;
                     });
                   },
               },
               gate);
  }
  return u;
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& gate : circuit.gates()) {
    nlohmann::json g;
    g["kind"] = gate_kind_name(gate);
    g["qubits"] = gate_qubits(gate);
    std::visit(Overloaded{
                   [&](const Phase& p) { g["angle"] = p.angle; },
                   [&](const ControlledPhase& p) { g["angle"] = p.angle; },
                   [&](const MultiplexedAncillaRotation& mux) {
                     nlohmann::json betas = nlohmann::json::array();
                     for (const Complex& b : mux.betas) betas.push_back({b.real(), b.imag()});
                     g["betas"] = std::move(betas);
                   },
                   [](const auto&) {},
               },
               gate);
    gates.push_back(std::move(g));
  }
  return {{"width", circuit.width()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json& doc) {
  try {
    Circuit c(doc.at("width").get<unsigned>());
    for (const nlohmann::json& g : doc.at("gates")) {
      const std::string kind = g.at("kind").get<std::string>();
      const std::vector<Qubit> q = g.at("qubits").get<std::vector<Qubit>>();
      const std::size_t arity = (kind == "CP" || kind == "SWAP") ? 2 : 1;
      if (q.size() != arity) throw ArgumentError("gate '" + kind + "' has wrong qubit count");
      if (kind == "H") {
        c.append(Hadamard{q[0]});
      } else if (kind == "P") {
        c.append(Phase{q[0], g.at("angle").get<double>()});
      } else if (kind == "CP") {
        c.append(ControlledPhase{q[0], q[1], g.at("angle").get<double>()});
      } else if (kind == "SWAP") {
        c.append(Swap{q[0], q[1]});
      } else if (kind == "MUX_ANCILLA_ROTATION") {
        ComplexVec betas;
        for (const nlohmann::json& b : g.at("betas")) {
          betas.emplace_back(b.at(0).get<double>(), b.at(1).get<double>());
        }
        c.append(MultiplexedAncillaRotation{std::move(betas), q[0]});
      } else {
        throw ArgumentError("unknown gate kind '" + kind + "'");
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed circuit document: ") + e.what());
  }
}

}  // namespace qbluestein

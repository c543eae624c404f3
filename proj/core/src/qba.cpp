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

#include "qbluestein/qba.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "qbluestein/errors.hpp"
#include "qbluestein/random.hpp"

namespace qbluestein {

ComplexVec BluesteinPlan::betas() const {
  ComplexVec beta(fourier_b.size());
  for (std::size_t k = 0; k < beta.size(); ++k) beta[k] = fourier_b[k] / alpha;
  return beta;
}

BluesteinPlan build_plan(std::size_t n) {
  if (n == 0) throw ArgumentError("build_plan: n must be >= 1");
  BluesteinPlan plan;
  plan.n = n;
  plan.m = ceil_log2_at_least_one(2 * n - 1);
  plan.big_m = std::size_t{1} << plan.m;
  plan.kernel_b = wrapped_chirp_kernel(n, plan.big_m);
  plan.fourier_b = fft_radix2(plan.kernel_b, Direction::kForward);
  for (const Complex& b : plan.fourier_b) plan.alpha = std::max(plan.alpha, std::abs(b));
  return plan;
}

Circuit chirp_circuit(const BluesteinPlan& plan) {
  return quadratic_phase_circuit(plan.m, PiFraction{-1, static_cast<std::int64_t>(plan.n)});
}

Circuit qba_circuit(const BluesteinPlan& plan) {
  Circuit c(plan.m + 1);
  const Circuit chirp = chirp_circuit(plan);
  c.extend(chirp);
  c.extend(qft_circuit(plan.m, Direction::kForward));
  c.append(MultiplexedAncillaRotation{plan.betas(), plan.ancilla()});
  c.extend(qft_circuit(plan.m, Direction::kInverse));
  c.extend(chirp);
  return c;
}

ComplexVec QbaResult::normalized_logical() const {
  ComplexVec out = y;
  const double norm = l2_norm(out);
  if (norm > 0.0) {
    for (Complex& v : out) v /= norm;
  }
  return out;
}

namespace {

void check_input(std::span<const Complex> x, const BluesteinPlan& plan) {
  check_complex_vec(x, "run_qba");
  if (x.size() != plan.n) {
    throw SizeError("run_qba: input length " + std::to_string(x.size()) + " but plan is for n = " +
                    std::to_string(plan.n));
  }
}

// Fills everything derived from the post-selected branch.
void finish_result(QbaResult& r, std::span<const Complex> x, const BluesteinPlan& plan,
                   double input_norm, bool verify) {
  const double scale = plan.alpha * input_norm;
  r.y.resize(plan.n);
  r.logical_mass = 0.0;
  for (std::size_t k = 0; k < plan.n; ++k) {
    r.y[k] = scale * r.branch[k];
    r.logical_mass += std::norm(r.branch[k]);
  }
  r.logical_probabilities.resize(plan.n);
  for (std::size_t k = 0; k < plan.n; ++k) {
    r.logical_probabilities[k] = std::norm(r.branch[k]) / r.logical_mass;
  }
  if (verify) r.max_abs_error_vs_oracle = max_abs_error(r.y, dft_direct(x));
}

}  // namespace

QbaResult run_qba(std::span<const Complex> x, const BluesteinPlan& plan, const QbaOptions& options) {
  check_input(x, plan);
  LoadedState loaded = init_amplitudes(plan.m + 1, x);
  StateVector& state = loaded.state;

  const Circuit chirp = chirp_circuit(plan);
  ComplexVec chirp_phases;
  if (options.chirp_path == ChirpPath::kDiagonal) {
    chirp_phases.resize(state.dimension());
    for (std::size_t i = 0; i < chirp_phases.size(); ++i) {
      chirp_phases[i] = qbluestein::chirp(i & (plan.big_m - 1), plan.n, -1);
    }
  }
  auto apply_chirp = [&] {
    if (options.chirp_path == ChirpPath::kGates) {
      state.apply(chirp);
    } else {
      state.apply_diagonal(chirp_phases);
    }
  };

  apply_chirp();
  state.apply(qft_circuit(plan.m, Direction::kForward));
  state.apply_multiplexed_ancilla_rotation(plan.betas(), plan.ancilla());
  state.apply(qft_circuit(plan.m, Direction::kInverse));
  apply_chirp();

  PostSelection ps = state.postselect(plan.ancilla(), 0);

  QbaResult r;
  r.branch = std::move(ps.branch);
  r.success_probability = ps.probability;
  r.gate_report = gate_counts(qba_circuit(plan));
  finish_result(r, x, plan, loaded.norm, options.verify);
  return r;
}

QbaResult run_qba_dense(std::span<const Complex> x, const BluesteinPlan& plan) {
  check_input(x, plan);
  if (plan.m > kMaxDenseQbaQubits) {
    throw ResourceError("run_qba_dense: m = " + std::to_string(plan.m) + " exceeds " +
                        std::to_string(kMaxDenseQbaQubits));
  }
  const double norm = l2_norm(x);
  if (norm == 0.0) throw NormalizationError("run_qba_dense: zero input");

  const DenseMatrix chirp = circuit_to_matrix(chirp_circuit(plan));
  const DenseMatrix qft = circuit_to_matrix(qft_circuit(plan.m, Direction::kForward));
  const DenseMatrix iqft = circuit_to_matrix(qft_circuit(plan.m, Direction::kInverse));
  const ComplexVec beta = plan.betas();
  const Eigen::VectorXcd conv =
      Eigen::Map<const Eigen::VectorXcd>(beta.data(), static_cast<Eigen::Index>(beta.size()));

  const DenseMatrix op = chirp * iqft * conv.asDiagonal() * qft * chirp;

  Eigen::VectorXcd in = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(plan.big_m));
  for (std::size_t j = 0; j < x.size(); ++j) in(static_cast<Eigen::Index>(j)) = x[j] / norm;
  const Eigen::VectorXcd out = op * in;

  QbaResult r;
  r.branch.assign(out.data(), out.data() + out.size());
  r.success_probability = out.squaredNorm();
  if (r.success_probability < kMinBranchProbability) {
    throw DegenerateBranchError("run_qba_dense: ancilla-0 branch has zero probability");
  }
  r.gate_report = gate_counts(qba_circuit(plan));
  finish_result(r, x, plan, norm, true);
  return r;
}

QbaGateStats qba_gate_stats(const BluesteinPlan& plan) {
  const GateReport chirp = gate_counts(chirp_circuit(plan));
  const GateReport fwd = gate_counts(qft_circuit(plan.m, Direction::kForward));
  const GateReport inv = gate_counts(qft_circuit(plan.m, Direction::kInverse));
  const GateReport all = gate_counts(qba_circuit(plan));
  QbaGateStats s;
  s.n = plan.n;
  s.m = plan.m;
  s.big_m = plan.big_m;
  s.diagonal_gates = 2 * chirp.total;
  s.qft_gates = fwd.total + inv.total;
  s.swap_gates = all.swap;
  s.total = all.elementary;
  s.two_qubit = all.two_qubit;
  s.macro_ops = all.multiplexed;
  return s;
}

std::size_t smallest_n_for_qubits(unsigned m) {
  if (m == 0) throw ArgumentError("smallest_n_for_qubits: m must be >= 1");
  if (m == 1) return 1;
  // Need 2^(m-1) < 2n - 1, i.e. n > 2^(m-2) + 1/2.
  return (std::size_t{1} << (m - 2)) + 1;
}

GateScalingFit fit_gate_scaling(unsigned m_min, unsigned m_max) {
  if (m_min == 0 || m_min >= m_max) throw ArgumentError("fit_gate_scaling: need 1 <= m_min < m_max");
  GateScalingFit fit;
  fit.m_min = m_min;
  fit.m_max = m_max;
  std::vector<double> m2, total, log_m, log_total;
  for (unsigned m = m_min; m <= m_max; ++m) {
    const QbaGateStats row = qba_gate_stats(build_plan(smallest_n_for_qubits(m)));
    fit.rows.push_back(row);
    const auto md = static_cast<double>(m);
    const auto td = static_cast<double>(row.total);
    m2.push_back(md * md);
    total.push_back(td);
    log_m.push_back(std::log(md));
    log_total.push_back(std::log(td));
  }
  fit.vs_m_squared = fit_line(m2, total);
  fit.log_log = fit_line(log_m, log_total);
  return fit;
}

double VerifyReport::max_relative_error() const {
  double e = 0.0;
  for (const VerifyRow& row : rows) e = std::max(e, row.max_relative_error);
  return e;
}

double VerifyReport::max_mass_deviation() const {
  double e = 0.0;
  for (const VerifyRow& row : rows) e = std::max(e, row.max_mass_deviation);
  return e;
}

VerifyReport verify_range(std::size_t n_min, std::size_t n_max, std::size_t trials,
                          std::uint64_t seed, unsigned threads) {
  if (n_min == 0 || n_min > n_max) throw ArgumentError("verify_range: need 1 <= n_min <= n_max");
  if (trials == 0) throw ArgumentError("verify_range: trials must be >= 1");

  const std::size_t count = n_max - n_min + 1;
  std::vector<BluesteinPlan> plans(count);
  for (std::size_t i = 0; i < count; ++i) plans[i] = build_plan(n_min + i);

  struct Outcome {
    double rel_error;
    double mass_deviation;
    double success;
  };
  std::vector<Outcome> outcomes(count * trials);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job; (job = next.fetch_add(1)) < outcomes.size();) {
      const BluesteinPlan& plan = plans[job / trials];
      Engine engine = make_engine(seed, plan.n, job % trials);
      const ComplexVec x = random_unit_vector(plan.n, engine);
      const QbaResult r = run_qba(x, plan);
      const double expected_mass = static_cast<double>(plan.n) / (plan.alpha * plan.alpha);
      outcomes[job] = {relative_l2_error(r.y, dft_direct(x)),
                       std::abs(r.logical_mass - expected_mass), r.success_probability};
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(outcomes.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  VerifyReport report;
  for (std::size_t i = 0; i < count; ++i) {
    VerifyRow row;
    row.n = plans[i].n;
    row.m = plans[i].m;
    row.alpha = plans[i].alpha;
    row.min_success_probability = 1.0;
    double sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Outcome& o = outcomes[i * trials + t];
      row.max_relative_error = std::max(row.max_relative_error, o.rel_error);
      row.max_mass_deviation = std::max(row.max_mass_deviation, o.mass_deviation);
      row.min_success_probability = std::min(row.min_success_probability, o.success);
      sum += o.rel_error;
    }
    row.mean_relative_error = sum / static_cast<double>(trials);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace qbluestein

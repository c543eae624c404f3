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

// Acceptance suite. Runs every criterion (or only those named with
// --only N[,N...]) and prints one PASS/FAIL line each. Exit status is
// non-zero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "qbluestein/qba.hpp"
#include "qbluestein/random.hpp"

using namespace qbluestein;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_seconds;  // 0 = no limit stated
  std::function<Outcome()> run;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

const double kSqrt3 = std::sqrt(3.0);

Outcome fixture_n3() {
  Outcome o;
  const QbaResult r = run_qba(ComplexVec{0, 1, 0}, build_plan(3));
  const ComplexVec logical = r.normalized_logical();
  const ComplexVec printed{{0.57735, 0}, {-0.288675, -0.5}, {-0.288675, 0.5}};
  double printed_err = 0, analytic_err = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    printed_err = std::max(printed_err, std::abs(logical[k] - printed[k]));
    analytic_err = std::max(analytic_err, std::abs(logical[k] - unit_root(k, 3) / kSqrt3));
  }
  o.require(printed_err <= 1e-5, "printed amplitudes off by " + sci(printed_err));
  o.require(analytic_err <= 1e-9, "analytic amplitudes off by " + sci(analytic_err));
  o.detail = o.pass ? "vs printed " + sci(printed_err) + ", vs analytic " + sci(analytic_err)
                    : o.detail;
  return o;
}

Outcome fixture_n6() {
  Outcome o;
  const ComplexVec x{1, 1, 1, 0, 0, 0};
  const QbaResult r = run_qba(x, build_plan(6));
  const ComplexVec expected{{3, 0}, {1, -kSqrt3}, {0, 0}, {1, 0}, {0, 0}, {1, kSqrt3}};
  const ComplexVec logical = r.normalized_logical();
  double prop_err = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    prop_err = std::max(prop_err, std::abs(logical[k] - expected[k] / std::sqrt(18.0)));
  }
  const double y_err = max_abs_error(r.y, expected);
  const double oracle_err = max_abs_error(r.y, dft_direct(x));
  o.require(prop_err <= 1e-9, "logical state not proportional: " + sci(prop_err));
  o.require(y_err <= 1e-9, "rescaled y off by " + sci(y_err));
  o.require(oracle_err <= 1e-9, "y vs dft_direct off by " + sci(oracle_err));
  if (o.pass) o.detail = "max |y - y_ref| = " + sci(y_err);
  return o;
}

Outcome exactness_sweep() {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 1; n <= 32; ++n) {
    const BluesteinPlan plan = build_plan(n);
    for (std::uint64_t t = 0; t < 10; ++t) {
      Engine e = make_engine(2024, n, t);
      const ComplexVec x = random_unit_vector(n, e);
      const double err = relative_l2_error(run_qba(x, plan).y, dft_direct(x));
      worst = std::max(worst, err);
      o.require(err < 1e-9, "n=" + std::to_string(n) + " trial " + std::to_string(t) + ": " + sci(err));
    }
  }
  if (o.pass) o.detail = "max relative L2 error " + sci(worst) + " over 320 runs";
  return o;
}

Outcome gate_count_formulas() {
  Outcome o;
  for (unsigned m = 1; m <= 16; ++m) {
    const std::size_t diag = gate_counts(quadratic_phase_circuit(m, PiFraction{-1, 7})).total;
    const std::size_t qft = gate_counts(qft_circuit(m)).total;
    const std::size_t iqft = gate_counts(qft_circuit(m, Direction::kInverse)).total;
    o.require(diag == m * (m + 1) / 2, "diagonal count wrong at m=" + std::to_string(m));
    o.require(qft == m + m * (m - 1) / 2 + m / 2, "QFT count wrong at m=" + std::to_string(m));
    o.require(iqft == qft, "inverse QFT count wrong at m=" + std::to_string(m));
    const QbaGateStats s = qba_gate_stats(build_plan(smallest_n_for_qubits(m)));
    o.require(s.m == m, "plan width mismatch at m=" + std::to_string(m));
    o.require(s.total == 2 * diag + 2 * qft, "QBA total wrong at m=" + std::to_string(m));
  }
  const GateScalingFit fit = fit_gate_scaling(4, 16);
  const double exponent = fit.exponent();
  o.require(std::abs(exponent - 2.0) <= 0.1,
            "log-log regression exponent " + std::to_string(exponent) + " outside 2.0 +/- 0.1");
  std::ostringstream d;
  d << (o.pass ? "" : o.detail + " | ") << "exact counts checked m=1..16; log-log exponent "
    << exponent << "; total vs m^2 slope " << fit.vs_m_squared.slope << " (r^2 "
    << fit.vs_m_squared.r_squared << ")";
  o.detail = d.str();
  return o;
}

Outcome unitarity_suite() {
  Outcome o;
  double worst = 0;
  Engine e = make_engine(77);
  auto check = [&](const Circuit& c, const std::string& what) {
    const double defect = oracle::unitarity_defect(circuit_to_matrix(c));
    worst = std::max(worst, defect);
    o.require(defect <= 1e-12, what + " width " + std::to_string(c.width()) + ": " + sci(defect));
  };
  for (unsigned w = 1; w <= 5; ++w) {
    check(qft_circuit(w), "qft");
    check(qft_circuit(w, Direction::kInverse), "inverse qft");
    check(quadratic_phase_circuit(w, PiFraction{-1, 3}), "quadratic phase");
    check(quadratic_phase_circuit(w, (uniform01(e) - 0.5) * 10), "quadratic phase");
    if (w >= 2) {
      for (Qubit anc = 0; anc < w; ++anc) {
        ComplexVec betas(std::size_t{1} << (w - 1));
        for (Complex& b : betas) b = std::polar(uniform01(e), 2 * kPi * uniform01(e));
        Circuit mux(w);
        mux.append(MultiplexedAncillaRotation{betas, anc});
        check(mux, "multiplexed rotation");
      }
    }
  }
  for (std::size_t n : {2u, 3u, 5u, 8u}) {
    const BluesteinPlan plan = build_plan(n);
    if (plan.m + 1 <= 5) check(qba_circuit(plan), "full QBA circuit");
  }
  if (o.pass) o.detail = "max |UU^dag - I| = " + sci(worst);
  return o;
}

Outcome success_probability_identity() {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 2; n <= 32; ++n) {
    const BluesteinPlan plan = build_plan(n);
    const double expected = static_cast<double>(n) / (plan.alpha * plan.alpha);
    for (std::uint64_t t = 0; t < 5; ++t) {
      Engine e = make_engine(606, n, t);
      const QbaResult r = run_qba(random_unit_vector(n, e), plan);
      const double dev = std::abs(r.logical_mass - expected);
      worst = std::max(worst, dev);
      o.require(dev <= 1e-8, "n=" + std::to_string(n) + ": deviation " + sci(dev));
      o.require(r.success_probability >= r.logical_mass - 1e-12 && r.success_probability <= 1 + 1e-12,
                "success probability out of range at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "max |mass - n/alpha^2| = " + sci(worst);
  return o;
}

Outcome classical_oracle_equivalence() {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 1; n <= 256; ++n) {
    for (std::uint64_t t = 0; t < 5; ++t) {
      Engine e = make_engine(9, n, t);
      const ComplexVec x = random_unit_vector(n, e);
      const double err = relative_l2_error(bluestein_classical(x), dft_direct(x));
      worst = std::max(worst, err);
      o.require(err <= 1e-10, "N=" + std::to_string(n) + ": " + sci(err));
    }
  }
  Engine e = make_engine(9, 10000);
  const ComplexVec big = random_unit_vector(10000, e);
  const double big_err = relative_l2_error(bluestein_classical(big), dft_direct(big));
  o.require(big_err <= 1e-8, "N=10000: " + sci(big_err));
  if (o.pass) o.detail = "max over N<=256 " + sci(worst) + ", N=10^4 " + sci(big_err);
  return o;
}

Outcome cross_path_agreement() {
  Outcome o;
  double worst = 0;
  for (std::size_t n : {3u, 5u, 6u, 7u, 12u}) {
    Engine e = make_engine(31, n);
    const ComplexVec x = random_unit_vector(n, e);
    const BluesteinPlan plan = build_plan(n);
    const QbaResult sv = run_qba(x, plan);
    const QbaResult dense = run_qba_dense(x, plan);
    const double err = std::max(max_abs_error(sv.branch, dense.branch), max_abs_error(sv.y, dense.y));
    worst = std::max(worst, err);
    o.require(err <= 1e-10, "n=" + std::to_string(n) + ": " + sci(err));
  }
  if (o.pass) o.detail = "max path difference " + sci(worst);
  return o;
}

Outcome sample_determinism() {
  Outcome o;
  auto once = [] {
    std::ostringstream out, err;
    const int code = cli::run({"qba", "sample", "--n", "6", "--basis", "2", "--shots", "20000",
                               "--seed", "1234"},
                              out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = once();
  const auto b = once();
  o.require(a.first == 0 && b.first == 0, "sample exited non-zero");
  o.require(!a.second.empty(), "empty output");
  o.require(a.second == b.second, "outputs differ");
  if (o.pass) o.detail = std::to_string(a.second.size()) + " identical bytes";
  return o;
}

std::set<int> parse_only(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) only.insert(std::stoi(tok));
    }
  }
  return only;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "N=3 worked example (M=8)", 1.0, fixture_n3},
      {2, "N=6 worked example (M=16)", 1.0, fixture_n6},
      {3, "exactness sweep n=1..32 x 10", 30.0, exactness_sweep},
      {4, "gate-count formulas and quadratic scaling", 0.0, gate_count_formulas},
      {5, "unitarity of dense reconstructions (width <= 5)", 5.0, unitarity_suite},
      {6, "post-selected logical mass = n/alpha^2", 10.0, success_probability_identity},
      {7, "classical Bluestein == direct DFT", 60.0, classical_oracle_equivalence},
      {8, "state-vector vs dense operator path", 10.0, cross_path_agreement},
      {9, "sample output deterministic under seed", 0.0, sample_determinism},
  };
  const std::set<int> only = parse_only(argc, argv);

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_seconds > 0 && secs >= c.time_limit_seconds) {
      o.pass = false;
      o.detail += " (exceeded " + std::to_string(c.time_limit_seconds) + " s)";
    }
    std::printf("[%s] criterion %d: %s -- %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

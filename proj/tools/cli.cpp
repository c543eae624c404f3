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

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qbluestein/qba.hpp"
#include "qbluestein/random.hpp"
#include "qbluestein/state_vector.hpp"

namespace qbluestein::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> basis;
  std::string input_path;
  std::string out_path;
  std::string format = "csv";
  std::string chirp_path = "gates";
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::uint64_t shots = 1024;
  std::size_t n_min = 1;
  std::size_t n_max = 16;
  std::size_t trials = 5;
  std::vector<std::size_t> ns;
  std::vector<std::size_t> sizes{8, 64, 512, 4096};
  std::size_t repeats = 3;
  bool fit = false;
  bool emit_circuit = false;
  unsigned m_min = 2;
  unsigned m_max = 16;
};

/// Input/usage problems detected after parsing; mapped to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest round-trip representation; independent of the global locale.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json complex_array(std::span<const Complex> v) {
  json arr = json::array();
  for (const Complex& c : v) arr.push_back({c.real(), c.imag()});
  return arr;
}

Complex parse_entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw std::invalid_argument("entry must be a number or a [re, im] pair: " + e.dump());
}

ComplexVec load_input(const RunConfig& cfg) {
  if (!cfg.input_path.empty() && cfg.basis) {
    throw UsageError("--input and --basis are mutually exclusive");
  }
  ComplexVec x;
  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw UsageError("cannot read input file '" + cfg.input_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    x = parse_input_vector(ss.str());
    if (cfg.n && *cfg.n != x.size()) {
      throw UsageError("--n " + std::to_string(*cfg.n) + " does not match input length " +
                       std::to_string(x.size()));
    }
  } else if (cfg.basis) {
    if (!cfg.n) throw UsageError("--basis requires --n");
    if (*cfg.basis >= *cfg.n) throw UsageError("--basis must be < --n");
    x.assign(*cfg.n, Complex{});
    x[*cfg.basis] = 1.0;
  } else {
    throw UsageError("either --input or --basis is required");
  }
  return x;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  const ComplexVec x = load_input(cfg);
  const BluesteinPlan plan = build_plan(x.size());
  QbaOptions options;
  options.chirp_path = cfg.chirp_path == "diagonal" ? ChirpPath::kDiagonal : ChirpPath::kGates;
  const QbaResult r = run_qba(x, plan, options);
  const ComplexVec reference = dft_direct(x);
  const double err = max_abs_error(r.y, reference);

  json doc;
  doc["n"] = plan.n;
  doc["m"] = plan.m;
  doc["M"] = plan.big_m;
  doc["alpha"] = plan.alpha;
  doc["success_probability"] = r.success_probability;
  doc["y"] = complex_array(r.y);
  doc["reference"] = complex_array(reference);
  doc["max_abs_error"] = err;
  out << doc.dump(2) << '\n';
  return err <= cfg.tolerance ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_min > cfg.n_max) throw UsageError("--n-min must be <= --n-max");
  const VerifyReport rep = verify_range(cfg.n_min, cfg.n_max, cfg.trials, cfg.seed, threads_from_env());
  bool ok = true;
  for (const VerifyRow& row : rep.rows) ok = ok && row.max_relative_error <= cfg.tolerance;

  if (cfg.format == "json") {
    json rows = json::array();
    for (const VerifyRow& row : rep.rows) {
      rows.push_back({{"n", row.n},
                      {"m", row.m},
                      {"alpha", row.alpha},
                      {"max_relative_error", row.max_relative_error},
                      {"mean_relative_error", row.mean_relative_error},
                      {"max_mass_deviation", row.max_mass_deviation},
                      {"min_success_probability", row.min_success_probability}});
    }
    json doc{{"trials", cfg.trials}, {"seed", cfg.seed}, {"tolerance", cfg.tolerance},
             {"passed", ok}, {"rows", std::move(rows)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "n,m,alpha,max_relative_error,mean_relative_error,max_mass_deviation,"
           "min_success_probability\n";
    for (const VerifyRow& row : rep.rows) {
      out << row.n << ',' << row.m << ',' << num(row.alpha) << ',' << num(row.max_relative_error)
          << ',' << num(row.mean_relative_error) << ',' << num(row.max_mass_deviation) << ','
          << num(row.min_success_probability) << '\n';
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

json stats_json(const QbaGateStats& s) {
  return {{"n", s.n},
          {"m", s.m},
          {"M", s.big_m},
          {"diagonal_gates", s.diagonal_gates},
          {"qft_gates", s.qft_gates},
          {"swap_gates", s.swap_gates},
          {"total", s.total},
          {"two_qubit", s.two_qubit},
          {"macro_ops", s.macro_ops}};
}

json fit_json(const LineFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}};
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.ns.empty() && !cfg.fit) throw UsageError("stats needs --n or --fit");
  std::vector<QbaGateStats> rows;
  for (std::size_t n : cfg.ns) rows.push_back(qba_gate_stats(build_plan(n)));

  if (cfg.emit_circuit) {
    if (cfg.ns.size() != 1) throw UsageError("--circuit needs exactly one --n");
    out << circuit_to_json(qba_circuit(build_plan(cfg.ns.front()))).dump(2) << '\n';
    return kExitOk;
  }

  if (cfg.format == "csv") {
    if (cfg.fit) err << "note: --fit is only reported in json format\n";
    out << "n,m,M,diagonal_gates,qft_gates,swap_gates,total,two_qubit,macro_ops\n";
    for (const QbaGateStats& s : rows) {
      out << s.n << ',' << s.m << ',' << s.big_m << ',' << s.diagonal_gates << ',' << s.qft_gates
          << ',' << s.swap_gates << ',' << s.total << ',' << s.two_qubit << ',' << s.macro_ops
          << '\n';
    }
    return kExitOk;
  }

  json doc;
  doc["rows"] = json::array();
  for (const QbaGateStats& s : rows) doc["rows"].push_back(stats_json(s));
  if (cfg.fit) {
    const GateScalingFit f = fit_gate_scaling(cfg.m_min, cfg.m_max);
    json series = json::array();
    for (const QbaGateStats& s : f.rows) series.push_back(stats_json(s));
    doc["fit"] = {{"m_min", f.m_min},
                  {"m_max", f.m_max},
                  {"total_vs_m_squared", fit_json(f.vs_m_squared)},
                  {"log_log", fit_json(f.log_log)},
                  {"exponent", f.exponent()},
                  {"series", std::move(series)}};
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

template <class Fn>
double best_seconds(std::size_t repeats, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  out << "N,method,seconds\n";
  for (std::size_t n : cfg.sizes) {
    if (n == 0) throw UsageError("--sizes entries must be >= 1");
    Engine e = make_engine(cfg.seed, n);
    const ComplexVec x = random_unit_vector(n, e);
    volatile double sink = 0;
    const double direct = best_seconds(cfg.repeats, [&] { sink = sink + dft_direct(x)[0].real(); });
    const double blue =
        best_seconds(cfg.repeats, [&] { sink = sink + bluestein_classical(x)[0].real(); });
    out << n << ",dft_direct," << num(direct) << '\n';
    out << n << ",bluestein_classical," << num(blue) << '\n';
  }
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const ComplexVec x = load_input(cfg);
  const BluesteinPlan plan = build_plan(x.size());
  const QbaResult r = run_qba(x, plan);

  // Measurement of the post-selected register, conditioned on the logical subspace.
  ComplexVec logical(plan.big_m, Complex{});
  const ComplexVec normalized = r.normalized_logical();
  std::copy(normalized.begin(), normalized.end(), logical.begin());
  const StateVector state = StateVector::from_amplitudes(std::move(logical));

  out << "index,count,probability\n";
  for (const auto& [index, count] : state.sample(cfg.shots, cfg.seed)) {
    out << index << ',' << count << ',' << num(r.logical_probabilities[index]) << '\n';
  }
  return kExitOk;
}

}  // namespace

ComplexVec parse_input_vector(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
  }
  const json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("x")) throw std::invalid_argument("input object has no \"x\" field");
    arr = &doc["x"];
  }
  if (!arr->is_array() || arr->empty()) {
    throw std::invalid_argument("input vector must be a non-empty array");
  }
  ComplexVec x;
  x.reserve(arr->size());
  for (const json& e : *arr) x.push_back(parse_entry(e));
  return x;
}

unsigned threads_from_env() {
  const char* env = std::getenv("QBA_THREADS");
  if (env == nullptr) return 1;
  unsigned v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto res = std::from_chars(env, end, v);
  if (res.ec != std::errc{} || res.ptr != end || v == 0) return 1;
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact arbitrary-length quantum Fourier transform by chirp convolution"};
  app.name(args.empty() ? "qba" : args.front());
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Transform length")->check(CLI::PositiveNumber);
    sub->add_option("--basis", cfg.basis, "Use basis vector e_j as input");
    sub->add_option("--input", cfg.input_path, "JSON input vector file");
  };

  CLI::App* transform = app.add_subcommand("transform", "Run the transform on one input");
  add_input(transform);
  transform->add_option("--tolerance", cfg.tolerance, "Max abs error vs the reference DFT")
      ->check(CLI::PositiveNumber);
  transform->add_option("--chirp-path", cfg.chirp_path, "Chirp implementation")
      ->check(CLI::IsMember({"gates", "diagonal"}));
  add_out(transform);

  CLI::App* verify = app.add_subcommand("verify", "Compare against the direct DFT over a range of n");
  verify->add_option("--n-min", cfg.n_min)->check(CLI::PositiveNumber);
  verify->add_option("--n-max", cfg.n_max)->check(CLI::PositiveNumber);
  verify->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--tolerance", cfg.tolerance, "Max relative L2 error")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  add_out(verify);

  CLI::App* stats = app.add_subcommand("stats", "Gate counts per transform length");
  stats->add_option("--n", cfg.ns, "Transform lengths (repeatable or comma separated)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  stats->add_flag("--fit", cfg.fit, "Fit the gate total against m over [--m-min, --m-max]");
  stats->add_option("--m-min", cfg.m_min)->check(CLI::Range(1U, 20U));
  stats->add_option("--m-max", cfg.m_max)->check(CLI::Range(2U, 20U));
  stats->add_flag("--circuit", cfg.emit_circuit, "Emit the full circuit as JSON for one --n");
  cfg.format = "json";
  stats->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  add_out(stats);

  CLI::App* bench = app.add_subcommand("bench", "Time the classical direct DFT against Bluestein");
  bench->add_option("--sizes", cfg.sizes)->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--repeats", cfg.repeats)->check(CLI::PositiveNumber);
  bench->add_option("--seed", cfg.seed);
  add_out(bench);

  CLI::App* sample = app.add_subcommand("sample", "Measurement histogram of the logical register");
  add_input(sample);
  sample->add_option("--shots", cfg.shots)->check(CLI::PositiveNumber);
  sample->add_option("--seed", cfg.seed);
  add_out(sample);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  // Subcommands other than stats default to csv.
  if (!stats->parsed() && verify->count("--format") == 0) cfg.format = "csv";

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (transform->parsed()) code = cmd_transform(cfg, buffer);
    else if (verify->parsed()) code = cmd_verify(cfg, buffer);
    else if (stats->parsed()) code = cmd_stats(cfg, buffer, err);
    else if (bench->parsed()) code = cmd_bench(cfg, buffer);
    else code = cmd_sample(cfg, buffer);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f || !(f << buffer.str())) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace qbluestein::cli

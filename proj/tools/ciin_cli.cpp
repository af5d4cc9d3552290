// Copyright 2026 The ciin-search Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

#include "ciin/cg_search.hpp"
#include "ciin/circuit.hpp"
#include "ciin/dynamics.hpp"
#include "ciin/error.hpp"
#include "ciin/graph.hpp"
#include "ciin/phase_walk.hpp"
#include "ciin/report_io.hpp"
#include "ciin/schedule.hpp"

namespace {

using namespace ciin;

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kVerifyFailed = 2;

struct Options {
  std::optional<std::size_t> n;
  std::optional<std::size_t> N;
  std::size_t p = 0;
  std::string variant = "approx";
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::string finish = "coherent";
  std::string n_list;
  std::size_t p_extra = 3;
  std::size_t full_max = 128;
  double t_max = 0.0;
  double dt = 0.0;
  double gamma = 0.0;
  std::string space = "reduced";
  bool deterministic = false;
  std::string schedule_path;
  std::string circuit_out;
  std::optional<std::size_t> marked;
};

std::string num(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

GraphSize size_of(const Options& o, std::size_t default_vertices) {
  if (o.n) return GraphSize::from_side(*o.n);
  return GraphSize::from_vertices(o.N.value_or(default_vertices));
}

std::vector<std::size_t> expand_list(const std::string& text) {
  std::vector<std::string> tokens;
  std::stringstream in(text);
  for (std::string t; std::getline(in, t, ',');) tokens.push_back(t);
  auto value = [](const std::string& t) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(t, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (t.empty() || pos != t.size()) throw InvalidSize("bad --n-list entry '" + t + "'");
    return static_cast<std::size_t>(v);
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] != "...") {
      out.push_back(value(tokens[i]));
      continue;
    }
    if (out.size() < 2 || i + 1 >= tokens.size()) throw InvalidSize("'...' in --n-list needs two entries before and one after");
    const std::size_t a = out[out.size() - 2];
    const std::size_t b = out.back();
    const std::size_t last = value(tokens[i + 1]);
    if (b <= a) throw InvalidSize("'...' in --n-list needs an increasing start");
    for (std::size_t v = b + (b - a); v < last; v += b - a) out.push_back(v);
  }
  if (out.empty()) throw InvalidSize("--n-list is empty");
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidSize("cannot open output file '" + path + "'");
  f << text;
}

std::string render(const RunReport& r, const Options& o) {
  return o.format == "json" ? report_to_json(r).dump(2) + "\n" : report_to_csv(r);
}

void summary(const std::string& line) { std::cerr << line << "\n"; }

Schedule make_schedule(const Options& o, GraphSize size) {
  const FinishingRule rule = finishing_rule_from_string(o.finish);
  if (o.variant == "approx") return approx_schedule(size, rule);
  if (o.variant == "deterministic") {
    return deterministic_schedule(size, o.p ? o.p : deterministic_p_min(size), rule);
  }
  if (o.variant == "odd") return odd_schedule(size, true, o.p ? o.p : odd_p_min(size));
  throw InvalidSize("unknown variant '" + o.variant + "'");
}

int fig3(const Options& o) {
  const auto size = size_of(o, 2048);
  const auto pred = cg_prediction(size);
  const double gamma = o.gamma > 0 ? o.gamma : pred.gamma_star;
  const double t_max = o.t_max > 0 ? o.t_max : 1.2 * pred.peak_time;
  const auto report = cg_evolve({size, gamma, t_max, o.dt > 0 ? o.dt : 0.01});
  emit(render(report, o), o.out);
  const auto peak = cg_peak(report);
  summary("fig3-cg n=" + std::to_string(size.n()) + " gamma=" + num("%.9g", gamma) +
          " peak_probability=" + num("%.6f", peak.probability) + " peak_time=" + num("%.4f", peak.time) +
          " predicted_time=" + num("%.4f", pred.peak_time));
  return kOk;
}

int fig4(const Options& o) {
  const auto size = size_of(o, 18);
  const double t_max = o.t_max > 0 ? o.t_max : 2 * kPi;
  const double dt = o.dt > 0 ? o.dt : 0.01;
  const bool full = o.space == "full";
  if (!full && o.space != "reduced") throw InvalidSize("--space must be reduced or full");
  const std::size_t marked = o.marked.value_or(0);
  const auto basis = build_walk_basis(size, marked);
  const auto graph = build_full_adjacency(size);
  RunReport r;
  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  double best = -1.0, best_t = 0.0;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    std::array<double, 4> probs{};
    if (full) {
      probs = basis.group_probabilities(walk_full(FullState::vertex(size, marked), t, graph).amplitudes);
    } else {
      const Vec4 a = walk_reduced(ReducedState::marked(), t, size).amplitudes;
      for (int i = 0; i < 4; ++i) probs[static_cast<std::size_t>(i)] = std::norm(a(i));
    }
    r.trajectory.push_back({k, probs, 0, t});
    if (probs[1] > best + 1e-12) {
      best = probs[1];
      best_t = t;
    }
  }
  r.final_success_probability = r.trajectory.back().probabilities[0];
  r.total_walk_time = r.trajectory.back().walk_time_so_far;
  emit(render(r, o), o.out);
  summary("fig4-walk n=" + std::to_string(size.n()) + " space=" + o.space + " max_opposite_probability=" +
          num("%.6f", best) + " at_t=" + num("%.4f", best_t));
  return kOk;
}

int fig5(const Options& o) {
  const auto size = size_of(o, 2048);
  const Schedule s = make_schedule(o, size);
  const auto run = apply_schedule(ReducedState::uniform(size), s, size, {0, SampleBasis::Dual});
  emit(render(run.report, o), o.out);
  std::string line = "fig5-dual n=" + std::to_string(size.n()) + " variant=" + s.variant + " p=" + std::to_string(s.p) +
                     " queries=" + std::to_string(run.report.oracle_queries) +
                     " final_success_probability=" + num("%.10f", run.report.final_success_probability);
  if (s.finishing == FinishingRule::MeasureAndCheck) {
    const auto basis = build_walk_basis(size, 0);
    const auto m = measure_and_check(lift(run.state, basis), basis, o.seed);
    line += " measured=" + std::to_string(m.measured) + " reported=" + std::to_string(m.reported) +
            " confirmed=" + (m.oracle_confirmed ? "yes" : "no");
  }
  summary(line);
  return kOk;
}

std::string with_suffix(const std::string& path, const std::string& tag, const std::string& format) {
  if (path.empty()) return "";
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  const std::string stem = has_ext ? path.substr(0, dot) : path;
  const std::string ext = has_ext ? path.substr(dot) : "." + format;
  return stem + "." + tag + ext;
}

int fig6(const Options& o) {
  const auto size = size_of(o, 24);
  const auto det = deterministic_schedule(size, o.p ? o.p : deterministic_p_min(size));
  const auto approx = approx_schedule(size);
  const auto a = apply_schedule(ReducedState::uniform(size), approx, size, {0, SampleBasis::Dual});
  const auto d = apply_schedule(ReducedState::uniform(size), det, size, {0, SampleBasis::Dual});
  if (o.out.empty()) {
    std::cout << "# approx\n" << render(a.report, o) << "# deterministic\n" << render(d.report, o);
  } else {
    emit(render(a.report, o), with_suffix(o.out, "approx", o.format));
    emit(render(d.report, o), with_suffix(o.out, "deterministic", o.format));
  }
  const double target = 1.0 / static_cast<double>(size.n());
  long hit = -1;
  for (std::size_t i = 1; i < d.report.trajectory.size(); ++i) {
    const auto& t = d.report.trajectory[i];
    if (t.step % det.steps_per_iterate == 0 && std::abs(t.probabilities[0] - target) <= 1e-9) {
      hit = static_cast<long>(t.step / det.steps_per_iterate);
      break;
    }
  }
  summary("fig6-compare n=" + std::to_string(size.n()) + " p=" + std::to_string(det.p) +
          " target_iteration=" + (hit < 0 ? std::string("none") : std::to_string(hit)) +
          " approx_final=" + num("%.10f", a.report.final_success_probability) +
          " deterministic_final=" + num("%.10f", d.report.final_success_probability));
  return hit == static_cast<long>(det.p) ? kOk : kVerifyFailed;
}

int fig7(const Options& o) {
  const auto size = size_of(o, 2050);
  const auto s = o.deterministic ? odd_schedule(size, true, o.p ? o.p : odd_p_min(size)) : odd_schedule(size, false, o.p);
  const auto run = apply_schedule(ReducedState::uniform(size), s, size, {o.deterministic ? 0u : 2u, SampleBasis::Walk});
  emit(render(run.report, o), o.out);
  double peak = 0.0;
  for (const auto& t : run.report.trajectory) peak = std::max(peak, t.probabilities[0]);
  const double n = static_cast<double>(size.n());
  summary("fig7-oddpath n=" + std::to_string(size.n()) + " variant=" + s.variant + " p=" + std::to_string(s.p) +
          " queries=" + std::to_string(run.report.oracle_queries) + " peak_b1_probability=" + num("%.10f", peak) +
          " final_success_probability=" + num("%.10f", run.report.final_success_probability) +
          " reference=" + num("%.10f", (n - 1) / n));
  return kOk;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = nlohmann::json::parse(r[c]);
        j.push_back(obj);
      }
      return j.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) out += (c ? "," : "") + columns[c];
    out += '\n';
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) out += (c ? "," : "") + r[c];
      out += '\n';
    }
    return out;
  }
};

int sweep_determinism(const Options& o) {
  const bool odd = o.variant == "odd";
  const bool approx = o.variant == "approx";
  const auto ns = expand_list(o.n_list.empty() ? (odd ? "9,13,...,63" : "8,12,...,64") : o.n_list);
  Table t{{"n", "N", "p", "final_reduced", "final_full"}, {}};
  double worst_red = 1.0, worst_full = 1.0;
  for (std::size_t n : ns) {
    const auto size = GraphSize::from_side(n);
    std::vector<Schedule> runs;
    if (approx) {
      runs.push_back(approx_schedule(size));
    } else {
      const std::size_t pm = odd ? odd_p_min(size) : deterministic_p_min(size);
      for (std::size_t p = pm; p <= pm + o.p_extra; ++p) {
        runs.push_back(odd ? odd_schedule(size, true, p) : deterministic_schedule(size, p));
      }
    }
    const auto basis = build_walk_basis(size, n - 1);
    for (const auto& s : runs) {
      const double red = apply_schedule(ReducedState::uniform(size), s, size).report.final_success_probability;
      worst_red = std::min(worst_red, red);
      std::string full = "null";
      if (size.vertex_count() <= o.full_max) {
        const double f = apply_schedule(FullState::uniform(size), s, basis).report.final_success_probability;
        worst_full = std::min(worst_full, f);
        full = format_double(f);
      }
      t.rows.push_back({std::to_string(n), std::to_string(2 * n), std::to_string(s.p), format_double(red), full});
    }
  }
  emit(t.render(o.format), o.out);
  const bool ok = worst_red >= 1 - 1e-9 && worst_full >= 1 - 1e-8;
  summary("sweep-determinism variant=" + std::string(odd ? "odd" : approx ? "approx" : "deterministic") + " points=" +
          std::to_string(t.rows.size()) + " min_reduced=" + num("%.15f", worst_red) +
          " min_full=" + num("%.15f", worst_full) + " all_exact=" + (ok ? "yes" : "no"));
  return ok ? kOk : kVerifyFailed;
}

int sweep_queries(const Options& o) {
  const auto ns = expand_list(o.n_list.empty() ? "16,64,256,1024,4096" : o.n_list);
  Table t{{"n", "N", "p_min", "deterministic_queries", "deterministic_over_sqrtN", "approx_p", "approx_queries",
           "approx_over_sqrtN"},
          {}};
  double last_ratio = 0.0;
  for (std::size_t n : ns) {
    const auto size = GraphSize::from_side(n);
    const double root = std::sqrt(static_cast<double>(size.vertex_count()));
    const auto a = approx_schedule(size);
    const std::size_t aq = query_accounting(a).oracle_queries;
    std::string pm = "null", dq = "null", dr = "null";
    if (size.is_mult4() && n >= 8) {
      const auto d = deterministic_schedule(size, deterministic_p_min(size));
      const std::size_t q = query_accounting(d).oracle_queries;
      last_ratio = static_cast<double>(q) / root;
      pm = std::to_string(d.p);
      dq = std::to_string(q);
      dr = format_double(last_ratio);
    }
    t.rows.push_back({std::to_string(n), std::to_string(2 * n), pm, dq, dr, std::to_string(a.p), std::to_string(aq),
                      format_double(static_cast<double>(aq) / root)});
  }
  emit(t.render(o.format), o.out);
  summary("sweep-queries points=" + std::to_string(t.rows.size()) + " last_deterministic_over_sqrtN=" +
          num("%.6f", last_ratio) + " reference=" + num("%.6f", kPi / (2 * std::sqrt(2.0))));
  return kOk;
}

int verify_circuit(const Options& o) {
  Schedule s;
  if (!o.schedule_path.empty()) {
    std::ifstream f(o.schedule_path, std::ios::binary);
    if (!f) throw InvalidSize("cannot read schedule file '" + o.schedule_path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    s = parse_schedule(buf.str());
  } else {
    s = make_schedule(o, size_of(o, 32));
  }
  const auto size = GraphSize::from_side(s.n);
  if (!size.is_pow2()) {
    throw UnsupportedSize("circuit compilation needs n = 2^m, got n = " + std::to_string(s.n));
  }
  const unsigned m = size.log2_side();
  const std::size_t marked = o.marked.value_or(size.n() + 1);
  const auto circuit = compile_schedule(s, m, marked);
  if (!o.circuit_out.empty()) emit(render_circuit(circuit), o.circuit_out);
  const auto basis = build_walk_basis(size, marked);
  const auto circ = simulate(circuit, FullState::uniform(size));
  const auto run = apply_schedule(FullState::uniform(size), s, basis);
  const double fid = fidelity(circ.amplitudes, run.state.amplitudes);
  const double prob = success_probability(circ, basis);
  const bool queries_ok = oracle_call_count(circuit) == query_accounting(s).oracle_queries;
  bool ok = fid >= 1 - 1e-9 && queries_ok;
  if (s.finishing == FinishingRule::Coherent && s.variant != "approx") ok = ok && prob >= 1 - 1e-8;
  emit(render(run.report, o), o.out);
  summary("verify-circuit n=" + std::to_string(s.n) + " wires=" + std::to_string(circuit.num_wires) +
          " gates=" + std::to_string(circuit.gates.size()) + " oracle_calls=" + std::to_string(oracle_call_count(circuit)) +
          " fidelity=" + num("%.12f", fid) + " final_probability=" + num("%.12f", prob) +
          " verified=" + (ok ? "yes" : "no"));
  return ok ? kOk : kVerifyFailed;
}

void add_size(CLI::App* cmd, Options& o) {
  auto* n = cmd->add_option("--n", o.n, "clique size n (N = 2n vertices)");
  auto* big = cmd->add_option("--N", o.N, "vertex count N (even)");
  n->excludes(big);
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search on the complete-interconnected-identical-network graph: trajectories, sweeps and circuit checks"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->callback([&action, fn] { action = fn; });
    add_size(cmd, o);
    add_output(cmd, o);
    return cmd;
  };
  const auto variants = CLI::IsMember({"approx", "deterministic", "odd"});

  auto* f3 = sub("fig3-cg", "continuous-time (Childs-Goldstone) search trajectory; default N=2048", fig3);
  f3->add_option("--gamma", o.gamma, "hopping rate (default 1/n)");
  f3->add_option("--t-max", o.t_max, "end time (default 1.2 x predicted peak time)");
  f3->add_option("--dt", o.dt, "sample spacing (default 0.01)");

  auto* f4 = sub("fig4-walk", "walk from the marked vertex, basis-group probabilities vs t; default N=18", fig4);
  f4->add_option("--t-max", o.t_max, "end time (default 2 pi)");
  f4->add_option("--dt", o.dt, "sample spacing (default 0.01)");
  f4->add_option("--space", o.space, "reduced or full")->check(CLI::IsMember({"reduced", "full"}));
  f4->add_option("--marked", o.marked, "marked vertex for --space full (default 0)");

  auto* f5 = sub("fig5-dual", "alternating phase-walk run sampled per iterate in the dual basis; default N=2048", fig5);
  f5->add_option("--variant", o.variant, "approx, deterministic or odd")->check(variants);
  f5->add_option("--p", o.p, "iterate count for deterministic/odd (default p_min)");
  f5->add_option("--finish", o.finish, "none, measure-and-check or coherent")
      ->check(CLI::IsMember({"none", "measure-and-check", "coherent"}));
  f5->add_option("--seed", o.seed, "seed for measure-and-check sampling");

  auto* f6 = sub("fig6-compare", "approximate vs deterministic dual-basis trajectories; default N=24", fig6);
  f6->add_option("--p", o.p, "deterministic iterate count (default p_min)");

  auto* f7 = sub("fig7-oddpath", "odd-n alternate path; default N=2050", fig7);
  f7->add_option("--p", o.p, "iterate count (default: nearest-integer Grover count, or p_min with --deterministic)");
  f7->add_flag("--deterministic", o.deterministic, "use the exact odd-path construction");

  auto* sd = sub("sweep-determinism", "final marked-vertex probability over n and p in [p_min, p_min+extra]", sweep_determinism);
  sd->add_option("--n-list", o.n_list, "comma list, '...' extends an arithmetic run (default 8,12,...,64)");
  sd->add_option("--variant", o.variant, "deterministic (default), odd, or approx as a non-exact baseline")->check(variants);
  sd->add_option("--p-extra", o.p_extra, "largest p offset above p_min (default 3)");
  sd->add_option("--full-max", o.full_max, "largest N also checked in the full space (default 128)");

  auto* sq = sub("sweep-queries", "oracle query counts against sqrt(N)", sweep_queries);
  sq->add_option("--n-list", o.n_list, "comma list (default 16,64,256,1024,4096)");

  auto* vc = sub("verify-circuit", "compile a schedule to gates and check it against the full-space walk", verify_circuit);
  vc->add_option("--variant", o.variant, "schedule variant (default deterministic)")->check(variants);
  vc->add_option("--p", o.p, "iterate count (default p_min)");
  vc->add_option("--finish", o.finish, "finishing rule")->check(CLI::IsMember({"none", "measure-and-check", "coherent"}));
  vc->add_option("--marked", o.marked, "marked vertex (default n+1)");
  vc->add_option("--schedule", o.schedule_path, "read the schedule from a text file instead");
  vc->add_option("--circuit-out", o.circuit_out, "write the compiled circuit text here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }
  for (auto* cmd : {sd, vc}) {
    if (cmd->parsed() && cmd->count("--variant") == 0) o.variant = "deterministic";
  }
  try {
    return action(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

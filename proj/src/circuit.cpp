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

#include "ciin/circuit.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "ciin/error.hpp"
#include "ciin/kernels.hpp"

namespace ciin {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

unsigned bit_of(unsigned wire, unsigned num_wires) { return num_wires - 1 - wire; }

void check_wire(unsigned wire, unsigned num_wires) {
  if (wire >= num_wires) {
    throw IndexError("gate wire " + std::to_string(wire) + " >= num_wires " + std::to_string(num_wires));
  }
}

void check_condition(const std::string& cond, unsigned num_wires) {
  if (cond.size() != num_wires) {
    throw IndexError("CPHASE condition '" + cond + "' does not have " + std::to_string(num_wires) + " characters");
  }
  for (char c : cond) {
    if (c != '0' && c != '1' && c != '*') throw ParseError("CPHASE condition '" + cond + "' has a bad character");
  }
}

double parse_real(const std::string& token, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size()) {
    throw ParseError("circuit line " + std::to_string(line) + ": bad number '" + token + "'");
  }
  return v;
}

unsigned parse_wire(const std::string& token, std::size_t line) {
  char* end = nullptr;
  const long v = std::strtol(token.c_str(), &end, 10);
  if (token.empty() || end != token.c_str() + token.size() || v < 0) {
    throw ParseError("circuit line " + std::to_string(line) + ": bad wire '" + token + "'");
  }
  return static_cast<unsigned>(v);
}

}  // namespace

void CircuitProgram::validate() const {
  for (const auto& g : gates) {
    std::visit(overloaded{[&](const MultiControlledPhase& c) { check_condition(c.condition, num_wires); },
                          [&](const auto& single) { check_wire(single.wire, num_wires); }},
               g);
  }
}

void CircuitProgram::append(const CircuitProgram& other) {
  if (other.num_wires != num_wires) throw DimensionMismatch("appending circuits with different wire counts");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

CircuitProgram walk_circuit(unsigned m, double t) {
  if (m < 1) throw InvalidSize("walk circuit needs m >= 1");
  CircuitProgram c;
  c.num_wires = m + 1;
  const double n = std::ldexp(1.0, static_cast<int>(m));
  // interconnect factor e^{it} exp(-itX) = H R(0, 2t) H; the e^{it}
  // cancels the K_n factor's e^{-i t (-1)} global phase
  c.gates.emplace_back(Hadamard{0});
  c.gates.emplace_back(TwoPhaseRotation{0, 0.0, 2.0 * t});
  c.gates.emplace_back(Hadamard{0});
  // complete-graph factor exp(-itJ): Grover diffusion with phase e^{-itn}
  for (unsigned w = 1; w <= m; ++w) c.gates.emplace_back(Hadamard{w});
  c.gates.emplace_back(MultiControlledPhase{"*" + std::string(m, '0'), -t * n});
  for (unsigned w = 1; w <= m; ++w) c.gates.emplace_back(Hadamard{w});
  return c;
}

CircuitProgram oracle_circuit(unsigned m, std::size_t marked, double theta) {
  const unsigned wires = m + 1;
  if (m < 1) throw InvalidSize("oracle circuit needs m >= 1");
  if (marked >= (std::size_t{1} << wires)) {
    throw IndexError("marked vertex " + std::to_string(marked) + " out of range for " + std::to_string(wires) + " wires");
  }
  CircuitProgram c;
  c.num_wires = wires;
  std::vector<unsigned> zeros;
  for (unsigned w = 0; w < wires; ++w) {
    if (((marked >> bit_of(w, wires)) & 1u) == 0) zeros.push_back(w);
  }
  for (unsigned w : zeros) c.gates.emplace_back(NotGate{w});
  c.gates.emplace_back(MultiControlledPhase{std::string(wires, '1'), -theta});
  for (unsigned w : zeros) c.gates.emplace_back(NotGate{w});
  return c;
}

CircuitProgram compile_schedule(const Schedule& schedule, unsigned m, std::size_t marked) {
  if (m < 1 || schedule.n != (std::size_t{1} << m)) {
    throw UnsupportedSize("circuit compilation needs n = 2^m; schedule has n = " + std::to_string(schedule.n) +
                          " (round the database size up to a power of two)");
  }
  CircuitProgram c;
  c.num_wires = m + 1;
  c.note = "schedule variant=" + schedule.variant + " n=" + std::to_string(schedule.n) +
           " p=" + std::to_string(schedule.p) + " marked=" + std::to_string(marked);
  for (const auto& step : schedule.steps) {
    c.append(step.kind == StepKind::Walk ? walk_circuit(m, step.parameter) : oracle_circuit(m, marked, step.parameter));
  }
  return c;
}

FullState simulate(const CircuitProgram& program, const FullState& input, Exec exec) {
  program.validate();
  const std::size_t dim = std::size_t{1} << program.num_wires;
  if (input.amplitudes.size() != dim) {
    throw DimensionMismatch("simulate: input has " + std::to_string(input.amplitudes.size()) +
                            " amplitudes, circuit needs " + std::to_string(dim));
  }
  FullState state = input;
  std::span<Complex> amps(state.amplitudes);
  const unsigned nw = program.num_wires;
  for (const auto& g : program.gates) {
    std::visit(overloaded{
                   [&](const Hadamard& h) { kernels::hadamard(exec, amps, bit_of(h.wire, nw)); },
                   [&](const TwoPhaseRotation& r) {
                     kernels::diagonal(exec, amps, bit_of(r.wire, nw), std::polar(1.0, r.theta), std::polar(1.0, r.phi));
                   },
                   [&](const NotGate& x) { kernels::pauli_x(exec, amps, bit_of(x.wire, nw)); },
                   [&](const MultiControlledPhase& c) {
                     std::uint64_t mask = 0;
                     std::uint64_t value = 0;
                     for (unsigned w = 0; w < nw; ++w) {
                       if (c.condition[w] == '*') continue;
                       mask |= std::uint64_t{1} << bit_of(w, nw);
                       if (c.condition[w] == '1') value |= std::uint64_t{1} << bit_of(w, nw);
                     }
                     kernels::masked_phase(exec, amps, mask, value, std::polar(1.0, c.phase));
                   },
               },
               g);
  }
  return state;
}

Eigen::MatrixXcd dense_unitary(const CircuitProgram& program) {
  const std::size_t dim = std::size_t{1} << program.num_wires;
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    FullState e{Amplitudes(dim, 0.0)};
    e.amplitudes[col] = 1.0;
    const FullState out = simulate(program, e, Exec::Serial);
    for (std::size_t row = 0; row < dim; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = out.amplitudes[row];
    }
  }
  return u;
}

std::size_t oracle_call_count(const CircuitProgram& program) {
  std::size_t count = 0;
  for (const auto& g : program.gates) {
    if (const auto* c = std::get_if<MultiControlledPhase>(&g)) {
      if (c->condition.find('*') == std::string::npos) ++count;
    }
  }
  return count;
}

std::string gate_kinds(const CircuitProgram& program) {
  std::string kinds;
  for (const auto& g : program.gates) {
    kinds += std::visit(overloaded{[](const Hadamard&) { return 'H'; }, [](const TwoPhaseRotation&) { return 'R'; },
                                   [](const MultiControlledPhase&) { return 'C'; }, [](const NotGate&) { return 'X'; }},
                        g);
  }
  return kinds;
}

std::string render_circuit(const CircuitProgram& program) {
  std::string out = "WIRES " + std::to_string(program.num_wires) + "\n";
  if (!program.note.empty()) out += "# " + program.note + "\n";
  for (const auto& g : program.gates) {
    out += std::visit(
        overloaded{
            [](const Hadamard& h) { return "H " + std::to_string(h.wire); },
            [](const TwoPhaseRotation& r) {
              return "R " + std::to_string(r.wire) + " " + format_double(r.theta) + " " + format_double(r.phi);
            },
            [](const NotGate& x) { return "X " + std::to_string(x.wire); },
            [](const MultiControlledPhase& c) { return "CPHASE " + format_double(c.phase) + " " + c.condition; },
        },
        g);
    out += '\n';
  }
  return out;
}

CircuitProgram parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  CircuitProgram c;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (c.note.empty() && line.size() > 2) c.note = line.substr(2);
      continue;
    }
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    std::vector<std::string> args;
    for (std::string a; fields >> a;) args.push_back(a);
    auto need = [&](std::size_t count) {
      if (args.size() != count) {
        throw ParseError("circuit line " + std::to_string(lineno) + ": " + head + " takes " + std::to_string(count) +
                         " arguments");
      }
    };
    if (head == "WIRES") {
      need(1);
      if (have_header) throw ParseError("circuit line " + std::to_string(lineno) + ": duplicate WIRES header");
      c.num_wires = parse_wire(args[0], lineno);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("circuit line " + std::to_string(lineno) + ": missing WIRES header");
    if (head == "H") {
      need(1);
      c.gates.emplace_back(Hadamard{parse_wire(args[0], lineno)});
    } else if (head == "X") {
      need(1);
      c.gates.emplace_back(NotGate{parse_wire(args[0], lineno)});
    } else if (head == "R") {
      need(3);
      c.gates.emplace_back(TwoPhaseRotation{parse_wire(args[0], lineno), parse_real(args[1], lineno), parse_real(args[2], lineno)});
    } else if (head == "CPHASE") {
      need(2);
      c.gates.emplace_back(MultiControlledPhase{args[1], parse_real(args[0], lineno)});
    } else {
      throw ParseError("circuit line " + std::to_string(lineno) + ": unknown gate '" + head + "'");
    }
  }
  if (!have_header) throw ParseError("circuit text has no WIRES header");
  c.validate();
  return c;
}

}  // namespace ciin

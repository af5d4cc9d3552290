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

#pragma once

// Gate-level realization of the CIIN walk for n = 2^m. Wire 0 is the side
// bit (the most significant bit of the vertex index); wires 1..m hold the
// position inside a K_{2^m} copy, most significant first.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ciin/dynamics.hpp"
#include "ciin/schedule.hpp"
#include "ciin/types.hpp"

namespace ciin {

struct Hadamard {
  unsigned wire;
  friend bool operator==(const Hadamard&, const Hadamard&) = default;
};

/// R(theta, phi) = diag(e^{i theta}, e^{i phi}).
struct TwoPhaseRotation {
  unsigned wire;
  double theta;
  double phi;
  friend bool operator==(const TwoPhaseRotation&, const TwoPhaseRotation&) = default;
};

/// Multiplies every basis state matching `condition` by e^{i phase}.
/// One character per wire, wire 0 first: '0' and '1' are controls on that
/// value, '*' leaves the wire uncontrolled.
struct MultiControlledPhase {
  std::string condition;
  double phase;
  friend bool operator==(const MultiControlledPhase&, const MultiControlledPhase&) = default;
};

struct NotGate {
  unsigned wire;
  friend bool operator==(const NotGate&, const NotGate&) = default;
};

using Gate = std::variant<Hadamard, TwoPhaseRotation, MultiControlledPhase, NotGate>;

struct CircuitProgram {
  unsigned num_wires = 0;
  std::vector<Gate> gates;
  /// Free-form note, rendered as a '#' line.
  std::string note;

  /// Throws IndexError / ParseError if any gate does not fit num_wires.
  void validate() const;
  void append(const CircuitProgram& other);

  friend bool operator==(const CircuitProgram&, const CircuitProgram&) = default;
};

/// exp(-i t A_full) on the 2^{m+1}-vertex CIIN, with a gate list that does
/// not depend on t. Throws InvalidSize for m < 1.
CircuitProgram walk_circuit(unsigned m, double t);

/// exp(-i theta |marked><marked|) as X-conjugated all-ones phase.
CircuitProgram oracle_circuit(unsigned m, std::size_t marked, double theta);

/// Concatenates walk/oracle circuits in step order. Throws UnsupportedSize
/// unless schedule.n == 2^m.
CircuitProgram compile_schedule(const Schedule& schedule, unsigned m, std::size_t marked);

FullState simulate(const CircuitProgram& program, const FullState& input, Exec exec = Exec::Parallel);

/// Columns are simulate() of each computational basis state.
Eigen::MatrixXcd dense_unitary(const CircuitProgram& program);

/// Phase gates controlled on every wire, i.e. oracle calls.
std::size_t oracle_call_count(const CircuitProgram& program);

/// One letter per gate (H, R, C, X): the gate-kind sequence.
std::string gate_kinds(const CircuitProgram& program);

/// Line format:
///   WIRES <m+1>
///   H <wire> | R <wire> <theta> <phi> | X <wire> | CPHASE <phase> <condition>
std::string render_circuit(const CircuitProgram& program);
CircuitProgram parse_circuit(std::string_view text);

}  // namespace ciin

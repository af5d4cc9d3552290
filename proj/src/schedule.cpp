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

#include "ciin/schedule.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "ciin/error.hpp"

namespace ciin {

std::string_view to_string(FinishingRule rule) {
  switch (rule) {
    case FinishingRule::None: return "none";
    case FinishingRule::MeasureAndCheck: return "measure-and-check";
    case FinishingRule::Coherent: return "coherent";
  }
  return "none";
}

FinishingRule finishing_rule_from_string(std::string_view s) {
  if (s == "none") return FinishingRule::None;
  if (s == "measure-and-check") return FinishingRule::MeasureAndCheck;
  if (s == "coherent") return FinishingRule::Coherent;
  throw ParseError("unknown finishing rule '" + std::string(s) + "'");
}

QueryCount query_accounting(const Schedule& schedule) {
  QueryCount q;
  for (const auto& step : schedule.steps) {
    if (step.kind == StepKind::Oracle) {
      ++q.oracle_queries;
    } else {
      q.total_walk_time += std::abs(step.parameter);
    }
  }
  if (schedule.finishing == FinishingRule::MeasureAndCheck) ++q.oracle_queries;
  return q;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_schedule(const Schedule& s) {
  std::string out = "SCHEDULE n=" + std::to_string(s.n) + " p=" + std::to_string(s.p) +
                    " variant=" + s.variant + " finish=" + std::string(to_string(s.finishing)) +
                    " iterate=" + std::to_string(s.steps_per_iterate) + "\n";
  for (const auto& step : s.steps) {
    out += (step.kind == StepKind::Walk ? "WALK " : "ORACLE ");
    out += format_double(step.parameter);
    out += '\n';
  }
  return out;
}

namespace {

double parse_number(const std::string& token, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + token + "'");
  }
  return v;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + token + "'");
  }
  return v;
}

}  // namespace

Schedule parse_schedule(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  Schedule s;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "SCHEDULE") {
      if (have_header) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
      have_header = true;
      std::string kv;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        if (key == "n") s.n = parse_count(value, lineno);
        else if (key == "p") s.p = parse_count(value, lineno);
        else if (key == "variant") s.variant = value;
        else if (key == "finish") s.finishing = finishing_rule_from_string(value);
        else if (key == "iterate") s.steps_per_iterate = parse_count(value, lineno);
        else throw ParseError("line " + std::to_string(lineno) + ": unknown header key '" + key + "'");
      }
      continue;
    }
    if (!have_header) throw ParseError("line " + std::to_string(lineno) + ": missing SCHEDULE header");
    std::string value, extra;
    if (!(fields >> value) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected '<KIND> <number>'");
    }
    if (head == "WALK") s.steps.push_back(ScheduleStep::walk(parse_number(value, lineno)));
    else if (head == "ORACLE") s.steps.push_back(ScheduleStep::oracle(parse_number(value, lineno)));
    else throw ParseError("line " + std::to_string(lineno) + ": unknown step '" + head + "'");
  }
  if (!have_header) throw ParseError("missing SCHEDULE header");
  return s;
}

}  // namespace ciin

// Copyright 2026 The qprof Authors
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

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "qprof/circuit.hpp"
#include "qprof/errors.hpp"
#include "text_util.hpp"

namespace qprof {

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

void write_text(std::ostream& os, const Circuit& circuit) {
  os << "qubits " << circuit.num_qubits() << '\n';
  if (!circuit.name().empty()) os << "name " << circuit.name() << '\n';
  for (const Instruction& op : circuit.instructions()) {
    os << op.name();
    switch (op.type) {
      case GateType::RZ:
      case GateType::CP:
        os << '(' << format_double(op.angle) << ')';
        break;
      case GateType::DELAY:
        os << '(' << op.ticks << ')';
        break;
      case GateType::BOX:
        os << '(' << op.label << ')';
        break;
      default:
        break;
    }
    for (std::size_t i = 0; i < op.qubits.size(); ++i) {
      os << (i == 0 ? " " : ", ") << 'q' << op.qubits[i];
    }
    os << '\n';
  }
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream os;
  write_text(os, circuit);
  return os.str();
}

namespace {

Qubit parse_qubit(std::string_view token, std::size_t line) {
  token = detail::trim(token);
  if (token.size() < 2 || token[0] != 'q') {
    throw ParseError(line, "expected qubit operand 'q<i>', got '" +
                               std::string(token) + "'");
  }
  return detail::parse_number<Qubit>(token.substr(1), line, "qubit index");
}

Instruction parse_instruction(std::string_view body, std::size_t line) {
  // GATE[(param)] q<i>[, q<j>...]
  std::size_t head_end = body.find_first_of(" \t(");
  std::string_view head = body.substr(0, head_end);
  auto type = gate_type_from_name(head);
  if (!type) {
    throw ParseError(line, "unknown gate '" + std::string(head) + "'");
  }
  Instruction op;
  op.type = *type;
  std::string_view rest =
      head_end == std::string_view::npos ? "" : body.substr(head_end);
  rest = detail::trim(rest);
  std::string_view param;
  if (!rest.empty() && rest.front() == '(') {
    std::size_t close = rest.find(')');
    if (close == std::string_view::npos) {
      throw ParseError(line, "unterminated parameter list");
    }
    param = detail::trim(rest.substr(1, close - 1));
    rest = detail::trim(rest.substr(close + 1));
  }
  switch (op.type) {
    case GateType::RZ:
    case GateType::CP:
      if (param.empty()) throw ParseError(line, "missing angle");
      op.angle = detail::parse_number<double>(param, line, "angle");
      break;
    case GateType::DELAY:
      if (param.empty()) throw ParseError(line, "missing delay");
      op.ticks = detail::parse_number<Ticks>(param, line, "delay");
      break;
    case GateType::BOX:
      if (param.empty()) throw ParseError(line, "missing box name");
      op.label = std::string(param);
      break;
    default:
      if (!param.empty()) {
        throw ParseError(line, std::string(head) + " takes no parameter");
      }
  }
  while (!rest.empty()) {
    std::size_t comma = rest.find(',');
    op.qubits.push_back(parse_qubit(rest.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return op;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    line = detail::trim(detail::strip_comment(line));
    if (line.empty()) continue;
    if (!circuit) {
      auto fields = detail::split_ws(line);
      if (fields.size() != 2 || fields[0] != "qubits") {
        throw ParseError(line_no, "expected header 'qubits <n>'");
      }
      circuit.emplace(
          detail::parse_number<std::size_t>(fields[1], line_no, "qubit count"));
      continue;
    }
    if (line.starts_with("name ") || line.starts_with("name\t")) {
      circuit->set_name(std::string(detail::trim(line.substr(5))));
      continue;
    }
    Instruction op = parse_instruction(line, line_no);
    try {
      circuit->append(std::move(op));
    } catch (const InvariantViolation& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits <n>' header");
  return std::move(*circuit);
}

Circuit read_circuit(std::istream& is) {
  std::string text{std::istreambuf_iterator<char>(is),
                   std::istreambuf_iterator<char>()};
  return parse_circuit(text);
}

}  // namespace qprof

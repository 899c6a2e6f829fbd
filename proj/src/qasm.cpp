// Copyright 2026 mcsynth contributors
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

#include "mcsynth/qasm.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "mcsynth/errors.hpp"

namespace mcsynth {

namespace {

struct UParams {
  double theta, phi, lambda;
};

// Canonical u(theta, phi, lambda) parameters; the global phase is dropped,
// which is the information the three-parameter form can carry.
UParams u_params(const Mat2& m) {
  UParams p{};
  const double c = std::abs(m.m00);
  const double s = std::abs(m.m10);
  p.theta = 2.0 * std::atan2(s, c);
  if (s < 1e-12) {
    p.phi = 0.0;
    p.lambda = std::arg(m.m11) - std::arg(m.m00);
  } else if (c < 1e-12) {
    p.phi = std::arg(m.m10);
    p.lambda = std::arg(-m.m01);
  } else {
    const double g = std::arg(m.m00);
    p.phi = std::arg(m.m10) - g;
    p.lambda = std::arg(-m.m01) - g;
  }
  return p;
}

Mat2 u_matrix(const UParams& p) {
  const double c = std::cos(p.theta / 2);
  const double s = std::sin(p.theta / 2);
  const Complex el(std::cos(p.lambda), std::sin(p.lambda));
  const Complex ep(std::cos(p.phi), std::sin(p.phi));
  return {c, -el * s, ep * s, ep * el * c};
}

std::string base_str(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
      return "x";
    case GateKind::H:
      return "h";
    case GateKind::Phase:
      return "p(" + g.angle.str() + ")";
    case GateKind::Unitary2: {
      // Iterate extraction over the rebuilt matrix until the formatted
      // parameters are a fixed point, so emitted text re-exports
      // byte-identically.
      UParams p = u_params(g.matrix);
      std::string s = "u(" + format_double(p.theta) + "," +
                      format_double(p.phi) + "," + format_double(p.lambda) +
                      ")";
      for (int i = 0; i < 4; ++i) {
        const UParams p2 = u_params(u_matrix(p));
        const std::string s2 = "u(" + format_double(p2.theta) + "," +
                               format_double(p2.phi) + "," +
                               format_double(p2.lambda) + ")";
        if (s2 == s) break;
        p = p2;
        s = s2;
      }
      return s;
    }
  }
  return "x";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : in_(text) {}

  Circuit run() {
    expect_line("OPENQASM 3.0;");
    Level level = Level::Mcx;
    std::string line = next_line();
    if (line == "// level = mcx") {
      level = Level::Mcx;
      line = next_line();
    } else if (line == "// level = basis") {
      level = Level::Basis;
      line = next_line();
    }
    std::size_t m = 0;
    int consumed = 0;
    if (std::sscanf(line.c_str(), "qubit[%zu] q;%n", &m, &consumed) != 1 ||
        m == 0 || consumed != static_cast<int>(line.size())) {
      fail("expected qubit declaration");
    }
    std::vector<QubitSpec> qubits(m);
    for (std::size_t i = 0; i < m; ++i) {
      qubits[i].name = "q[" + std::to_string(i) + "]";
    }
    // Role comments, then gates.
    Circuit c(std::move(qubits), level);
    std::vector<QubitRole> roles(m, QubitRole::Input);
    bool in_roles = true;
    while (!at_end()) {
      line = next_line();
      if (line.empty()) continue;
      if (in_roles && line.rfind("// role ", 0) == 0) {
        parse_role(line, roles, m);
        continue;
      }
      in_roles = false;
      if (line.rfind("//", 0) == 0) continue;
      parse_gate(line, c);
    }
    std::vector<QubitSpec> specs = c.qubits();
    for (std::size_t i = 0; i < m; ++i) specs[i].role = roles[i];
    Circuit out(std::move(specs), level);
    out.append_all(c.gates());
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("qasm line " + std::to_string(line_no_) + ": " + why);
  }

  bool at_end() {
    return pos_ >= in_.size();
  }

  std::string next_line() {
    if (at_end()) fail("unexpected end of input");
    const std::size_t nl = in_.find('\n', pos_);
    std::string line = nl == std::string::npos ? in_.substr(pos_)
                                               : in_.substr(pos_, nl - pos_);
    pos_ = nl == std::string::npos ? in_.size() : nl + 1;
    ++line_no_;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    return line;
  }

  void expect_line(const std::string& want) {
    const std::string got = next_line();
    if (got != want) fail("expected '" + want + "'");
  }

  void parse_role(const std::string& line, std::vector<QubitRole>& roles,
                  std::size_t m) {
    std::size_t idx = 0;
    char role_buf[32] = {0};
    int consumed = 0;
    if (std::sscanf(line.c_str(), "// role q[%zu] = %31s%n", &idx, role_buf,
                    &consumed) != 2 ||
        idx >= m || consumed != static_cast<int>(line.size())) {
      fail("malformed role comment");
    }
    const std::string role(role_buf);
    if (role == "input") {
      roles[idx] = QubitRole::Input;
    } else if (role == "target") {
      roles[idx] = QubitRole::Target;
    } else if (role == "clean_ancilla") {
      roles[idx] = QubitRole::AncillaClean;
    } else if (role == "dirty_ancilla") {
      roles[idx] = QubitRole::AncillaDirty;
    } else {
      fail("unknown role '" + role + "'");
    }
  }

  std::size_t parse_size(const std::string& s) {
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      fail("malformed number '" + s + "'");
    }
    return v;
  }

  Angle parse_angle(const std::string& s) {
    if (s.rfind("pi*", 0) == 0) {
      const std::size_t slash = s.find('/');
      if (slash == std::string::npos) fail("malformed rational angle");
      try {
        BigInt p(s.substr(3, slash - 3));
        BigInt q(s.substr(slash + 1));
        return Angle::rational(std::move(p), std::move(q));
      } catch (const std::exception&) {
        fail("malformed rational angle");
      }
    }
    double v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      fail("malformed angle '" + s + "'");
    }
    return Angle::real(v);
  }

  std::vector<double> parse_params(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t comma = s.find(',', start);
      const std::string item =
          s.substr(start, comma == std::string::npos ? std::string::npos
                                                     : comma - start);
      double v = 0;
      const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
      if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
        fail("malformed parameter '" + item + "'");
      }
      out.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }

  void parse_gate(const std::string& line, Circuit& c) {
    if (line.back() != ';') fail("gate line must end with ';'");
    std::string body = line.substr(0, line.size() - 1);
    std::size_t extra_controls = 0;
    if (body.rfind("ctrl(", 0) == 0) {
      const std::size_t close = body.find(") @ ");
      if (close == std::string::npos) fail("malformed ctrl modifier");
      const std::string count = body.substr(5, close - 5);
      extra_controls = parse_size(count);
      if (extra_controls == 0) fail("ctrl count must be positive");
      body = body.substr(close + 4);
    }
    const std::size_t sp = body.find(" q[");
    if (sp == std::string::npos) fail("missing operands");
    const std::string head = body.substr(0, sp);
    const std::string operands = body.substr(sp + 1);

    GateKind kind;
    Angle angle;
    Mat2 matrix = Mat2::identity();
    if (head == "x") {
      kind = GateKind::X;
    } else if (head == "h") {
      kind = GateKind::H;
    } else if (head == "cx") {
      if (extra_controls != 0) fail("cx cannot take a ctrl modifier");
      kind = GateKind::X;
      extra_controls = 1;
    } else if (head.rfind("p(", 0) == 0 && head.back() == ')') {
      kind = GateKind::Phase;
      angle = parse_angle(head.substr(2, head.size() - 3));
    } else if (head.rfind("u(", 0) == 0 && head.back() == ')') {
      kind = GateKind::Unitary2;
      const auto params = parse_params(head.substr(2, head.size() - 3));
      if (params.size() != 3) fail("u takes three parameters");
      matrix = u_matrix({params[0], params[1], params[2]});
    } else {
      fail("unknown gate '" + head + "'");
    }

    std::vector<QubitRef> refs;
    std::size_t start = 0;
    while (start < operands.size()) {
      if (operands.compare(start, 2, "q[") != 0) fail("malformed operand");
      const std::size_t close = operands.find(']', start);
      if (close == std::string::npos) fail("malformed operand");
      refs.push_back(QubitRef(
          parse_size(operands.substr(start + 2, close - start - 2))));
      start = close + 1;
      if (start < operands.size()) {
        if (operands.compare(start, 2, ", ") != 0) {
          fail("operands must be comma separated");
        }
        start += 2;
      }
    }
    if (refs.size() != extra_controls + 1) {
      fail("operand count does not match control count");
    }
    Gate g;
    g.kind = kind;
    g.angle = angle;
    g.matrix = matrix;
    g.target = refs.back();
    g.controls.assign(refs.begin(), refs.end() - 1);
    try {
      c.append(std::move(g));
    } catch (const CircuitError& e) {
      fail(e.what());
    }
  }

  const std::string& in_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace

std::string to_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "// level = " << (c.level() == Level::Mcx ? "mcx" : "basis") << "\n";
  out << "qubit[" << c.num_qubits() << "] q;\n";
  for (std::size_t i = 0; i < c.num_qubits(); ++i) {
    out << "// role q[" << i << "] = " << role_name(c.qubits()[i].role)
        << "\n";
  }
  for (const Gate& g : c.gates()) {
    const std::size_t k = g.num_controls();
    if (g.kind == GateKind::X && k == 1) {
      out << "cx";
    } else if (k > 0) {
      out << "ctrl(" << k << ") @ " << base_str(g);
    } else {
      out << base_str(g);
    }
    out << " ";
    for (std::size_t i = 0; i < k; ++i) {
      out << "q[" << g.controls[i] << "], ";
    }
    out << "q[" << g.target << "];\n";
  }
  return out.str();
}

Circuit from_qasm(const std::string& text) {
  Parser parser(text);
  return parser.run();
}

}  // namespace mcsynth

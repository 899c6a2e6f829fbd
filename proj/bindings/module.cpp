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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcsynth/analysis.hpp"
#include "mcsynth/errors.hpp"
#include "mcsynth/lowering.hpp"
#include "mcsynth/qasm.hpp"
#include "mcsynth/simulate.hpp"
#include "mcsynth/synthesis.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace mcsynth;

namespace {

SplitPolicy make_policy(unsigned low_num, unsigned low_den,
                        std::size_t base_threshold) {
  SplitPolicy p;
  p.low_num = low_num;
  p.low_den = low_den;
  p.base_threshold = base_threshold;
  p.validate();
  return p;
}

BaseGate base_from_py(const std::string& kind, py::object param) {
  if (kind == "x") return BaseGate::x();
  if (kind == "h") return BaseGate::h();
  if (kind == "phase") {
    auto [p, q] = param.cast<std::pair<long long, long long>>();
    return BaseGate::phase(Angle::rational(p, q));
  }
  if (kind == "matrix") {
    auto m = param.cast<py::array_t<std::complex<double>>>();
    if (m.ndim() != 2 || m.shape(0) != 2 || m.shape(1) != 2) {
      throw py::value_error("matrix must be 2x2");
    }
    const Mat2 u{m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
    if (!u.is_unitary(1e-10)) throw py::value_error("matrix is not unitary");
    return BaseGate::unitary(u);
  }
  throw py::value_error("base kind must be x, h, phase or matrix");
}

py::dict report_dict(const Circuit& c) {
  const ResourceReport r = c.report();
  const PrecisionAudit audit = precision_audit(c);
  py::dict counts;
  for (const auto& [k, v] : r.counts) counts[py::str(k)] = v;
  py::dict out;
  out["level"] = c.level() == Level::Mcx ? "mcx" : "basis";
  out["qubits"] = c.num_qubits();
  out["depth"] = r.depth;
  out["size"] = r.size;
  out["counts"] = counts;
  out["ancilla_clean"] = r.ancilla_clean;
  out["ancilla_dirty"] = r.ancilla_dirty;
  out["max_denominator"] = py::cast(audit.max_denominator.str());
  out["unbounded_precision"] = audit.has_unbounded;
  out["det_phase"] = det_phase_string(c);
  return out;
}

py::array_t<std::complex<double>> unitary_numpy(const Circuit& c) {
  const DenseMatrix u = unitary_of(c);
  py::array_t<std::complex<double>> out({u.dim, u.dim});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < u.dim; ++r) {
    for (std::size_t col = 0; col < u.dim; ++col) {
      buf(r, col) = u.at(r, col);
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "circuit synthesis for multi-controlled gates and incrementors";

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("num_qubits", &Circuit::num_qubits)
      .def_property_readonly("size", &Circuit::size)
      .def_property_readonly("depth", &Circuit::depth)
      .def_property_readonly(
          "level",
          [](const Circuit& c) {
            return c.level() == Level::Mcx ? "mcx" : "basis";
          })
      .def("inverse", &Circuit::inverse)
      .def("report", &report_dict)
      .def("to_qasm", &to_qasm)
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit qubits=" + std::to_string(c.num_qubits()) +
               " gates=" + std::to_string(c.size()) + ">";
      });

  m.def("mcx_clean", [](std::size_t n) { return mcx_clean(n); }, "n"_a);
  m.def("mcx_dirty", [](std::size_t n) { return mcx_dirty(n); }, "n"_a);
  m.def(
      "mcu_clean",
      [](std::size_t n, const std::string& kind, py::object param) {
        return mcu_clean(n, base_from_py(kind, param));
      },
      "n"_a, "kind"_a, "param"_a = py::none());
  m.def(
      "mcu_dirty",
      [](std::size_t n, const std::string& kind, py::object param) {
        return mcu_dirty(n, base_from_py(kind, param));
      },
      "n"_a, "kind"_a, "param"_a = py::none());
  m.def(
      "incrementor",
      [](std::size_t n, unsigned low_num, unsigned low_den,
         std::size_t base_threshold) {
        return incrementor(n, make_policy(low_num, low_den, base_threshold));
      },
      "n"_a, "low_num"_a = 9, "low_den"_a = 10, "base_threshold"_a = 5);
  m.def(
      "mcx_no_ancilla",
      [](std::size_t n) { return mcx_no_ancilla(n); }, "n"_a);
  m.def(
      "rz_fanout",
      [](const std::vector<std::pair<long long, long long>>& thetas) {
        std::vector<Angle> angles;
        angles.reserve(thetas.size());
        for (const auto& [p, q] : thetas) {
          angles.push_back(Angle::rational(p, q));
        }
        return rz_fanout_circuit(angles);
      },
      "thetas"_a,
      "Controlled-phase column: targets 0..k-1, control k; angles are "
      "(p, q) pairs meaning p*pi/q.");

  m.def("lower_to_basis", &lower_to_basis, "circuit"_a);

  m.def(
      "classical_run",
      [](const Circuit& c, const std::string& bits) {
        return classical_run(c, Bits::from_string(bits)).str();
      },
      "circuit"_a, "input"_a,
      "Runs an X-type circuit on a bitstring (character i is qubit i).");
  m.def("unitary_of", &unitary_numpy, "circuit"_a);
  m.def(
      "oracle_mcx",
      [](std::size_t n, const std::string& bits) {
        return oracle_mcx(n, Bits::from_string(bits)).str();
      },
      "n"_a, "input"_a);
  m.def(
      "oracle_incr",
      [](std::size_t n, const std::string& bits) {
        return oracle_incr(n, Bits::from_string(bits)).str();
      },
      "n"_a, "x"_a);

  m.def("det_phase", &det_phase_string, "circuit"_a,
        "Exact determinant phase as a 'p/q' fraction of pi.");
  m.def("to_qasm", &to_qasm, "circuit"_a);
  m.def("from_qasm", &from_qasm, "text"_a);
  m.def(
      "scaling",
      [](const std::string& family, const std::vector<std::size_t>& ns) {
        const auto fam = family_from_name(family);
        if (!fam) throw py::value_error("unknown family");
        py::list rows;
        for (const ScalingRow& r : scaling_report(*fam, ns)) {
          py::dict d;
          d["n"] = r.n;
          d["depth_mcx"] = r.depth_mcx;
          d["depth_basis"] = r.depth_basis;
          d["size"] = r.size;
          d["size_basis"] = r.size_basis;
          d["ancilla_clean"] = r.ancilla_clean;
          d["ancilla_dirty"] = r.ancilla_dirty;
          if (r.depth_diff) d["depth_diff"] = *r.depth_diff;
          rows.append(d);
        }
        return rows;
      },
      "family"_a, "ns"_a);

  py::register_exception<CircuitError>(m, "CircuitError");
  py::register_exception<SynthesisError>(m, "SynthesisError");
  py::register_exception<SimulationError>(m, "SimulationError");
  py::register_exception<ParseError>(m, "QasmParseError");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}

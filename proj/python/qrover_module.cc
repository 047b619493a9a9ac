// Copyright 2026 The qrover Authors
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
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "qrover/benchmark.h"
#include "qrover/cli.h"
#include "qrover/error.h"
#include "qrover/io.h"
#include "qrover/verify.h"

namespace py = pybind11;
using namespace qrover;

namespace {

py::object json_to_py(const io::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

double radius_to_py(const Radius& r) {
  return r.is_infinite() ? INFINITY : r.value();
}

DensityMatrix state_of(const CMatrix& rho) { return DensityMatrix(rho); }

Povm povm_of(const std::vector<CMatrix>& elements, std::vector<std::string> labels) {
  Povm povm;
  povm.elements = elements;
  if (labels.empty()) {
    for (std::size_t i = 0; i < elements.size(); ++i) labels.push_back(std::to_string(i));
  }
  povm.labels = std::move(labels);
  return povm;
}

}  // namespace

PYBIND11_MODULE(qrover, m) {
  m.doc() = "Robustness verification for quantum classifiers";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "QroverError");

  py::class_<Classifier>(m, "Classifier")
      .def_static("load", [](const std::string& path) { return io::load_model(path).classifier; },
                  py::arg("manifest_path"))
      .def_static(
          "from_qasm",
          [](const std::string& qasm, const std::vector<CMatrix>& povm,
             std::vector<std::string> labels) {
            return Classifier::from_circuit(parse_qasm(qasm), povm_of(povm, std::move(labels)));
          },
          py::arg("qasm"), py::arg("povm"), py::arg("labels") = std::vector<std::string>{})
      .def_static(
          "from_kraus",
          [](const std::vector<CMatrix>& kraus, const std::vector<CMatrix>& povm,
             std::vector<std::string> labels) {
            KrausChannel channel;
            channel.dim = kraus.empty() ? 1 : static_cast<int>(kraus[0].rows());
            channel.ops = kraus;
            return Classifier::from_kraus(channel, povm_of(povm, std::move(labels)));
          },
          py::arg("kraus"), py::arg("povm"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("n_qubits", [](const Classifier& a) { return a.n_qubits; })
      .def_property_readonly("labels", [](const Classifier& a) { return a.povm.labels; })
      .def("distribution", [](const Classifier& a, const CMatrix& rho) {
        return outcome_distribution(a, state_of(rho));
      });

  m.def("canonical_qasm", [](const std::string& text) { return emit_qasm(parse_qasm(text)); },
        "Parses OpenQASM 2.0 and emits its canonical form.");
  m.def("fidelity", [](const CMatrix& rho, const CMatrix& sigma) {
    return fidelity(state_of(rho), state_of(sigma));
  });
  m.def("robustness_lower_bound",
        [](const std::vector<double>& dist) { return robustness_lower_bound(dist); });
  m.def(
      "optimal_radius",
      [](const Classifier& a, const CMatrix& rho) {
        OptimalRadius r = optimal_radius(a, state_of(rho));
        py::dict out;
        out["eps_star"] = radius_to_py(r.eps_star);
        out["predicted"] = a.povm.labels[r.predicted_label];
        out["target"] = r.target_label ? py::cast(a.povm.labels[*r.target_label]) : py::none();
        out["witness"] = r.witness ? py::cast(r.witness->matrix()) : py::none();
        return out;
      },
      py::arg("classifier"), py::arg("rho"));
  m.def(
      "verify_state",
      [](const Classifier& a, double eps, const CMatrix& rho) {
        StateVerdict v = verify_state(a, eps, state_of(rho));
        py::dict out;
        out["robust"] = v.robust;
        out["eps_star"] = radius_to_py(v.eps_star);
        out["boundary"] = v.boundary;
        out["witness"] = v.witness ? py::cast(v.witness->matrix()) : py::none();
        return out;
      },
      py::arg("classifier"), py::arg("epsilon"), py::arg("rho"));
  m.def(
      "verify",
      [](const std::string& model, const std::string& dataset, double eps,
         const std::string& method, int jobs) {
        io::LoadedModel loaded = io::load_model(model);
        VerifyOptions options;
        options.jobs = jobs;
        VerificationReport r = verify_dataset(loaded.classifier, eps, io::load_dataset(dataset),
                                              method_from_name(method), options);
        return json_to_py(io::report_to_json(r));
      },
      py::arg("model"), py::arg("dataset"), py::arg("epsilon"), py::arg("method") = "mixed",
      py::arg("jobs") = 1, "Verifies a dataset file against a model manifest.");
  m.def(
      "parameter_shift_gradient",
      [](const Classifier& a, const RVector& features, int label) {
        EncodedInput in = encode_angle(features, a.n_qubits);
        return parameter_shift_gradient(a, in, LossSpec::cross_entropy(label)).gradient;
      },
      py::arg("classifier"), py::arg("features"), py::arg("label"),
      "Gradient of -log p_label with respect to angle-encoded features.");
  m.def(
      "benchmark",
      [](const std::string& task, int n_qubits, int samples, std::uint64_t seed, int jobs) {
        BenchmarkConfig cfg = default_benchmark(task, n_qubits, seed);
        cfg.samples = samples;
        cfg.jobs = jobs;
        BenchmarkResult r;
        {
          py::gil_scoped_release release;
          r = run_benchmark(cfg);
        }
        return json_to_py(io::benchmark_to_json(r));
      },
      py::arg("task"), py::arg("n_qubits") = 3, py::arg("samples") = 10, py::arg("seed") = 0,
      py::arg("jobs") = 1);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command in-process and returns (exit code, stdout, stderr).");
}

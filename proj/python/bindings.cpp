// Copyright 2026 The imsteer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file
 * Python bindings. Density matrices cross the boundary as complex NumPy
 * arrays and are validated on entry; imsteer::Error surfaces as ValueError.
 */

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "imsteer/audit.hpp"
#include "imsteer/error.hpp"
#include "imsteer/imaginarity.hpp"
#include "imsteer/monogamy.hpp"
#include "imsteer/states.hpp"
#include "imsteer/steering.hpp"
#include "imsteer/witness.hpp"

namespace py = pybind11;
using namespace imsteer;

namespace {

using Array = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const Array &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw Error("expected a square matrix");
    }
    const auto n = static_cast<std::size_t>(a.shape(0));
    if (n != 2 && n != 4 && n != 8) {
        throw Error("matrix dimension must be 2, 4 or 8");
    }
    ComplexMatrix m(n);
    const auto view = a.unchecked<2>();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = view(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c));
        }
    }
    return m;
}

Array to_array(const ComplexMatrix &m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    Array out({n, n});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t r = 0; r < n; ++r) {
        for (py::ssize_t c = 0; c < n; ++c) {
            view(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    return out;
}

DensityMatrix to_state(const Array &a) {
    DensityMatrix rho(to_matrix(a));
    if (rho.dim() != 4) {
        throw Error("expected a two-qubit state");
    }
    return rho;
}

QubitBasis basis_named(const std::string &name) {
    if (name == "x") {
        return QubitBasis::x();
    }
    if (name == "y") {
        return QubitBasis::y();
    }
    if (name == "z") {
        return QubitBasis::z();
    }
    throw Error("basis must be 'x', 'y' or 'z'");
}

py::dict witness_dict(const WitnessOperator &w) {
    py::list terms;
    for (const ProjectorTerm &t : projector_decomposition(w)) {
        terms.append(py::make_tuple(t.coefficient, label(t.alice), label(t.bob)));
    }
    py::dict d;
    d["k"] = w.k;
    d["i"] = w.i;
    d["j"] = w.j;
    d["nu"] = w.nu;
    d["matrix"] = to_array(w.matrix);
    d["decomposition"] = terms;
    return d;
}

TripartiteParams tripartite(const std::array<double, 5> &eta, double theta) {
    TripartiteParams p{eta, theta};
    check_tripartite(p);
    return p;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Imaginarity steering toolkit";
    py::register_exception<Error>(m, "ImsteerError", PyExc_ValueError);

    m.attr("ISI_BOUND") = kIsiBound;
    m.attr("MONOGAMY_BOUND") = kMonogamyBound;

    m.def("werner", [](double v) { return to_array(werner(v).matrix()); }, py::arg("v"));
    m.def("mems", [](double c) { return to_array(mems(c).matrix()); }, py::arg("c"));
    m.def("singlet", [] { return to_array(singlet().matrix()); });

    m.def("robustness_of_imaginarity",
          [](const Array &rho, const std::string &basis) {
              return robustness_of_imaginarity(DensityMatrix(to_matrix(rho)),
                                               basis_named(basis));
          },
          py::arg("rho"), py::arg("basis") = "z");

    m.def("isi", [](const Array &rho) { return isi_operational(to_state(rho)); },
          py::arg("rho"));
    m.def("isi_closed",
          [](const Array &rho) { return isi_closed(to_bloch(to_state(rho))); },
          py::arg("rho"));
    m.def("isi_violated", [](const Array &rho) { return isi_violated(to_state(rho)); },
          py::arg("rho"));
    m.def("isi_unsharp",
          [](const Array &rho, double sharpness) {
              return isi_unsharp(to_state(rho), sharpness);
          },
          py::arg("rho"), py::arg("sharpness"));

    m.def("evaluate",
          [](const std::string &criterion, const Array &rho, double sharpness) {
              const CriterionValue v =
                  evaluate(Criterion::parse(criterion), to_state(rho), sharpness);
              return py::make_tuple(v.value, v.bound, v.violated());
          },
          py::arg("criterion"), py::arg("rho"), py::arg("sharpness") = 1.0,
          "(value, bound, violated) for a named criterion");
    m.def("werner_threshold",
          [](const std::string &criterion, double tol) {
              return threshold_scan(werner_curve(Criterion::parse(criterion)), tol);
          },
          py::arg("criterion"), py::arg("tol") = 1e-6);
    m.def("unsharp_threshold",
          [](const std::string &criterion, double tol) {
              return threshold_scan(unsharp_singlet_curve(Criterion::parse(criterion)), tol);
          },
          py::arg("criterion"), py::arg("tol") = 1e-6);

    m.def("build_witness", [](int k, int i, int j) { return witness_dict(build_witness(k, i, j)); },
          py::arg("k"), py::arg("i"), py::arg("j"));
    m.def("select_witness",
          [](const Array &rho) {
              const WitnessSelection s = select_witness(to_state(rho));
              py::dict d = witness_dict(s.witness);
              d["expectation"] = s.expectation;
              return d;
          },
          py::arg("rho"));

    m.def("monogamy_sum",
          [](const std::array<double, 5> &eta, double theta) {
              const MonogamySum s = monogamy_sum(tripartite(eta, theta));
              return py::make_tuple(s.i2ab, s.i2ac, s.sum);
          },
          py::arg("eta"), py::arg("theta") = 0.0);
    m.def("monogamy_scan",
          [](std::uint64_t n, std::uint64_t seed, bool include_maximizer) {
              MonogamyScan s;
              {
                  py::gil_scoped_release release;
                  s = monogamy_scan(n, seed, include_maximizer);
              }
              py::dict d;
              d["max_sum"] = s.max_sum;
              d["eta"] = s.argmax.eta;
              d["theta"] = s.argmax.theta;
              d["samples"] = s.samples;
              return d;
          },
          py::arg("n"), py::arg("seed") = 42, py::arg("include_maximizer") = false);

    m.def("audit_suites", &audit_suites);
    m.def("run_audit",
          [](const std::string &suite, std::uint64_t n, std::uint64_t seed) {
              AuditResult r;
              {
                  py::gil_scoped_release release;
                  r = run_audit(suite, n, seed);
              }
              py::dict d;
              d["suite"] = r.suite;
              d["samples"] = r.samples;
              d["worst"] = r.worst;
              d["tolerance"] = r.tolerance;
              d["passed"] = r.passed;
              return d;
          },
          py::arg("suite"), py::arg("n") = 10000, py::arg("seed") = 42);
}

// Copyright 2026 The qorder Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qorder/io.hpp"
#include "qorder/qorder.hpp"

namespace py = pybind11;
using namespace qorder;

using IntList = std::vector<int>;
using RealList = std::vector<double>;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ordering QUBOs (sort, search tree, heap) solved by Hopfield descent";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidSize>(m, "InvalidSize", base);
    py::register_exception<InvalidProgram>(m, "InvalidProgram", base);
    py::register_exception<InvalidConfig>(m, "InvalidConfig", base);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
    py::register_exception<NonSquareLength>(m, "NonSquareLength", base);
    py::register_exception<NotAPermutation>(m, "NotAPermutation", base);
    py::register_exception<UnsupportedBranching>(m, "UnsupportedBranching", base);
    py::register_exception<ZeroVector>(m, "ZeroVector", base);
    py::register_exception<NonZeroDiagonal>(m, "NonZeroDiagonal", base);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base);
    py::register_exception<MaxStepsExceeded>(m, "MaxStepsExceeded", base);
    py::register_exception<SizeBudgetExceeded>(m, "SizeBudgetExceeded", base);
    py::register_exception<ParseError>(m, "ParseError", base);

    // core

    py::class_<ValueVector>(m, "ValueVector")
        .def(py::init<RealList>(), py::arg("entries"))
        .def_property_readonly("entries", &ValueVector::entries)
        .def_property_readonly("normalized_entries", &ValueVector::normalized_entries)
        .def_property_readonly("l1_norm", &ValueVector::l1_norm)
        .def("__len__", &ValueVector::size);

    py::enum_<ProgramKind>(m, "ProgramKind")
        .value("ascending", ProgramKind::ascending)
        .value("descending", ProgramKind::descending)
        .value("bst", ProgramKind::bst)
        .value("heap", ProgramKind::heap)
        .value("custom", ProgramKind::custom);

    py::class_<OrderProgram>(m, "OrderProgram")
        .def(py::init<IntList, ProgramKind, int>(), py::arg("ranks"),
             py::arg("kind") = ProgramKind::custom, py::arg("branching") = 2)
        .def_property_readonly("ranks", &OrderProgram::ranks)
        .def_property_readonly("kind", &OrderProgram::kind)
        .def_property_readonly("branching", &OrderProgram::branching)
        .def("__len__", &OrderProgram::size)
        .def("__repr__", [](const OrderProgram& p) {
            return "OrderProgram(" + io::program_to_json(p).dump() + ")";
        });

    py::class_<QuboInstance>(m, "QuboInstance")
        .def(py::init<std::size_t, Matrix, Vector, double, double, bool>(), py::arg("source_n"),
             py::arg("R"), py::arg("r"), py::arg("lambda_r"), py::arg("lambda_c"),
             py::arg("normalized"))
        .def_property_readonly("source_n", &QuboInstance::source_n)
        .def_property_readonly("dimension", &QuboInstance::dimension)
        .def_property_readonly("R", &QuboInstance::R)
        .def_property_readonly("r", &QuboInstance::r)
        .def_property_readonly("lambda_r", &QuboInstance::lambda_r)
        .def_property_readonly("lambda_c", &QuboInstance::lambda_c)
        .def_property_readonly("normalized", &QuboInstance::normalized)
        .def("to_json", [](const QuboInstance& q) { return io::qubo_to_json(q).dump(); });

    py::class_<IsingInstance>(m, "IsingInstance")
        .def(py::init<Matrix, Vector>(), py::arg("Q"), py::arg("q"))
        .def_property_readonly("Q", &IsingInstance::Q)
        .def_property_readonly("q", &IsingInstance::q);

    py::class_<HopfieldInstance>(m, "HopfieldInstance")
        .def(py::init<Matrix, Vector>(), py::arg("W"), py::arg("theta"))
        .def_property_readonly("W", &HopfieldInstance::W)
        .def_property_readonly("theta", &HopfieldInstance::theta)
        .def_property_readonly("dimension", &HopfieldInstance::dimension);

    py::class_<PermutationMatrix>(m, "PermutationMatrix")
        .def(py::init<IntList>(), py::arg("mapping"))
        .def_property_readonly("as_mapping", &PermutationMatrix::as_mapping)
        .def_property_readonly("matrix", &PermutationMatrix::matrix)
        .def("__eq__", [](const PermutationMatrix& a, const PermutationMatrix& b) { return a == b; });

    py::class_<TraceStep>(m, "TraceStep")
        .def_readonly("t", &TraceStep::t)
        .def_readonly("state", &TraceStep::state)
        .def_readonly("energy", &TraceStep::energy);

    py::class_<SolverTrace>(m, "SolverTrace")
        .def_readonly("steps", &SolverTrace::steps)
        .def_readonly("converged", &SolverTrace::converged)
        .def_readonly("flips", &SolverTrace::flips)
        .def("render", &io::render_trace);

    m.def("vectorize", &vectorize, py::arg("matrix"));
    m.def("matricize", &matricize, py::arg("vector"));
    m.def("decode_permutation", [](const IntList& z) { return decode_permutation(z); },
          py::arg("z"));
    m.def("encode_permutation", &encode_permutation, py::arg("permutation"));
    m.def("apply_permutation", &apply_permutation, py::arg("permutation"), py::arg("x"));

    // order programs

    m.def("ascending_program", &ascending_program, py::arg("n"));
    m.def("descending_program", &descending_program, py::arg("n"));
    m.def("bst_program", &bst_program, py::arg("n"), py::arg("b") = 2);
    m.def("heap_program", &heap_program, py::arg("n"), py::arg("b") = 2);
    m.def("validate_bst",
          [](const RealList& values, std::size_t size, int b) {
              return validate_bst(values, TreeShape(size, b));
          },
          py::arg("values"), py::arg("size"), py::arg("branching") = 2);
    m.def("validate_heap",
          [](const RealList& values, std::size_t size, int b) {
              return validate_heap(values, TreeShape(size, b));
          },
          py::arg("values"), py::arg("size"), py::arg("branching") = 2);

    // builder

    py::class_<BuilderConfig>(m, "BuilderConfig")
        .def(py::init([](double lr, double lc, bool normalize) {
                 return BuilderConfig{lr, lc, normalize};
             }),
             py::arg("lambda_r"), py::arg("lambda_c"), py::arg("normalize") = true)
        .def_static("defaults_for", &BuilderConfig::defaults_for, py::arg("n"))
        .def_readwrite("lambda_r", &BuilderConfig::lambda_r)
        .def_readwrite("lambda_c", &BuilderConfig::lambda_c)
        .def_readwrite("normalize", &BuilderConfig::normalize);

    m.def("build_N", &build_N, py::arg("program"));
    m.def("build_Cr", &build_Cr, py::arg("n"));
    m.def("build_Cc", &build_Cc, py::arg("n"));
    m.def("build_qubo",
          py::overload_cast<const ValueVector&, const OrderProgram&, const BuilderConfig&>(
              &build_qubo),
          py::arg("x"), py::arg("program"), py::arg("cfg"));
    m.def("build_qubo", py::overload_cast<const ValueVector&, const OrderProgram&>(&build_qubo),
          py::arg("x"), py::arg("program"));
    m.def("qubo_objective",
          [](const QuboInstance& inst, const IntList& z) { return qubo_objective(inst, z); },
          py::arg("instance"), py::arg("z"));

    // conversions

    m.def("fold_diagonal", &fold_diagonal, py::arg("instance"));
    m.def("to_ising", &to_ising, py::arg("instance"));
    m.def("to_hopfield", &to_hopfield, py::arg("ising"));
    m.def("qubo_to_hopfield", &qubo_to_hopfield, py::arg("instance"));
    m.def("binary_to_bipolar", [](const IntList& z) { return binary_to_bipolar(z); },
          py::arg("z"));
    m.def("bipolar_to_binary", [](const IntList& s) { return bipolar_to_binary(s); },
          py::arg("s"));
    m.def("ising_energy",
          [](const IsingInstance& inst, const IntList& s) { return ising_energy(inst, s); },
          py::arg("ising"), py::arg("s"));

    // solver

    py::enum_<InitialState>(m, "InitialState")
        .value("all_inactive", InitialState::all_inactive)
        .value("given", InitialState::given)
        .value("random", InitialState::random);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("initial", &SolverConfig::initial)
        .def_readwrite("given_state", &SolverConfig::given_state)
        .def_readwrite("max_steps", &SolverConfig::max_steps)
        .def_readwrite("restarts", &SolverConfig::restarts)
        .def_readwrite("seed", &SolverConfig::seed);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("state", &SolveResult::state)
        .def_readonly("trace", &SolveResult::trace)
        .def_readonly("attempts", &SolveResult::attempts)
        .def_readonly("feasible", &SolveResult::feasible);

    m.def("energy",
          [](const HopfieldInstance& inst, const IntList& s) { return energy(inst, s); },
          py::arg("network"), py::arg("s"));
    m.def("flip_gain",
          [](const HopfieldInstance& inst, const IntList& s, std::size_t i) {
              return flip_gain(inst, s, i);
          },
          py::arg("network"), py::arg("s"), py::arg("i"));
    m.def("solve",
          [](const HopfieldInstance& inst, const SolverConfig& cfg,
             std::optional<std::function<bool(const IntList&)>> feasible) {
              FeasibilityCheck check;
              if (feasible) {
                  check = [f = *feasible](std::span<const int> s) {
                      return f(IntList(s.begin(), s.end()));
                  };
              }
              return solve(inst, cfg, check);
          },
          py::arg("network"), py::arg("cfg") = SolverConfig{}, py::arg("feasible") = py::none());
    m.def("decodes_to_permutation",
          [](const IntList& s) { return decodes_to_permutation(s); }, py::arg("s"));

    // oracle

    py::class_<CertificateReport>(m, "CertificateReport")
        .def_readonly("feasible", &CertificateReport::feasible)
        .def_readonly("permutation", &CertificateReport::permutation)
        .def_readonly("output", &CertificateReport::output)
        .def_readonly("achieved_objective", &CertificateReport::achieved_objective)
        .def_readonly("best_objective", &CertificateReport::best_objective)
        .def_readonly("optimal", &CertificateReport::optimal)
        .def_readonly("objective_tie", &CertificateReport::objective_tie)
        .def_readonly("structure_valid", &CertificateReport::structure_valid)
        .def_readonly("qubo_value", &CertificateReport::qubo_value)
        .def_readonly("failure", &CertificateReport::failure)
        .def_property_readonly("passed", &CertificateReport::passed);

    m.def("ordering_objective", &ordering_objective, py::arg("x"), py::arg("program"),
          py::arg("permutation"));
    m.def("best_permutation",
          [](const ValueVector& x, const OrderProgram& program) {
              auto best = best_permutation(x, program);
              return py::make_tuple(best.permutation, best.objective);
          },
          py::arg("x"), py::arg("program"));
    m.def("exhaustive_qubo_min",
          [](const QuboInstance& inst) {
              auto best = exhaustive_qubo_min(inst);
              return py::make_tuple(best.z, best.value);
          },
          py::arg("instance"));
    m.def("certify",
          [](const ValueVector& x, const OrderProgram& program, const BuilderConfig& cfg,
             const IntList& state) { return certify(x, program, cfg, state); },
          py::arg("x"), py::arg("program"), py::arg("cfg"), py::arg("state"));
}

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

#include "qorder/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "qorder/conversions.hpp"
#include "qorder/order_programs.hpp"

namespace qorder {

namespace {

double mapping_objective(std::span<const double> x, std::span<const int> ranks,
                         std::span<const int> mapping) {
    double sum = 0.0;
    for (std::size_t i = 0; i < mapping.size(); ++i) sum += x[mapping[i]] * ranks[i];
    return -sum;
}

double exact_value(const QuboInstance& inst, std::uint64_t code) {
    BinaryState z(inst.dimension());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = static_cast<int>((code >> k) & 1U);
    return qubo_objective(inst, z);
}

}  // namespace

double ordering_objective(const ValueVector& x, const OrderProgram& program,
                          const PermutationMatrix& p) {
    if (x.size() != program.size() || p.size() != x.size()) {
        throw DimensionMismatch("input, program and permutation sizes differ");
    }
    return mapping_objective(x.entries(), program.ranks(), p.as_mapping());
}

bool objectives_equal(double a, double b) {
    return std::abs(a - b) <= 1e-9 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

PermutationOptimum best_permutation(const ValueVector& x, const OrderProgram& program) {
    if (x.size() != program.size()) {
        throw DimensionMismatch("input has " + std::to_string(x.size()) +
                                " entries but program has " + std::to_string(program.size()));
    }
    if (x.size() > kMaxPermutationOracleSize) {
        throw SizeBudgetExceeded("permutation oracle limited to n <= " +
                                 std::to_string(kMaxPermutationOracleSize));
    }
    std::vector<int> mapping(x.size());
    std::iota(mapping.begin(), mapping.end(), 0);
    std::vector<int> best = mapping;
    double best_value = mapping_objective(x.entries(), program.ranks(), mapping);
    // next_permutation walks mappings in lexicographic order, so keeping the
    // first of equal objectives implements the tie-break.
    while (std::next_permutation(mapping.begin(), mapping.end())) {
        const double value = mapping_objective(x.entries(), program.ranks(), mapping);
        if (value < best_value && !objectives_equal(value, best_value)) {
            best_value = value;
            best = mapping;
        }
    }
    return {PermutationMatrix(std::move(best)), best_value};
}

QuboOptimum exhaustive_qubo_min(const QuboInstance& inst) {
    const std::size_t n = inst.dimension();
    if (n > kMaxExhaustiveQuboDimension) {
        throw SizeBudgetExceeded("exhaustive QUBO search limited to N <= " +
                                 std::to_string(kMaxExhaustiveQuboDimension));
    }
    const Matrix& R = inst.R();
    const Vector& r = inst.r();

    // Gray-code walk: consecutive states differ in one bit, so each value is
    // updated in O(N) through the running product R z.
    Vector Rz = Vector::Zero(static_cast<Eigen::Index>(n));
    std::uint64_t gray = 0;
    double value = 0.0;
    std::uint64_t best_code = 0;
    double best_value = 0.0;

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto k = static_cast<Eigen::Index>(std::countr_zero(step));
        const bool on = ((gray >> k) & 1U) == 0;
        const double sign = on ? 1.0 : -1.0;
        value += sign * (2.0 * Rz[k] + r[k]) + R(k, k);
        Rz += sign * R.col(k);
        gray ^= std::uint64_t{1} << k;

        if (value < best_value || objectives_equal(value, best_value)) {
            // Re-evaluate candidates exactly so drift cannot decide ties.
            const double exact = exact_value(inst, gray);
            if (objectives_equal(exact, best_value)) {
                if (gray < best_code) {
                    best_code = gray;
                    best_value = exact;
                }
            } else if (exact < best_value) {
                best_code = gray;
                best_value = exact;
            }
            value = exact;
        }
    }

    BinaryState z(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = static_cast<int>((best_code >> k) & 1U);
    return {std::move(z), best_value};
}

CertificateReport certify(const ValueVector& x, const OrderProgram& program,
                          const BuilderConfig& cfg, std::span<const int> solver_state) {
    CertificateReport report;
    const auto optimum = best_permutation(x, program);
    report.best_objective = optimum.objective;

    std::set<double> distinct(x.entries().begin(), x.entries().end());
    report.objective_tie = distinct.size() < x.size();

    BinaryState z;
    try {
        z = bipolar_to_binary(solver_state);
        report.permutation = decode_permutation(z);
    } catch (const NonSquareLength& e) {
        report.failure = e.what();
        return report;
    } catch (const NotAPermutation& e) {
        report.failure = e.what();
        return report;
    } catch (const DomainError& e) {
        report.failure = e.what();
        return report;
    }
    if (report.permutation->size() != x.size()) {
        report.failure = "state decodes to a permutation of the wrong size";
        report.permutation.reset();
        return report;
    }

    report.feasible = true;
    report.output = apply_permutation(*report.permutation, x);
    report.achieved_objective = ordering_objective(x, program, *report.permutation);
    report.optimal = objectives_equal(report.achieved_objective, report.best_objective);
    report.qubo_value = qubo_objective(build_qubo(x, program, cfg), z);

    const std::size_t n = x.size();
    if (program.kind() == ProgramKind::bst) {
        report.structure_valid = validate_bst(report.output, TreeShape(n, 2));
    } else if (program.kind() == ProgramKind::heap) {
        report.structure_valid = validate_heap(report.output, TreeShape(n, program.branching()));
    }
    return report;
}

}  // namespace qorder

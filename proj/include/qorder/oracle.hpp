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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qorder/core.hpp"
#include "qorder/qubo_builder.hpp"

namespace qorder {

// Brute-force ground truth for the builder and the solver.

inline constexpr std::size_t kMaxPermutationOracleSize = 10;
inline constexpr std::size_t kMaxExhaustiveQuboDimension = 20;

/// -x^T P^T ranks = -<P x, ranks>, on the raw entries of x.
double ordering_objective(const ValueVector& x, const OrderProgram& program,
                          const PermutationMatrix& p);

/// True when a and b agree up to a small relative tolerance.
bool objectives_equal(double a, double b);

struct PermutationOptimum {
    PermutationMatrix permutation;
    double objective;
};

/// Enumerates all n! permutations; ties go to the lexicographically smallest
/// mapping. Throws SizeBudgetExceeded for n > 10 and DimensionMismatch.
PermutationOptimum best_permutation(const ValueVector& x, const OrderProgram& program);

struct QuboOptimum {
    BinaryState z;
    double value;
};

/// Global minimum over all 2^N binary states; ties go to the smallest integer
/// encoding (bit k of the encoding is z[k]). Throws SizeBudgetExceeded for N > 20.
QuboOptimum exhaustive_qubo_min(const QuboInstance& inst);

struct CertificateReport {
    bool feasible = false;
    std::optional<PermutationMatrix> permutation;
    std::vector<double> output;
    double achieved_objective = 0.0;
    double best_objective = 0.0;
    bool optimal = false;
    /// Several permutations reach the optimum (duplicate input values).
    bool objective_tie = false;
    /// Set for bst and heap programs only.
    std::optional<bool> structure_valid;
    /// QUBO objective of the certified state.
    double qubo_value = 0.0;
    /// Why the state is infeasible, empty otherwise.
    std::string failure;

    bool passed() const noexcept { return feasible && optimal && structure_valid.value_or(true); }
};

/// Checks a bipolar solver state: permutation validity, ordering objective
/// against best_permutation, and the bst/heap property of P x. Infeasible
/// states yield a failed report rather than an exception.
CertificateReport certify(const ValueVector& x, const OrderProgram& program,
                          const BuilderConfig& cfg, std::span<const int> solver_state);

}  // namespace qorder

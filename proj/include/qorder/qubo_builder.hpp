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
#include <span>

#include "qorder/core.hpp"

namespace qorder {

/// Penalty weights for the row and column sum-to-one constraints.
struct BuilderConfig {
    double lambda_r;
    double lambda_c;
    bool normalize = true;

    /// lambda_r = lambda_c = n with normalized inputs.
    static BuilderConfig defaults_for(std::size_t n);

    /// Throws InvalidConfig unless both weights are positive and finite.
    void validate() const;
};

/// Kronecker product a (x) b.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// N = I (x) ranks^T, so that N vec(Z) = Z^T ranks.
Matrix build_N(const OrderProgram& program);

/// C_r = 1^T (x) I, so that C_r vec(Z) = Z 1 (row sums).
Matrix build_Cr(std::size_t n);

/// C_c = I (x) 1^T, so that C_c vec(Z) = Z^T 1 (column sums).
Matrix build_Cc(std::size_t n);

/// Ordering QUBO over z = vec(P):
///   R = lambda_r C_r^T C_r + lambda_c C_c^T C_c
///   r = -N^T x - 2 (lambda_r C_r + lambda_c C_c)^T 1
/// where x is the L1-normalized input when cfg.normalize is set.
///
/// Throws DimensionMismatch if the lengths of x and program differ, ZeroVector
/// if normalization is requested for an all-zero input and InvalidConfig for
/// non-positive weights.
QuboInstance build_qubo(const ValueVector& x, const OrderProgram& program,
                        const BuilderConfig& cfg);

/// Same as above with BuilderConfig::defaults_for(x.size()).
QuboInstance build_qubo(const ValueVector& x, const OrderProgram& program);

/// z^T R z + <r, z>. Throws DimensionMismatch.
double qubo_objective(const QuboInstance& inst, std::span<const int> z);

}  // namespace qorder

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

#include <span>

#include "qorder/core.hpp"

namespace qorder {

// Binary <-> bipolar machinery. Constant energy offsets produced by the
// substitutions are dropped; every conversion preserves the argmin.

/// Moves diag(R) into the linear term (z_i^2 = z_i on binary states):
/// R' = R - Diag(R), r' = r + diag(R). Objective values are unchanged.
QuboInstance fold_diagonal(const QuboInstance& inst);

/// Q = R / 4, q = R 1 / 2 + r / 2 under s = 2z - 1.
/// Throws NonZeroDiagonal unless fold_diagonal was applied first.
IsingInstance to_ising(const QuboInstance& inst);

/// W = -2 Q, theta = q.
HopfieldInstance to_hopfield(const IsingInstance& ising);

/// fold_diagonal, to_ising and to_hopfield in sequence.
HopfieldInstance qubo_to_hopfield(const QuboInstance& inst);

/// s = 2z - 1. Throws DomainError on entries outside {0, 1}.
BipolarState binary_to_bipolar(std::span<const int> z);

/// z = (s + 1) / 2. Throws DomainError on entries outside {-1, +1}.
BinaryState bipolar_to_binary(std::span<const int> s);

/// s^T Q s + <q, s>.
double ising_energy(const IsingInstance& ising, std::span<const int> s);

}  // namespace qorder

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

#include "qorder/conversions.hpp"

#include <string>

namespace qorder {

QuboInstance fold_diagonal(const QuboInstance& inst) {
    Matrix R = inst.R();
    Vector r = inst.r() + R.diagonal();
    R.diagonal().setZero();
    return QuboInstance(inst.source_n(), std::move(R), std::move(r), inst.lambda_r(),
                        inst.lambda_c(), inst.normalized());
}

IsingInstance to_ising(const QuboInstance& inst) {
    const Matrix& R = inst.R();
    for (Eigen::Index i = 0; i < R.rows(); ++i) {
        if (R(i, i) != 0.0) {
            throw NonZeroDiagonal("fold the QUBO diagonal before converting to Ising form");
        }
    }
    Matrix Q = 0.25 * R;
    Vector q = 0.5 * (R * Vector::Ones(R.rows())) + 0.5 * inst.r();
    return IsingInstance(std::move(Q), std::move(q));
}

HopfieldInstance to_hopfield(const IsingInstance& ising) {
    return HopfieldInstance(-2.0 * ising.Q(), ising.q());
}

HopfieldInstance qubo_to_hopfield(const QuboInstance& inst) {
    return to_hopfield(to_ising(fold_diagonal(inst)));
}

BipolarState binary_to_bipolar(std::span<const int> z) {
    BipolarState s(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k] != 0 && z[k] != 1) {
            throw DomainError("entry " + std::to_string(k) + " is not binary");
        }
        s[k] = 2 * z[k] - 1;
    }
    return s;
}

BinaryState bipolar_to_binary(std::span<const int> s) {
    BinaryState z(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] != -1 && s[k] != 1) {
            throw DomainError("entry " + std::to_string(k) + " is not bipolar");
        }
        z[k] = (s[k] + 1) / 2;
    }
    return z;
}

double ising_energy(const IsingInstance& ising, std::span<const int> s) {
    if (s.size() != ising.dimension()) {
        throw DimensionMismatch("state has length " + std::to_string(s.size()) +
                                ", instance dimension is " + std::to_string(ising.dimension()));
    }
    Vector sv(static_cast<Eigen::Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k) sv[static_cast<Eigen::Index>(k)] = s[k];
    return sv.dot(ising.Q() * sv) + ising.q().dot(sv);
}

}  // namespace qorder

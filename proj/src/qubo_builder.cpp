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

#include "qorder/qubo_builder.hpp"

#include <cmath>
#include <string>

namespace qorder {

BuilderConfig BuilderConfig::defaults_for(std::size_t n) {
    const auto lambda = static_cast<double>(n);
    return BuilderConfig{lambda, lambda, true};
}

void BuilderConfig::validate() const {
    if (!(lambda_r > 0.0) || !std::isfinite(lambda_r) || !(lambda_c > 0.0) ||
        !std::isfinite(lambda_c)) {
        throw InvalidConfig("penalty weights must be positive and finite");
    }
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix build_N(const OrderProgram& program) {
    const auto n = static_cast<Eigen::Index>(program.size());
    Matrix ranks_row(1, n);
    for (Eigen::Index j = 0; j < n; ++j) ranks_row(0, j) = program.ranks()[j];
    return kronecker(Matrix::Identity(n, n), ranks_row);
}

Matrix build_Cr(std::size_t n) {
    if (n < 1) throw InvalidSize("n must be at least 1");
    const auto m = static_cast<Eigen::Index>(n);
    return kronecker(Matrix::Ones(1, m), Matrix::Identity(m, m));
}

Matrix build_Cc(std::size_t n) {
    if (n < 1) throw InvalidSize("n must be at least 1");
    const auto m = static_cast<Eigen::Index>(n);
    return kronecker(Matrix::Identity(m, m), Matrix::Ones(1, m));
}

QuboInstance build_qubo(const ValueVector& x, const OrderProgram& program,
                        const BuilderConfig& cfg) {
    cfg.validate();
    if (x.size() != program.size()) {
        throw DimensionMismatch("input has " + std::to_string(x.size()) +
                                " entries but program has " + std::to_string(program.size()));
    }
    const std::size_t n = x.size();
    const auto& values = cfg.normalize ? x.normalized_entries() : x.entries();
    const Vector xv = Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(n));

    const Matrix N = build_N(program);
    const Matrix Cr = build_Cr(n);
    const Matrix Cc = build_Cc(n);
    const Vector ones = Vector::Ones(static_cast<Eigen::Index>(n));

    Matrix R = cfg.lambda_r * (Cr.transpose() * Cr) + cfg.lambda_c * (Cc.transpose() * Cc);
    Vector r = -N.transpose() * xv - 2.0 * (cfg.lambda_r * Cr + cfg.lambda_c * Cc).transpose() * ones;
    return QuboInstance(n, std::move(R), std::move(r), cfg.lambda_r, cfg.lambda_c, cfg.normalize);
}

QuboInstance build_qubo(const ValueVector& x, const OrderProgram& program) {
    return build_qubo(x, program, BuilderConfig::defaults_for(x.size()));
}

double qubo_objective(const QuboInstance& inst, std::span<const int> z) {
    if (z.size() != inst.dimension()) {
        throw DimensionMismatch("state has length " + std::to_string(z.size()) +
                                ", instance dimension is " + std::to_string(inst.dimension()));
    }
    Vector zv(static_cast<Eigen::Index>(z.size()));
    for (std::size_t k = 0; k < z.size(); ++k) zv[static_cast<Eigen::Index>(k)] = z[k];
    return zv.dot(inst.R() * zv) + inst.r().dot(zv);
}

}  // namespace qorder

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

#include "qorder/core.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qorder {

namespace {

bool is_symmetric(const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - m(j, i)) > kSymmetryTolerance) return false;
        }
    }
    return true;
}

void check_square_pair(const Matrix& m, const Vector& v, const char* what) {
    if (m.rows() != m.cols() || m.rows() != v.size()) {
        throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) + " but vector has length " +
                                std::to_string(v.size()));
    }
    if (!is_symmetric(m)) throw DomainError(std::string(what) + ": matrix is not symmetric");
}

void check_zero_diagonal(const Matrix& m, const char* what) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 0.0) {
            throw NonZeroDiagonal(std::string(what) + ": diagonal entry " + std::to_string(i) +
                                  " is " + std::to_string(m(i, i)));
        }
    }
}

}  // namespace

ValueVector::ValueVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidSize("ValueVector needs at least one entry");
    for (double e : entries_) {
        if (!std::isfinite(e)) throw DomainError("ValueVector entries must be finite");
        l1_norm_ += std::abs(e);
    }
    if (l1_norm_ > 0.0) {
        std::vector<double> normalized(entries_.size());
        for (std::size_t i = 0; i < entries_.size(); ++i) normalized[i] = entries_[i] / l1_norm_;
        normalized_ = std::move(normalized);
    }
}

const std::vector<double>& ValueVector::normalized_entries() const {
    if (!normalized_) throw ZeroVector("cannot L1-normalize an all-zero vector");
    return *normalized_;
}

std::string_view to_string(ProgramKind kind) noexcept {
    switch (kind) {
        case ProgramKind::ascending: return "ascending";
        case ProgramKind::descending: return "descending";
        case ProgramKind::bst: return "bst";
        case ProgramKind::heap: return "heap";
        case ProgramKind::custom: return "custom";
    }
    return "custom";
}

ProgramKind parse_program_kind(std::string_view name) {
    for (auto kind : {ProgramKind::ascending, ProgramKind::descending, ProgramKind::bst,
                      ProgramKind::heap, ProgramKind::custom}) {
        if (to_string(kind) == name) return kind;
    }
    throw InvalidProgram("unknown program kind '" + std::string(name) + "'");
}

OrderProgram::OrderProgram(std::vector<int> ranks, ProgramKind kind, int branching)
        : ranks_(std::move(ranks)), kind_(kind), branching_(branching) {
    if (ranks_.empty()) throw InvalidProgram("program must have at least one rank");
    if (branching_ < 2) throw InvalidConfig("branching factor must be at least 2");
    const auto n = static_cast<int>(ranks_.size());
    std::vector<bool> seen(ranks_.size(), false);
    for (int rank : ranks_) {
        if (rank < 1 || rank > n || seen[rank - 1]) {
            throw InvalidProgram("ranks must be a permutation of 1.." + std::to_string(n));
        }
        seen[rank - 1] = true;
    }
}

QuboInstance::QuboInstance(std::size_t source_n, Matrix R, Vector r, double lambda_r,
                           double lambda_c, bool normalized)
        : source_n_(source_n),
          R_(std::move(R)),
          r_(std::move(r)),
          lambda_r_(lambda_r),
          lambda_c_(lambda_c),
          normalized_(normalized) {
    if (source_n_ < 1) throw InvalidSize("QUBO instance needs n >= 1");
    check_square_pair(R_, r_, "QuboInstance");
    if (static_cast<std::size_t>(r_.size()) != source_n_ * source_n_) {
        throw DimensionMismatch("QUBO dimension " + std::to_string(r_.size()) +
                                " is not n^2 for n = " + std::to_string(source_n_));
    }
}

IsingInstance::IsingInstance(Matrix Q, Vector q) : Q_(std::move(Q)), q_(std::move(q)) {
    check_square_pair(Q_, q_, "IsingInstance");
    check_zero_diagonal(Q_, "IsingInstance");
}

HopfieldInstance::HopfieldInstance(Matrix W, Vector theta)
        : W_(std::move(W)), theta_(std::move(theta)) {
    check_square_pair(W_, theta_, "HopfieldInstance");
    check_zero_diagonal(W_, "HopfieldInstance");
}

PermutationMatrix::PermutationMatrix(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    const auto n = static_cast<int>(mapping_.size());
    if (n == 0) throw NotAPermutation("empty permutation");
    std::vector<bool> used(mapping_.size(), false);
    for (int column : mapping_) {
        if (column < 0 || column >= n || used[column]) {
            throw NotAPermutation("mapping is not a permutation of 0.." + std::to_string(n - 1));
        }
        used[column] = true;
    }
}

PermutationMatrix PermutationMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw NotAPermutation("permutation matrix must be square and non-empty");
    }
    const auto n = m.rows();
    std::vector<int> mapping(n, -1);
    std::vector<int> column_sums(n, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        int row_sum = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v == 1.0) {
                ++row_sum;
                ++column_sums[j];
                mapping[i] = static_cast<int>(j);
            } else if (v != 0.0) {
                throw NotAPermutation("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") is not binary");
            }
        }
        if (row_sum != 1) {
            throw NotAPermutation("row " + std::to_string(i) + " sums to " +
                                  std::to_string(row_sum));
        }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        if (column_sums[j] != 1) {
            throw NotAPermutation("column " + std::to_string(j) + " sums to " +
                                  std::to_string(column_sums[j]));
        }
    }
    return PermutationMatrix(std::move(mapping));
}

PermutationMatrix PermutationMatrix::identity(std::size_t n) {
    std::vector<int> mapping(n);
    for (std::size_t i = 0; i < n; ++i) mapping[i] = static_cast<int>(i);
    return PermutationMatrix(std::move(mapping));
}

Matrix PermutationMatrix::matrix() const {
    const auto n = static_cast<Eigen::Index>(mapping_.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, mapping_[i]) = 1.0;
    return m;
}

Vector vectorize(const Matrix& m) {
    // Eigen storage is column-major, so the reshaped view stacks columns.
    return m.reshaped();
}

std::size_t exact_sqrt(std::size_t length) {
    auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(length))));
    while (n * n > length) --n;
    while ((n + 1) * (n + 1) <= length) ++n;
    if (n * n != length) {
        throw NonSquareLength("length " + std::to_string(length) + " is not a perfect square");
    }
    return n;
}

Matrix matricize(const Vector& v) {
    const auto n = static_cast<Eigen::Index>(exact_sqrt(static_cast<std::size_t>(v.size())));
    return v.reshaped(n, n);
}

PermutationMatrix decode_permutation(std::span<const int> z) {
    const auto n = exact_sqrt(z.size());
    if (n == 0) throw NotAPermutation("empty state");
    Vector v(static_cast<Eigen::Index>(z.size()));
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k] != 0 && z[k] != 1) {
            throw DomainError("state entry " + std::to_string(k) + " is not binary");
        }
        v[static_cast<Eigen::Index>(k)] = z[k];
    }
    return PermutationMatrix::from_matrix(matricize(v));
}

BinaryState encode_permutation(const PermutationMatrix& p) {
    const std::size_t n = p.size();
    BinaryState z(n * n, 0);
    const auto& mapping = p.as_mapping();
    // Row i, column mapping[i] lands at mapping[i] * n + i under column stacking.
    for (std::size_t i = 0; i < n; ++i) z[static_cast<std::size_t>(mapping[i]) * n + i] = 1;
    return z;
}

std::vector<double> apply_permutation(const PermutationMatrix& p, const ValueVector& x) {
    if (p.size() != x.size()) {
        throw DimensionMismatch("permutation of size " + std::to_string(p.size()) +
                                " applied to vector of length " + std::to_string(x.size()));
    }
    std::vector<double> y(x.size());
    const auto& mapping = p.as_mapping();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = x.entries()[mapping[i]];
    return y;
}

}  // namespace qorder

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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qorder/errors.hpp"

namespace qorder {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Entries in {0, 1}.
using BinaryState = std::vector<int>;
/// Entries in {-1, +1}.
using BipolarState = std::vector<int>;

/// Tolerance used when checking that a stored matrix is symmetric.
inline constexpr double kSymmetryTolerance = 1e-12;

/// The numbers to be arranged, together with their L1-normalized copy.
///
/// The normalized copy is only defined when at least one entry is non-zero;
/// `normalized_entries()` throws ZeroVector otherwise.
class ValueVector {
 public:
    explicit ValueVector(std::vector<double> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<double>& entries() const noexcept { return entries_; }

    bool has_normalized() const noexcept { return normalized_.has_value(); }
    const std::vector<double>& normalized_entries() const;

    double l1_norm() const noexcept { return l1_norm_; }

 private:
    std::vector<double> entries_;
    std::optional<std::vector<double>> normalized_;
    double l1_norm_ = 0.0;
};

enum class ProgramKind { ascending, descending, bst, heap, custom };

std::string_view to_string(ProgramKind kind) noexcept;
/// Throws InvalidProgram on an unknown name.
ProgramKind parse_program_kind(std::string_view name);

/// The rank vector that prescribes the target arrangement. Slot i of the
/// output receives the input whose rank among all inputs is ranks()[i].
class OrderProgram {
 public:
    /// Throws InvalidProgram unless `ranks` is a permutation of 1..n, and
    /// InvalidConfig if branching < 2.
    explicit OrderProgram(std::vector<int> ranks, ProgramKind kind = ProgramKind::custom,
                          int branching = 2);

    std::size_t size() const noexcept { return ranks_.size(); }
    const std::vector<int>& ranks() const noexcept { return ranks_; }
    ProgramKind kind() const noexcept { return kind_; }
    int branching() const noexcept { return branching_; }

    bool operator==(const OrderProgram&) const = default;

 private:
    std::vector<int> ranks_;
    ProgramKind kind_;
    int branching_;
};

/// Minimize z^T R z + <r, z> over z in {0,1}^N with N = source_n^2.
class QuboInstance {
 public:
    QuboInstance(std::size_t source_n, Matrix R, Vector r, double lambda_r, double lambda_c,
                 bool normalized);

    std::size_t source_n() const noexcept { return source_n_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(r_.size()); }
    const Matrix& R() const noexcept { return R_; }
    const Vector& r() const noexcept { return r_; }
    double lambda_r() const noexcept { return lambda_r_; }
    double lambda_c() const noexcept { return lambda_c_; }
    bool normalized() const noexcept { return normalized_; }

 private:
    std::size_t source_n_;
    Matrix R_;
    Vector r_;
    double lambda_r_;
    double lambda_c_;
    bool normalized_;
};

/// Minimize s^T Q s + <q, s> over s in {-1,+1}^N. Q has an exactly zero diagonal.
class IsingInstance {
 public:
    IsingInstance(Matrix Q, Vector q);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(q_.size()); }
    const Matrix& Q() const noexcept { return Q_; }
    const Vector& q() const noexcept { return q_; }

 private:
    Matrix Q_;
    Vector q_;
};

/// Hopfield network with energy -1/2 s^T W s + <theta, s>. W is symmetric with
/// an exactly zero diagonal.
class HopfieldInstance {
 public:
    HopfieldInstance(Matrix W, Vector theta);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(theta_.size()); }
    const Matrix& W() const noexcept { return W_; }
    const Vector& theta() const noexcept { return theta_; }

 private:
    Matrix W_;
    Vector theta_;
};

/// Square binary matrix with a single one in every row and column, stored as
/// the column index of the one in each row.
class PermutationMatrix {
 public:
    /// Throws NotAPermutation unless `mapping` is a permutation of 0..n-1.
    explicit PermutationMatrix(std::vector<int> mapping);

    /// Throws NotAPermutation if `m` is not square, not binary, or some row or
    /// column does not sum to one.
    static PermutationMatrix from_matrix(const Matrix& m);

    static PermutationMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return mapping_.size(); }
    const std::vector<int>& as_mapping() const noexcept { return mapping_; }
    Matrix matrix() const;

    bool operator==(const PermutationMatrix&) const = default;

 private:
    std::vector<int> mapping_;
};

struct TraceStep {
    int t;
    BipolarState state;
    double energy;
};

/// Time-indexed states and energies of one descent run. When the run converged
/// the last step repeats the stable state.
struct SolverTrace {
    std::vector<TraceStep> steps;
    bool converged = false;
    int flips = 0;
};

/// Stacks the columns of `m`.
Vector vectorize(const Matrix& m);

/// Inverse of vectorize. Throws NonSquareLength unless v.size() is a perfect square.
Matrix matricize(const Vector& v);

/// Returns n with n * n == length, or throws NonSquareLength.
std::size_t exact_sqrt(std::size_t length);

/// P = mat(z). Throws NonSquareLength or NotAPermutation; infeasible states are
/// reported, never repaired.
PermutationMatrix decode_permutation(std::span<const int> z);

/// z = vec(P), the binary state that decode_permutation maps back to P.
BinaryState encode_permutation(const PermutationMatrix& p);

/// y = P x on the original (un-normalized) entries.
std::vector<double> apply_permutation(const PermutationMatrix& p, const ValueVector& x);

}  // namespace qorder

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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "unit/test_support.hpp"

using Catch::Matchers::RangeEquals;

namespace qorder {

TEST_CASE("ValueVector") {
    GIVEN("Mixed-sign entries") {
        const ValueVector x(testing::kReferenceInput);

        THEN("the normalized entries divide by the L1 norm") {
            CHECK(x.l1_norm() == 228.0);
            REQUIRE(x.has_normalized());
            double total = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                CHECK(x.normalized_entries()[i] == x.entries()[i] / 228.0);
                total += std::abs(x.normalized_entries()[i]);
            }
            CHECK(std::abs(total - 1.0) <= 1e-12);
        }
    }

    GIVEN("An all-zero vector") {
        const ValueVector x({0.0, 0.0, 0.0});
        THEN("normalization is undefined") {
            CHECK_FALSE(x.has_normalized());
            CHECK_THROWS_AS(x.normalized_entries(), ZeroVector);
        }
    }

    THEN("empty and non-finite inputs are rejected") {
        CHECK_THROWS_AS(ValueVector({}), InvalidSize);
        CHECK_THROWS_AS(ValueVector({1.0, std::numeric_limits<double>::quiet_NaN()}), DomainError);
        CHECK_THROWS_AS(ValueVector({std::numeric_limits<double>::infinity()}), DomainError);
    }
}

TEST_CASE("OrderProgram rejects ranks that are not a permutation of 1..n") {
    CHECK_NOTHROW(OrderProgram({2, 1, 3}));
    CHECK_THROWS_AS(OrderProgram({}), InvalidProgram);
    CHECK_THROWS_AS(OrderProgram({1, 1, 2}), InvalidProgram);
    CHECK_THROWS_AS(OrderProgram({0, 1, 2}), InvalidProgram);
    CHECK_THROWS_AS(OrderProgram({1, 2, 4}), InvalidProgram);
    CHECK_THROWS_AS(OrderProgram({1, 2}, ProgramKind::heap, 1), InvalidConfig);
}

TEST_CASE("Program kind names") {
    for (auto kind : {ProgramKind::ascending, ProgramKind::descending, ProgramKind::bst,
                      ProgramKind::heap, ProgramKind::custom}) {
        CHECK(parse_program_kind(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_program_kind("tree"), InvalidProgram);
}

TEST_CASE("vectorize stacks columns") {
    Matrix m(2, 2);
    m << 1, 2, 3, 4;
    const Vector v = vectorize(m);
    CHECK_THAT(std::vector<double>(v.begin(), v.end()),
               RangeEquals(std::vector<double>{1, 3, 2, 4}));

    const Vector id = vectorize(Matrix::Identity(2, 2));
    CHECK_THAT(std::vector<double>(id.begin(), id.end()),
               RangeEquals(std::vector<double>{1, 0, 0, 1}));

    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 8; ++n) {
        const Matrix r = testing::random_matrix(n, n, rng);
        CHECK(matricize(vectorize(r)) == r);
    }

    CHECK_THROWS_AS(matricize(Vector::Zero(3)), NonSquareLength);
    CHECK_THROWS_AS(matricize(Vector::Zero(8)), NonSquareLength);
    CHECK(matricize(Vector::Zero(0)).size() == 0);
}

TEST_CASE("exact_sqrt") {
    CHECK(exact_sqrt(0) == 0);
    CHECK(exact_sqrt(1) == 1);
    CHECK(exact_sqrt(49) == 7);
    CHECK(exact_sqrt(961) == 31);
    CHECK_THROWS_AS(exact_sqrt(50), NonSquareLength);
}

TEST_CASE("PermutationMatrix") {
    CHECK(PermutationMatrix::identity(3).as_mapping() == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(PermutationMatrix({0, 0}), NotAPermutation);
    CHECK_THROWS_AS(PermutationMatrix({1, 2}), NotAPermutation);
    CHECK_THROWS_AS(PermutationMatrix(std::vector<int>{}), NotAPermutation);

    const PermutationMatrix p({2, 0, 1});
    const Matrix m = p.matrix();
    CHECK(m.rowwise().sum() == Vector::Ones(3));
    CHECK(m.colwise().sum() == Eigen::RowVectorXd::Ones(3));
    CHECK(PermutationMatrix::from_matrix(m) == p);

    Matrix two_in_row = Matrix::Zero(2, 2);
    two_in_row(0, 0) = two_in_row(0, 1) = 1;
    CHECK_THROWS_AS(PermutationMatrix::from_matrix(two_in_row), NotAPermutation);
    Matrix fractional = Matrix::Identity(2, 2);
    fractional(0, 0) = 0.5;
    CHECK_THROWS_AS(PermutationMatrix::from_matrix(fractional), NotAPermutation);
    CHECK_THROWS_AS(PermutationMatrix::from_matrix(Matrix::Zero(2, 3)), NotAPermutation);
}

TEST_CASE("decode_permutation") {
    SECTION("identity") {
        CHECK(decode_permutation(std::vector<int>{1, 0, 0, 1}) == PermutationMatrix::identity(2));
    }
    SECTION("swap") {
        const auto p = decode_permutation(std::vector<int>{0, 1, 1, 0});
        CHECK(p.as_mapping() == std::vector<int>{1, 0});
        Matrix swap(2, 2);
        swap << 0, 1, 1, 0;
        CHECK(p.matrix() == swap);
    }
    SECTION("infeasible states are reported, not repaired") {
        CHECK_THROWS_AS(decode_permutation(std::vector<int>{1, 1, 0, 1}), NotAPermutation);
        CHECK_THROWS_AS(decode_permutation(std::vector<int>{0, 0, 0, 0}), NotAPermutation);
        CHECK_THROWS_AS(decode_permutation(std::vector<int>{1, 0, 1}), NonSquareLength);
        CHECK_THROWS_AS(decode_permutation(std::vector<int>{2, 0, 0, 1}), DomainError);
    }
    SECTION("a column-stacked permutation decodes to itself") {
        std::mt19937_64 rng(11);
        for (std::size_t n = 1; n <= 12; ++n) {
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<int> mapping(n);
                std::iota(mapping.begin(), mapping.end(), 0);
                std::shuffle(mapping.begin(), mapping.end(), rng);
                const auto z = testing::encode_by_hand(mapping);
                CHECK(decode_permutation(z).as_mapping() == mapping);
                CHECK(encode_permutation(PermutationMatrix(mapping)) == z);
            }
        }
    }
    SECTION("the converged states of the reference runs") {
        const ValueVector x(testing::kReferenceInput);
        const auto decode = [&](const std::string& row) {
            const auto p = decode_permutation(bipolar_to_binary(testing::parse_glyphs(row)));
            return apply_permutation(p, x);
        };
        CHECK(decode(testing::kSortTraceStates.back()) == testing::kSortedOutput);
        CHECK(decode(testing::kTreeTraceStates.back()) == testing::kTreeOutput);
        CHECK(decode(testing::kHeapTraceStates.back()) == testing::kHeapOutput);
    }
}

TEST_CASE("apply_permutation") {
    const ValueVector x(testing::kReferenceInput);
    CHECK(apply_permutation(PermutationMatrix::identity(7), x) == testing::kReferenceInput);
    CHECK(apply_permutation(PermutationMatrix({2, 4, 6, 3, 0, 5, 1}), x) == testing::kSortedOutput);
    CHECK(apply_permutation(PermutationMatrix({1, 6, 5, 2, 4, 3, 0}), x) == testing::kHeapOutput);
    CHECK_THROWS_AS(apply_permutation(PermutationMatrix::identity(3), x), DimensionMismatch);

    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto values = testing::random_distinct(n, rng);
        std::vector<int> mapping(n);
        std::iota(mapping.begin(), mapping.end(), 0);
        std::shuffle(mapping.begin(), mapping.end(), rng);
        auto y = apply_permutation(PermutationMatrix(mapping), ValueVector(values));
        auto sorted_in = values;
        std::sort(sorted_in.begin(), sorted_in.end());
        std::sort(y.begin(), y.end());
        CHECK(y == sorted_in);
    }
}

TEST_CASE("Instances validate their shape") {
    CHECK_THROWS_AS(QuboInstance(2, Matrix::Zero(3, 3), Vector::Zero(3), 1, 1, true),
                    DimensionMismatch);
    CHECK_THROWS_AS(QuboInstance(2, Matrix::Zero(4, 4), Vector::Zero(3), 1, 1, true),
                    DimensionMismatch);
    Matrix asym = Matrix::Zero(4, 4);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(QuboInstance(2, asym, Vector::Zero(4), 1, 1, true), DomainError);
    CHECK_THROWS_AS(IsingInstance(Matrix::Identity(2, 2), Vector::Zero(2)), NonZeroDiagonal);
    CHECK_THROWS_AS(HopfieldInstance(Matrix::Identity(2, 2), Vector::Zero(2)), NonZeroDiagonal);
    CHECK_NOTHROW(HopfieldInstance(Matrix::Zero(2, 2), Vector::Zero(2)));
}

}  // namespace qorder

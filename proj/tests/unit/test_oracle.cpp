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

namespace qorder {

TEST_CASE("best_permutation") {
    SECTION("three items") {
        const auto best = best_permutation(ValueVector({3, 1, 2}), ascending_program(3));
        CHECK(best.permutation.as_mapping() == std::vector<int>{1, 2, 0});
        CHECK(best.objective == -(1 * 1 + 2 * 2 + 3 * 3));
    }

    SECTION("reference heap") {
        const ValueVector x(testing::kReferenceInput);
        const auto best = best_permutation(x, heap_program(7));
        CHECK(best.permutation.as_mapping() == std::vector<int>{1, 6, 5, 2, 4, 3, 0});
        CHECK(apply_permutation(best.permutation, x) == testing::kHeapOutput);
    }

    SECTION("ties keep the lexicographically first mapping") {
        CHECK(best_permutation(ValueVector({5, 5}), ascending_program(2)).permutation ==
              PermutationMatrix::identity(2));
        CHECK(best_permutation(ValueVector({2, 7, 2}), ascending_program(3))
                  .permutation.as_mapping() == std::vector<int>{0, 2, 1});
    }

    SECTION("errors") {
        CHECK_THROWS_AS(best_permutation(ValueVector(std::vector<double>(11, 1.0)),
                                         ascending_program(11)),
                        SizeBudgetExceeded);
        CHECK_THROWS_AS(best_permutation(ValueVector({1, 2}), ascending_program(3)),
                        DimensionMismatch);
    }

    SECTION("agrees with a comparison sort for the ascending program") {
        std::mt19937_64 rng(51);
        for (std::size_t n = 1; n <= 8; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                auto values = testing::random_distinct(n, rng);
                const ValueVector x(values);
                const auto best = best_permutation(x, ascending_program(static_cast<int>(n)));
                std::sort(values.begin(), values.end());
                CHECK(apply_permutation(best.permutation, x) == values);
                std::sort(values.begin(), values.end(), std::greater<>());
                const auto desc = best_permutation(x, descending_program(static_cast<int>(n)));
                CHECK(apply_permutation(desc.permutation, x) == values);
            }
        }
    }
}

TEST_CASE("ordering_objective") {
    const ValueVector x({3, 1, 2});
    CHECK(ordering_objective(x, ascending_program(3), PermutationMatrix::identity(3)) ==
          -(3 + 2 + 6));
    CHECK_THROWS_AS(ordering_objective(x, ascending_program(2), PermutationMatrix::identity(2)),
                    DimensionMismatch);
    CHECK(objectives_equal(1.0, 1.0 + 1e-12));
    CHECK_FALSE(objectives_equal(1.0, 1.001));
}

TEST_CASE("exhaustive_qubo_min") {
    SECTION("positive linear terms keep everything off") {
        const QuboInstance inst(2, Matrix::Zero(4, 4), Vector::Ones(4), 1, 1, true);
        const auto best = exhaustive_qubo_min(inst);
        CHECK(best.z == BinaryState(4, 0));
        CHECK(best.value == 0.0);
    }

    SECTION("negative linear terms turn everything on") {
        const QuboInstance inst(2, Matrix::Zero(4, 4), -Vector::Ones(4), 1, 1, true);
        const auto best = exhaustive_qubo_min(inst);
        CHECK(best.z == BinaryState(4, 1));
        CHECK(best.value == -4.0);
    }

    SECTION("a flat objective keeps the zero state") {
        const QuboInstance inst(2, Matrix::Zero(4, 4), Vector::Zero(4), 1, 1, true);
        CHECK(exhaustive_qubo_min(inst).z == BinaryState(4, 0));
    }

    SECTION("matches a plain loop over all states") {
        std::mt19937_64 rng(52);
        for (int trial = 0; trial < 10; ++trial) {
            const auto inst = build_qubo(ValueVector(testing::random_distinct(3, rng)),
                                         trial % 2 ? heap_program(3) : bst_program(3));
            double best = std::numeric_limits<double>::infinity();
            BinaryState arg;
            for (std::uint64_t code = 0; code < 512; ++code) {
                const auto z = testing::bits_of(code, 9);
                const double v = testing::direct_objective(inst.R(), inst.r(), z);
                if (v < best - 1e-12) {
                    best = v;
                    arg = z;
                }
            }
            const auto found = exhaustive_qubo_min(inst);
            CHECK(found.z == arg);
            CHECK(std::abs(found.value - best) <= 1e-9);
        }
    }

    SECTION("size budget") {
        const QuboInstance inst(5, Matrix::Zero(25, 25), Vector::Zero(25), 1, 1, true);
        CHECK_THROWS_AS(exhaustive_qubo_min(inst), SizeBudgetExceeded);
    }
}

TEST_CASE("certify") {
    const ValueVector x(testing::kReferenceInput);
    const auto cfg = BuilderConfig::defaults_for(7);

    SECTION("reference sort") {
        const auto report = certify(x, ascending_program(7), cfg,
                                    testing::parse_glyphs(testing::kSortTraceStates.back()));
        CHECK(report.passed());
        CHECK(report.output == testing::kSortedOutput);
        CHECK_FALSE(report.structure_valid.has_value());
        CHECK_FALSE(report.objective_tie);
        CHECK(report.failure.empty());
    }

    SECTION("reference tree") {
        const auto report = certify(x, bst_program(7), cfg,
                                    testing::parse_glyphs(testing::kTreeTraceStates.back()));
        CHECK(report.passed());
        REQUIRE(report.structure_valid.has_value());
        CHECK(*report.structure_valid);
        CHECK(report.output == testing::kTreeOutput);
    }

    SECTION("a corrupted state is infeasible") {
        auto s = testing::parse_glyphs(testing::kSortTraceStates.back());
        s[0] = 1;
        const auto report = certify(x, ascending_program(7), cfg, s);
        CHECK_FALSE(report.feasible);
        CHECK_FALSE(report.passed());
        CHECK_FALSE(report.failure.empty());
    }

    SECTION("a feasible but suboptimal state") {
        const auto z = encode_permutation(PermutationMatrix::identity(7));
        const auto report = certify(x, ascending_program(7), cfg, binary_to_bipolar(z));
        CHECK(report.feasible);
        CHECK_FALSE(report.optimal);
        CHECK(report.output == testing::kReferenceInput);
    }

    SECTION("the QUBO value includes the constant penalty") {
        const auto report = certify(x, heap_program(7), cfg,
                                    testing::parse_glyphs(testing::kHeapTraceStates.back()));
        CHECK(report.passed());
        const double penalty = -(cfg.lambda_r + cfg.lambda_c) * 7.0;
        CHECK(std::abs(report.qubo_value - (report.achieved_objective / x.l1_norm() + penalty)) <=
              1e-9);
    }
}

}  // namespace qorder

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
#include <vector>

#include "qorder/core.hpp"

namespace qorder {

/// Complete b-ary tree of `size` vertices serialized breadth-first. The
/// children of slot i are slots b*i+1 .. b*i+b; indices >= size are absent.
struct TreeShape {
    std::size_t size = 1;
    int branching = 2;

    /// Throws InvalidSize (size < 1) or InvalidConfig (branching < 2).
    TreeShape(std::size_t size, int branching = 2);

    /// Present children of `slot`, left to right.
    std::vector<std::size_t> children(std::size_t slot) const;
};

OrderProgram ascending_program(int n);
OrderProgram descending_program(int n);

/// Ranks of a complete binary search tree: slot i holds the in-order position
/// of vertex i. Only b == 2 is accepted.
OrderProgram bst_program(int n, int b = 2);

/// Canonical max-heap ranks: the root takes n and the remaining ranks are
/// handed to the child subtrees as contiguous blocks, lowest block leftmost.
OrderProgram heap_program(int n, int b = 2);

/// Builds the program for `kind` (ascending, descending, bst or heap).
OrderProgram make_program(ProgramKind kind, int n, int b = 2);

/// Full search-tree property: every left descendant of a vertex is strictly
/// smaller and every right descendant strictly larger. False for non-binary
/// shapes and size mismatches.
bool validate_bst(std::span<const double> values, const TreeShape& shape);

/// values[i] >= values[c] for every present child c of every slot i.
bool validate_heap(std::span<const double> values, const TreeShape& shape);

/// Places the k-th smallest value at the slot that holds rank k.
std::vector<double> arrange_by_ranks(std::span<const double> values, const OrderProgram& program);

}  // namespace qorder

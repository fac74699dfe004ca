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

#include "qorder/order_programs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qorder {

namespace {

void check_size(int n) {
    if (n < 1) throw InvalidSize("program size must be at least 1, got " + std::to_string(n));
}

std::size_t subtree_size(const TreeShape& shape, std::size_t slot) {
    std::size_t count = 1;
    for (auto child : shape.children(slot)) count += subtree_size(shape, child);
    return count;
}

void assign_inorder(const TreeShape& shape, std::size_t slot, int& next, std::vector<int>& ranks) {
    if (slot >= shape.size) return;
    assign_inorder(shape, 2 * slot + 1, next, ranks);
    ranks[slot] = next++;
    assign_inorder(shape, 2 * slot + 2, next, ranks);
}

// Ranks lowest..lowest+subtree_size-1 go to the subtree rooted at slot.
void assign_heap_block(const TreeShape& shape, std::size_t slot, int lowest,
                       std::vector<int>& ranks) {
    ranks[slot] = lowest + static_cast<int>(subtree_size(shape, slot)) - 1;
    for (auto child : shape.children(slot)) {
        assign_heap_block(shape, child, lowest, ranks);
        lowest += static_cast<int>(subtree_size(shape, child));
    }
}

void collect_inorder(std::span<const double> values, std::size_t slot,
                     std::vector<double>& out) {
    if (slot >= values.size()) return;
    collect_inorder(values, 2 * slot + 1, out);
    out.push_back(values[slot]);
    collect_inorder(values, 2 * slot + 2, out);
}

}  // namespace

TreeShape::TreeShape(std::size_t size, int branching) : size(size), branching(branching) {
    if (size < 1) throw InvalidSize("tree needs at least one vertex");
    if (branching < 2) throw InvalidConfig("branching factor must be at least 2");
}

std::vector<std::size_t> TreeShape::children(std::size_t slot) const {
    std::vector<std::size_t> out;
    const auto b = static_cast<std::size_t>(branching);
    for (std::size_t k = 1; k <= b; ++k) {
        const std::size_t child = b * slot + k;
        if (child >= size) break;
        out.push_back(child);
    }
    return out;
}

OrderProgram ascending_program(int n) {
    check_size(n);
    std::vector<int> ranks(static_cast<std::size_t>(n));
    std::iota(ranks.begin(), ranks.end(), 1);
    return OrderProgram(std::move(ranks), ProgramKind::ascending);
}

OrderProgram descending_program(int n) {
    check_size(n);
    std::vector<int> ranks(static_cast<std::size_t>(n));
    std::iota(ranks.rbegin(), ranks.rend(), 1);
    return OrderProgram(std::move(ranks), ProgramKind::descending);
}

OrderProgram bst_program(int n, int b) {
    check_size(n);
    if (b != 2) {
        throw UnsupportedBranching("search trees are binary; got branching " + std::to_string(b));
    }
    const TreeShape shape(static_cast<std::size_t>(n), 2);
    std::vector<int> ranks(shape.size, 0);
    int next = 1;
    assign_inorder(shape, 0, next, ranks);
    return OrderProgram(std::move(ranks), ProgramKind::bst, 2);
}

OrderProgram heap_program(int n, int b) {
    check_size(n);
    const TreeShape shape(static_cast<std::size_t>(n), b);
    std::vector<int> ranks(shape.size, 0);
    assign_heap_block(shape, 0, 1, ranks);
    return OrderProgram(std::move(ranks), ProgramKind::heap, b);
}

OrderProgram make_program(ProgramKind kind, int n, int b) {
    switch (kind) {
        case ProgramKind::ascending: return ascending_program(n);
        case ProgramKind::descending: return descending_program(n);
        case ProgramKind::bst: return bst_program(n, b);
        case ProgramKind::heap: return heap_program(n, b);
        case ProgramKind::custom: break;
    }
    throw InvalidProgram("custom programs need explicit ranks");
}

bool validate_bst(std::span<const double> values, const TreeShape& shape) {
    if (shape.branching != 2 || values.size() != shape.size) return false;
    // Strictly increasing in-order sequence <=> every subtree respects the bounds.
    std::vector<double> inorder;
    inorder.reserve(values.size());
    collect_inorder(values, 0, inorder);
    return std::adjacent_find(inorder.begin(), inorder.end(),
                              [](double a, double b) { return !(a < b); }) == inorder.end();
}

bool validate_heap(std::span<const double> values, const TreeShape& shape) {
    if (values.size() != shape.size) return false;
    for (std::size_t slot = 0; slot < shape.size; ++slot) {
        for (auto child : shape.children(slot)) {
            if (!(values[slot] >= values[child])) return false;
        }
    }
    return true;
}

std::vector<double> arrange_by_ranks(std::span<const double> values,
                                     const OrderProgram& program) {
    if (values.size() != program.size()) {
        throw DimensionMismatch("program of size " + std::to_string(program.size()) +
                                " applied to " + std::to_string(values.size()) + " values");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out(values.size());
    for (std::size_t slot = 0; slot < out.size(); ++slot) {
        out[slot] = sorted[static_cast<std::size_t>(program.ranks()[slot] - 1)];
    }
    return out;
}

}  // namespace qorder
